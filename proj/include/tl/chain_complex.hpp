#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tl/ring.hpp"
#include "tl/smith.hpp"
#include "tl/sparse_matrix.hpp"

namespace tl {

/// Bounded chain complex of finitely generated free modules, degrees
/// 0..top_degree. differentials[k] maps degree k to degree k-1 and has shape
/// ranks[k-1] x ranks[k]; differentials[0] is the zero map out of degree 0.
struct FreeChainComplex {
    RingSpec ring;
    std::vector<std::size_t> ranks;
    std::vector<SparseMatrix> differentials;
    std::vector<std::vector<std::string>> basis_labels;  // optional, per degree

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    void check_shapes() const;  // throws on mismatched differential shapes
};

FreeChainComplex zero_differential_complex(const RingSpec& ring,
                                           std::vector<std::size_t> ranks);

/// True iff every composite differential vanishes; on failure reports the
/// first degree k with d_{k-1} * d_k != 0.
bool verify_d_squared(const FreeChainComplex& c, int* bad_degree = nullptr);

/// Homology in every degree 0..top_degree. Requires d^2 = 0 (checked). The
/// top degree has no incoming differential, so its entry is only meaningful
/// if the complex is not a truncation; truncation policy lives with callers.
std::vector<ModulePresentation> homology(const FreeChainComplex& c);

long long euler_characteristic(const FreeChainComplex& c);

std::string complex_to_json(const FreeChainComplex& c);

}  // namespace tl
