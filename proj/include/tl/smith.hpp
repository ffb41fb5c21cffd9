#pragma once

#include <string>
#include <vector>

#include "tl/ring.hpp"
#include "tl/sparse_matrix.hpp"

namespace tl {

/// Invariant factors d_1 | d_2 | ... | d_r of a matrix. Over Z they are
/// positive; over a field they are all 1 and their count is the rank.
struct SmithForm {
    std::vector<mpz_class> invariant_factors;
    std::size_t rank() const { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const SparseMatrix& m, const RingSpec& ring);
std::size_t matrix_rank(const SparseMatrix& m, const RingSpec& ring);

/// A finitely generated module over the coefficient ring: free part plus
/// torsion invariant factors (each > 1, forming a divisibility chain; empty
/// over a field).
struct ModulePresentation {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const ModulePresentation&) const = default;
};

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);
std::string presentation_to_string(const ModulePresentation& p, const RingSpec& ring);

/// Presentation of ker(d_out) / im(d_in) for a composable pair with
/// d_out * d_in = 0 (checked; violation means the caller's complex is broken).
ModulePresentation homology_step(const SparseMatrix& d_out, const SparseMatrix& d_in,
                                 const RingSpec& ring);

/// Presentation of coker(m) = R^rows / im(m).
ModulePresentation cokernel_presentation(const SparseMatrix& m, const RingSpec& ring);

}  // namespace tl
