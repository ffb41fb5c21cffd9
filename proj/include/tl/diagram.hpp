#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace tl {

/// A noncrossing perfect matching on the 2s boundary points of a strip with s
/// strands. Points are numbered L0..L(s-1) = 0..s-1 and R0..R(s-1) = s..2s-1;
/// pairing[p] is the partner of point p. Noncrossing is with respect to the
/// boundary circle order L0, ..., L(s-1), R(s-1), ..., R0.
struct PlanarDiagram {
    int strands = 0;
    std::vector<int> pairing;

    PlanarDiagram() = default;
    PlanarDiagram(int s, std::vector<int> pairing_);  // validates

    bool operator==(const PlanarDiagram&) const = default;
    bool operator<(const PlanarDiagram& o) const { return pairing < o.pairing; }

    bool is_identity() const;
    std::string encode() const;  // e.g. "[2,3,0,1]" for the s=2 identity
};

struct MultiplicationResult {
    PlanarDiagram diagram;
    int loop_count = 0;
};

PlanarDiagram identity_diagram(int s);
PlanarDiagram generator_diagram(int s, int i);  // U_i, 0 <= i <= s-2
MultiplicationResult multiply(const PlanarDiagram& a, const PlanarDiagram& b);

/// All diagrams on s strands in canonical order (lexicographic by pairing);
/// Catalan(s) of them.
std::vector<PlanarDiagram> enumerate_diagrams(int s);

/// Innermost right cups of d: the i with Ri paired to R(i+1). Sorted; the
/// gaps between members are always >= 2.
std::vector<int> right_cups(const PlanarDiagram& d);

/// Left-to-right product of generators U_{word[0]} * ... with the accumulated
/// loop exponent; the empty word gives the identity.
std::pair<PlanarDiagram, int> diagram_from_word(int s, const std::vector<int>& word);

long long catalan(int n);

/// Canonical diagram basis of TL_s with index lookups, cached right-cup sets
/// and a lazily built multiplication table. Immutable after construction and
/// safe to share across threads.
class DiagramAlgebra {
  public:
    explicit DiagramAlgebra(int strands);

    int strands() const { return strands_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<PlanarDiagram>& basis() const { return basis_; }
    const PlanarDiagram& diagram(std::size_t i) const { return basis_[i]; }
    std::size_t identity_index() const { return identity_; }
    std::size_t index_of(const PlanarDiagram& d) const;
    const std::vector<int>& cups(std::size_t i) const { return cups_[i]; }

    // (product basis index, loop count) for basis[i] * basis[j].
    std::pair<std::size_t, int> mul(std::size_t i, std::size_t j) const;

  private:
    void build_table() const;

    int strands_;
    std::vector<PlanarDiagram> basis_;
    std::map<std::vector<int>, std::size_t> index_;
    std::size_t identity_ = 0;
    std::vector<std::vector<int>> cups_;
    mutable std::once_flag table_once_;
    mutable std::vector<std::pair<std::uint32_t, std::uint8_t>> table_;
};

}  // namespace tl
