#pragma once

#include <map>
#include <string>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/ring.hpp"
#include "tl/sparse_matrix.hpp"

namespace tl {

/// A subset F of the generator indices {0, ..., s-2} with pairwise gaps >= 2.
struct InnermostSet {
    int generator_count = 0;  // s - 1
    std::vector<int> members;  // sorted

    InnermostSet() = default;
    InnermostSet(int generator_count_, std::vector<int> members_);  // validates

    std::size_t cardinality() const { return members.size(); }
    bool empty() const { return members.empty(); }
    bool contains(int i) const;
    InnermostSet without(int i) const;  // F_s = F - {i}; i must be a member

    bool operator==(const InnermostSet&) const = default;
    std::string encode() const;  // "{0,2}", "{}" for the empty set
};

/// All innermost subsets of {0, ..., s-2}, ordered by (cardinality, lex).
/// Counts grow like Fibonacci: 2, 3, 5, 8, 13 for s = 2..6.
std::vector<InnermostSet> innermost_sets(int s);

/// For even s the unique innermost set of maximal cardinality {0, 2, ..., s-2}.
/// Odd s is rejected: several maximal sets exist.
InnermostSet unique_maximal_innermost(int s);

/// Basis of the cup module <F>: the diagrams A with F contained in the right
/// cups of A, in canonical enumeration order.
struct CupModuleBasis {
    InnermostSet F;
    std::vector<std::size_t> diagram_indices;            // into DiagramAlgebra basis
    std::map<std::size_t, std::size_t> position_of;      // basis index -> position

    std::size_t size() const { return diagram_indices.size(); }
};

CupModuleBasis cup_basis(const DiagramAlgebra& algebra, const InnermostSet& F);

/// Element of TL_s: sparse combination of canonical basis diagrams.
struct AlgebraElement {
    int strands = 0;
    std::map<std::size_t, Scalar> coeffs;  // basis index -> nonzero coefficient

    bool is_zero() const { return coeffs.empty(); }
};

AlgebraElement diagram_element(const DiagramAlgebra& algebra, std::size_t index,
                               const Scalar& coeff = Scalar(1));
AlgebraElement add_elements(const AlgebraElement& x, const AlgebraElement& y,
                            const RingSpec& ring);
AlgebraElement multiply_elements(const DiagramAlgebra& algebra, const AlgebraElement& x,
                                 const AlgebraElement& y, const RingSpec& ring);

/// Coefficient of the identity diagram: the augmentation, an R-algebra map.
Scalar augment(const DiagramAlgebra& algebra, const AlgebraElement& x);

/// JSON rendering: {"strands":s,"terms":[[basis index,"coefficient"],...]}.
std::string element_to_json(const AlgebraElement& x);

/// Matrix of c |-> x*c on the basis of <F>; well defined because left
/// multiplication can only enlarge the set of right cups.
SparseMatrix left_action_matrix(const DiagramAlgebra& algebra, const AlgebraElement& x,
                                const CupModuleBasis& B, const RingSpec& ring);
SparseMatrix diagram_action_matrix(const DiagramAlgebra& algebra, std::size_t diagram_index,
                                   const CupModuleBasis& B, const RingSpec& ring);

}  // namespace tl
