#pragma once

#include <vector>

#include "tl/algebra.hpp"
#include "tl/chain_complex.hpp"

namespace tl {

/// A diagram with |F| marked innermost right cups; F must be contained in the
/// right cups of the diagram.
struct MarkedDiagram {
    std::size_t diagram_index = 0;
    InnermostSet marks;
};

struct DavisBlock {
    InnermostSet F;
    CupModuleBasis basis;
    std::size_t offset = 0;  // first row/column of this block in its degree
};

/// The cellular Davis complex: degree alpha is the direct sum of the cup
/// modules <F> over innermost F with |F| = alpha, blocks in innermost_sets
/// order, diagrams in canonical order within each block.
struct DavisComplex {
    int strands = 0;
    FreeChainComplex complex;
    std::vector<std::vector<DavisBlock>> blocks;  // per degree

    MarkedDiagram basis_element(int degree, std::size_t position) const;
};

/// (-1)^{gamma_F(s)} with gamma_F(s) = #{s' in F : s' < s}; s must lie in F.
int sign_gamma(const InnermostSet& F, int s_elem);

DavisComplex build_davis(const DiagramAlgebra& algebra, const RingSpec& ring);

/// Restriction of the Davis complex to the marked diagrams with the given
/// first component. For a non-identity diagram this is the augmented simplex
/// boundary on its right-cup set, shifted up one degree; it is acyclic.
FreeChainComplex subcomplex_of_diagram(const DavisComplex& dc, std::size_t diagram_index);

/// The index pair of the retraction construction: either i-1 is uncovered and
/// s = i+1 lies in F (left case), or i is uncovered and s = i-2 lies in F
/// (right case). Rejects the empty set and the unique maximal innermost set.
struct AdjacentIndex {
    int i = 0;
    int s_elem = 0;
    bool left_case = false;
};

AdjacentIndex adjacent_index(const InnermostSet& F);

/// 0/1 matrix of the basis inclusion <F> into <F_s> for F_s a subset of F.
SparseMatrix inclusion_matrix(const CupModuleBasis& sub, const CupModuleBasis& super);

/// Matrix of the right-multiplication retraction <F_s> -> <F> from the
/// adjacent-index construction; composed with the inclusion it is the
/// identity on the basis of <F>.
SparseMatrix retraction_matrix(const DiagramAlgebra& algebra, const InnermostSet& F,
                               const RingSpec& ring);

/// Iterated retraction TL -> <F>, the matrix witness that <F> is a retract of
/// TL. For the empty set this is the identity.
SparseMatrix full_retraction_matrix(const DiagramAlgebra& algebra, const InnermostSet& F,
                                    const RingSpec& ring);

/// Presentation of <F> / (TLhat * <F>), the coinvariants of the cup module:
/// R for empty F; R/a for two strands and F = {0}; zero otherwise.
ModulePresentation coinvariants(const DiagramAlgebra& algebra, const InnermostSet& F,
                                const RingSpec& ring);

}  // namespace tl
