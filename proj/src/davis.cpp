#include "tl/davis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tl {

MarkedDiagram DavisComplex::basis_element(int degree, std::size_t position) const {
    for (const auto& block : blocks.at(degree)) {
        if (position < block.offset + block.basis.size())
            return MarkedDiagram{block.basis.diagram_indices[position - block.offset],
                                 block.F};
    }
    throw std::out_of_range("basis position out of range");
}

int sign_gamma(const InnermostSet& F, int s_elem) {
    if (!F.contains(s_elem))
        throw std::invalid_argument("sign_gamma: element not in F");
    int gamma = 0;
    for (int m : F.members)
        if (m < s_elem)
            ++gamma;
    return gamma % 2 == 0 ? 1 : -1;
}

DavisComplex build_davis(const DiagramAlgebra& algebra, const RingSpec& ring) {
    const int s = algebra.strands();

    auto sets = innermost_sets(s);  // ordered by (cardinality, lex)
    const int top = static_cast<int>(sets.back().cardinality());

    std::vector<std::vector<DavisBlock>> blocks(top + 1);
    std::vector<std::map<std::vector<int>, std::size_t>> block_index(top + 1);
    std::vector<std::size_t> ranks(top + 1, 0);
    for (const auto& F : sets) {
        int degree = static_cast<int>(F.cardinality());
        DavisBlock block{F, cup_basis(algebra, F), ranks[degree]};
        ranks[degree] += block.basis.size();
        block_index[degree][F.members] = blocks[degree].size();
        blocks[degree].push_back(std::move(block));
    }

    FreeChainComplex c{ring, ranks, {}, {}};
    c.differentials.emplace_back(0, ranks[0]);
    for (int degree = 1; degree <= top; ++degree) {
        SparseMatrix d(ranks[degree - 1], ranks[degree]);
        for (const auto& block : blocks[degree]) {
            for (int m : block.F.members) {
                InnermostSet target_set = block.F.without(m);
                const DavisBlock& target =
                    blocks[degree - 1][block_index[degree - 1].at(target_set.members)];
                Scalar sign = ring.normalize(Scalar(sign_gamma(block.F, m)));
                for (std::size_t p = 0; p < block.basis.size(); ++p) {
                    std::size_t diagram = block.basis.diagram_indices[p];
                    d.add(target.offset + target.basis.position_of.at(diagram),
                          block.offset + p, sign);
                }
            }
        }
        c.differentials.push_back(std::move(d));
    }

    c.basis_labels.resize(top + 1);
    for (int degree = 0; degree <= top; ++degree) {
        auto& labels = c.basis_labels[degree];
        labels.reserve(ranks[degree]);
        for (const auto& block : blocks[degree])
            for (std::size_t diagram : block.basis.diagram_indices)
                labels.push_back(algebra.diagram(diagram).encode() + "|F=" +
                                 block.F.encode());
    }

    c.check_shapes();
    return DavisComplex{s, std::move(c), std::move(blocks)};
}

FreeChainComplex subcomplex_of_diagram(const DavisComplex& dc, std::size_t diagram_index) {
    const auto& full = dc.complex;
    const int top = full.top_degree();

    // Positions of (diagram, *) per degree, with old-row -> new-row maps.
    std::vector<std::vector<std::size_t>> selected(top + 1);
    std::vector<std::vector<long>> new_row(top + 1);
    for (int degree = 0; degree <= top; ++degree) {
        new_row[degree].assign(full.ranks[degree], -1);
        for (const auto& block : dc.blocks[degree]) {
            auto it = block.basis.position_of.find(diagram_index);
            if (it != block.basis.position_of.end()) {
                std::size_t pos = block.offset + it->second;
                new_row[degree][pos] = static_cast<long>(selected[degree].size());
                selected[degree].push_back(pos);
            }
        }
    }

    int sub_top = top;
    while (sub_top > 0 && selected[sub_top].empty())
        --sub_top;

    FreeChainComplex sub{full.ring, {}, {}, {}};
    for (int degree = 0; degree <= sub_top; ++degree)
        sub.ranks.push_back(selected[degree].size());
    sub.differentials.emplace_back(0, sub.ranks[0]);
    for (int degree = 1; degree <= sub_top; ++degree) {
        SparseMatrix d(sub.ranks[degree - 1], sub.ranks[degree]);
        for (std::size_t c = 0; c < selected[degree].size(); ++c) {
            for (const auto& [r, v] : full.differentials[degree].column(selected[degree][c])) {
                long nr = new_row[degree - 1][r];
                if (nr < 0)
                    throw std::logic_error("Davis differential mixed diagram components");
                d.add(static_cast<std::size_t>(nr), c, v);
            }
        }
        sub.differentials.push_back(std::move(d));
    }
    sub.check_shapes();
    return sub;
}

AdjacentIndex adjacent_index(const InnermostSet& F) {
    if (F.empty())
        throw std::invalid_argument("adjacent_index: F must be nonempty");
    const int n = F.generator_count;
    int z = F.members.front();
    if (z != 0)
        return AdjacentIndex{z - 1, z, true};

    // 0 in F: find the smallest index of {0..n} not covered by {j, j+1 : j in F}.
    std::vector<bool> covered(n + 1, false);
    for (int j : F.members) {
        covered[j] = true;
        if (j + 1 <= n)
            covered[j + 1] = true;
    }
    for (int i = 0; i <= n; ++i) {
        if (!covered[i]) {
            if (i < 2 || !F.contains(i - 2))
                throw std::logic_error("adjacent_index: uncovered index without cup at i-2");
            return AdjacentIndex{i, i - 2, false};
        }
    }
    throw std::invalid_argument(
        "adjacent_index: F is the unique maximal innermost set");
}

SparseMatrix inclusion_matrix(const CupModuleBasis& sub, const CupModuleBasis& super) {
    SparseMatrix m(super.size(), sub.size());
    for (std::size_t c = 0; c < sub.size(); ++c) {
        auto it = super.position_of.find(sub.diagram_indices[c]);
        if (it == super.position_of.end())
            throw std::invalid_argument("inclusion_matrix: bases are not nested");
        m.add(it->second, c, Scalar(1));
    }
    return m;
}

SparseMatrix retraction_matrix(const DiagramAlgebra& algebra, const InnermostSet& F,
                               const RingSpec& ring) {
    AdjacentIndex adj = adjacent_index(F);
    InnermostSet F_s = F.without(adj.s_elem);
    CupModuleBasis from = cup_basis(algebra, F_s);
    CupModuleBasis to = cup_basis(algebra, F);

    // Right multiplication by U_{i-1} U_{i-2} (right case) or U_i U_{i+1}
    // (left case), as words of generator basis indices.
    int first = adj.left_case ? adj.i : adj.i - 1;
    int second = adj.left_case ? adj.i + 1 : adj.i - 2;
    std::size_t u_first = algebra.index_of(generator_diagram(algebra.strands(), first));
    std::size_t u_second = algebra.index_of(generator_diagram(algebra.strands(), second));

    SparseMatrix m(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
        auto [mid, loops1] = algebra.mul(from.diagram_indices[c], u_first);
        auto [result, loops2] = algebra.mul(mid, u_second);
        Scalar coeff = ring.parameter_power(loops1 + loops2);
        if (coeff == 0)
            continue;
        auto it = to.position_of.find(result);
        if (it == to.position_of.end())
            throw std::logic_error("retraction left the cup module span");
        m.add(it->second, c, coeff);
    }
    return m;
}

SparseMatrix full_retraction_matrix(const DiagramAlgebra& algebra, const InnermostSet& F,
                                    const RingSpec& ring) {
    if (F.empty())
        return SparseMatrix::identity(algebra.size());
    SparseMatrix rho = retraction_matrix(algebra, F, ring);
    InnermostSet F_s = F.without(adjacent_index(F).s_elem);
    return rho.multiply(full_retraction_matrix(algebra, F_s, ring));
}

ModulePresentation coinvariants(const DiagramAlgebra& algebra, const InnermostSet& F,
                                const RingSpec& ring) {
    CupModuleBasis B = cup_basis(algebra, F);

    // Relations D*c over all non-identity diagrams D and basis elements c of
    // <F>. Every relation is a single scaled basis vector a^k e_j; duplicates
    // carry no new information and are dropped.
    std::set<std::pair<std::size_t, Scalar>> relations;
    for (std::size_t d = 0; d < algebra.size(); ++d) {
        if (d == algebra.identity_index())
            continue;
        for (std::size_t c = 0; c < B.size(); ++c) {
            auto [k, loops] = algebra.mul(d, B.diagram_indices[c]);
            Scalar coeff = ring.parameter_power(loops);
            if (coeff == 0)
                continue;
            auto it = B.position_of.find(k);
            if (it == B.position_of.end())
                throw std::logic_error("TLhat action left the cup module span");
            relations.insert({it->second, coeff});
        }
    }

    SparseMatrix rel(B.size(), relations.size());
    std::size_t col = 0;
    for (const auto& [row, coeff] : relations)
        rel.add(row, col++, coeff);
    return cokernel_presentation(rel, ring);
}

}  // namespace tl
