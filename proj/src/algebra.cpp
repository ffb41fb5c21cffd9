#include "tl/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace tl {

InnermostSet::InnermostSet(int generator_count_, std::vector<int> members_)
    : generator_count(generator_count_), members(std::move(members_)) {
    if (generator_count < 0)
        throw std::invalid_argument("negative generator count");
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= generator_count)
            throw std::invalid_argument("innermost set member out of range");
        if (i > 0 && members[i] - members[i - 1] < 2)
            throw std::invalid_argument("innermost set needs pairwise gaps >= 2");
    }
}

bool InnermostSet::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

InnermostSet InnermostSet::without(int i) const {
    if (!contains(i))
        throw std::invalid_argument("element not in innermost set");
    std::vector<int> rest;
    rest.reserve(members.size() - 1);
    for (int m : members)
        if (m != i)
            rest.push_back(m);
    return InnermostSet(generator_count, std::move(rest));
}

std::string InnermostSet::encode() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(members[i]);
    }
    return out + "}";
}

std::vector<InnermostSet> innermost_sets(int s) {
    if (s < 1)
        throw std::invalid_argument("innermost_sets needs s >= 1");
    const int g = s - 1;
    std::vector<std::vector<int>> subsets = {{}};
    for (int i = 0; i < g; ++i) {
        std::size_t count = subsets.size();
        for (std::size_t k = 0; k < count; ++k) {
            const auto& f = subsets[k];
            if (f.empty() || i - f.back() >= 2) {
                auto extended = f;
                extended.push_back(i);
                subsets.push_back(std::move(extended));
            }
        }
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    std::vector<InnermostSet> out;
    out.reserve(subsets.size());
    for (auto& f : subsets)
        out.push_back(InnermostSet(g, std::move(f)));
    return out;
}

InnermostSet unique_maximal_innermost(int s) {
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument(
            "the unique maximal innermost set exists only for even strand counts");
    std::vector<int> members;
    for (int i = 0; i <= s - 2; i += 2)
        members.push_back(i);
    return InnermostSet(s - 1, std::move(members));
}

CupModuleBasis cup_basis(const DiagramAlgebra& algebra, const InnermostSet& F) {
    if (F.generator_count != algebra.strands() - 1)
        throw std::invalid_argument("innermost set does not match strand count");
    CupModuleBasis B;
    B.F = F;
    for (std::size_t i = 0; i < algebra.size(); ++i) {
        const auto& cups = algebra.cups(i);
        bool contained = std::includes(cups.begin(), cups.end(), F.members.begin(),
                                       F.members.end());
        if (contained) {
            B.position_of[i] = B.diagram_indices.size();
            B.diagram_indices.push_back(i);
        }
    }
    return B;
}

AlgebraElement diagram_element(const DiagramAlgebra& algebra, std::size_t index,
                               const Scalar& coeff) {
    if (index >= algebra.size())
        throw std::invalid_argument("diagram index out of range");
    AlgebraElement x;
    x.strands = algebra.strands();
    if (coeff != 0)
        x.coeffs[index] = coeff;
    return x;
}

AlgebraElement add_elements(const AlgebraElement& x, const AlgebraElement& y,
                            const RingSpec& ring) {
    if (x.strands != y.strands)
        throw std::invalid_argument("strand count mismatch");
    AlgebraElement out = x;
    out.strands = x.strands;
    for (const auto& [i, c] : y.coeffs) {
        auto [it, inserted] = out.coeffs.emplace(i, c);
        if (!inserted) {
            it->second = ring.add(it->second, c);
            if (it->second == 0)
                out.coeffs.erase(it);
        }
    }
    return out;
}

AlgebraElement multiply_elements(const DiagramAlgebra& algebra, const AlgebraElement& x,
                                 const AlgebraElement& y, const RingSpec& ring) {
    if (x.strands != y.strands)
        throw std::invalid_argument("strand count mismatch");
    if (x.strands != algebra.strands())
        throw std::invalid_argument("elements do not belong to this algebra");
    AlgebraElement out;
    out.strands = x.strands;
    for (const auto& [i, ci] : x.coeffs) {
        for (const auto& [j, cj] : y.coeffs) {
            auto [k, loops] = algebra.mul(i, j);
            Scalar c = ring.mul(ring.mul(ci, cj), ring.parameter_power(loops));
            if (c == 0)
                continue;
            auto [it, inserted] = out.coeffs.emplace(k, c);
            if (!inserted) {
                it->second = ring.add(it->second, c);
                if (it->second == 0)
                    out.coeffs.erase(it);
            }
        }
    }
    return out;
}

Scalar augment(const DiagramAlgebra& algebra, const AlgebraElement& x) {
    auto it = x.coeffs.find(algebra.identity_index());
    return it == x.coeffs.end() ? Scalar(0) : it->second;
}

std::string element_to_json(const AlgebraElement& x) {
    std::string out = "{\"strands\":" + std::to_string(x.strands) + ",\"terms\":[";
    bool first = true;
    for (const auto& [i, c] : x.coeffs) {
        if (!first)
            out += ",";
        first = false;
        out += "[" + std::to_string(i) + ",\"" + scalar_to_string(c) + "\"]";
    }
    return out + "]}";
}

SparseMatrix diagram_action_matrix(const DiagramAlgebra& algebra, std::size_t diagram_index,
                                   const CupModuleBasis& B, const RingSpec& ring) {
    SparseMatrix m(B.size(), B.size());
    for (std::size_t col = 0; col < B.size(); ++col) {
        auto [k, loops] = algebra.mul(diagram_index, B.diagram_indices[col]);
        Scalar c = ring.parameter_power(loops);
        if (c == 0)
            continue;
        auto it = B.position_of.find(k);
        if (it == B.position_of.end())
            throw std::logic_error("left action left the cup module span");
        m.add(it->second, col, c);
    }
    return m;
}

SparseMatrix left_action_matrix(const DiagramAlgebra& algebra, const AlgebraElement& x,
                                const CupModuleBasis& B, const RingSpec& ring) {
    if (x.strands != algebra.strands())
        throw std::invalid_argument("strand count mismatch");
    SparseMatrix m(B.size(), B.size());
    for (std::size_t col = 0; col < B.size(); ++col) {
        for (const auto& [i, ci] : x.coeffs) {
            auto [k, loops] = algebra.mul(i, B.diagram_indices[col]);
            Scalar c = ring.mul(ci, ring.parameter_power(loops));
            if (c == 0)
                continue;
            auto it = B.position_of.find(k);
            if (it == B.position_of.end())
                throw std::logic_error("left action left the cup module span");
            m.add(it->second, col, c);
        }
    }
    return m;
}

}  // namespace tl
