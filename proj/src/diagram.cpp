#include "tl/diagram.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tl {

namespace {

// Position of point p in the boundary circle order L0,...,L(s-1),R(s-1),...,R0.
int circle_position(int p, int s) {
    return p < s ? p : 3 * s - 1 - p;
}

int point_at_position(int pos, int s) {
    return pos < s ? pos : 3 * s - 1 - pos;
}

bool arcs_cross(int a, int b, int c, int d) {
    if (a > b)
        std::swap(a, b);
    if (c > d)
        std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

void check_valid(const PlanarDiagram& d) {
    const int s = d.strands;
    const int n = 2 * s;
    if (s < 1 || static_cast<int>(d.pairing.size()) != n)
        throw std::invalid_argument("planar diagram needs s >= 1 and 2s partners");
    for (int p = 0; p < n; ++p) {
        int q = d.pairing[p];
        if (q < 0 || q >= n || q == p || d.pairing[q] != p)
            throw std::invalid_argument("pairing is not a fixed-point-free involution");
    }
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (d.pairing[p] <= p || d.pairing[q] <= q)
                continue;
            if (arcs_cross(circle_position(p, s), circle_position(d.pairing[p], s),
                           circle_position(q, s), circle_position(d.pairing[q], s)))
                throw std::invalid_argument("matching is not noncrossing");
        }
    }
}

// Noncrossing matchings on the contiguous position segment [lo, hi]; `pending`
// holds segments still to be matched once this one is exhausted. Matching the
// leftmost position splits the segment in two, so segments stay contiguous.
void enumerate_segments(int lo, int hi, std::vector<std::array<int, 2>> pending,
                        std::vector<int>& partner, std::vector<std::vector<int>>& out,
                        int s) {
    if (lo > hi) {
        if (pending.empty()) {
            std::vector<int> pairing(2 * s);
            for (int pos = 0; pos < 2 * s; ++pos)
                pairing[point_at_position(pos, s)] = point_at_position(partner[pos], s);
            out.push_back(std::move(pairing));
            return;
        }
        auto next = pending.back();
        pending.pop_back();
        enumerate_segments(next[0], next[1], std::move(pending), partner, out, s);
        return;
    }
    for (int j = lo + 1; j <= hi; j += 2) {
        partner[lo] = j;
        partner[j] = lo;
        auto rest = pending;
        rest.push_back({j + 1, hi});
        enumerate_segments(lo + 1, j - 1, std::move(rest), partner, out, s);
    }
}

}  // namespace

long long catalan(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

PlanarDiagram::PlanarDiagram(int s, std::vector<int> pairing_)
    : strands(s), pairing(std::move(pairing_)) {
    check_valid(*this);
}

bool PlanarDiagram::is_identity() const {
    for (int i = 0; i < strands; ++i)
        if (pairing[i] != strands + i)
            return false;
    return true;
}

std::string PlanarDiagram::encode() const {
    std::string out = "[";
    for (std::size_t i = 0; i < pairing.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(pairing[i]);
    }
    return out + "]";
}

PlanarDiagram identity_diagram(int s) {
    if (s < 1)
        throw std::invalid_argument("identity diagram needs s >= 1");
    std::vector<int> pairing(2 * s);
    for (int i = 0; i < s; ++i) {
        pairing[i] = s + i;
        pairing[s + i] = i;
    }
    return PlanarDiagram(s, std::move(pairing));
}

PlanarDiagram generator_diagram(int s, int i) {
    if (i < 0 || i > s - 2)
        throw std::invalid_argument("generator index out of range");
    PlanarDiagram d = identity_diagram(s);
    d.pairing[i] = i + 1;
    d.pairing[i + 1] = i;
    d.pairing[s + i] = s + i + 1;
    d.pairing[s + i + 1] = s + i;
    return d;
}

MultiplicationResult multiply(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("strand count mismatch in multiplication");
    const int s = a.strands;
    // Glued picture: a's right boundary meets b's left boundary at s interface
    // nodes. External points keep the product's numbering: left points from a,
    // right points from b.
    std::vector<int> pairing(2 * s, -1);
    std::vector<bool> seen_interface(s, false);

    auto trace = [&](bool in_a, int p) {
        for (;;) {
            if (in_a) {
                int q = a.pairing[p];
                if (q < s)
                    return q;  // external left point
                seen_interface[q - s] = true;
                in_a = false;
                p = q - s;  // continue from b's left point
            } else {
                int q = b.pairing[p];
                if (q >= s)
                    return q;  // external right point
                seen_interface[q] = true;
                in_a = true;
                p = s + q;  // continue from a's right point
            }
        }
    };

    for (int i = 0; i < s; ++i) {
        if (pairing[i] == -1) {
            int q = trace(true, i);
            pairing[i] = q;
            pairing[q] = i;
        }
        if (pairing[s + i] == -1) {
            int q = trace(false, s + i);
            pairing[s + i] = q;
            pairing[q] = s + i;
        }
    }

    // Interface nodes not on any external path form the closed loops.
    int loops = 0;
    for (int k = 0; k < s; ++k) {
        if (seen_interface[k])
            continue;
        ++loops;
        int node = k;
        do {
            seen_interface[node] = true;
            node = a.pairing[s + node] - s;  // a-arc between interface nodes
            seen_interface[node] = true;
            node = b.pairing[node];  // b-arc back
        } while (node != k);
    }
    return MultiplicationResult{PlanarDiagram(s, std::move(pairing)), loops};
}

std::vector<PlanarDiagram> enumerate_diagrams(int s) {
    if (s < 1)
        throw std::invalid_argument("enumerate needs s >= 1");
    std::vector<std::vector<int>> pairings;
    std::vector<int> partner(2 * s, -1);
    enumerate_segments(0, 2 * s - 1, {}, partner, pairings, s);
    std::sort(pairings.begin(), pairings.end());
    std::vector<PlanarDiagram> out;
    out.reserve(pairings.size());
    for (auto& p : pairings)
        out.push_back(PlanarDiagram(s, std::move(p)));
    return out;
}

std::vector<int> right_cups(const PlanarDiagram& d) {
    std::vector<int> cups;
    const int s = d.strands;
    for (int i = 0; i < s - 1; ++i)
        if (d.pairing[s + i] == s + i + 1)
            cups.push_back(i);
    return cups;
}

std::pair<PlanarDiagram, int> diagram_from_word(int s, const std::vector<int>& word) {
    PlanarDiagram d = identity_diagram(s);
    int loops = 0;
    for (int i : word) {
        MultiplicationResult r = multiply(d, generator_diagram(s, i));
        d = std::move(r.diagram);
        loops += r.loop_count;
    }
    return {std::move(d), loops};
}

DiagramAlgebra::DiagramAlgebra(int strands) : strands_(strands) {
    basis_ = enumerate_diagrams(strands);
    cups_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        index_[basis_[i].pairing] = i;
        cups_.push_back(right_cups(basis_[i]));
        if (basis_[i].is_identity())
            identity_ = i;
    }
}

std::size_t DiagramAlgebra::index_of(const PlanarDiagram& d) const {
    auto it = index_.find(d.pairing);
    if (it == index_.end())
        throw std::invalid_argument("diagram not in basis (strand mismatch?)");
    return it->second;
}

void DiagramAlgebra::build_table() const {
    const std::size_t n = basis_.size();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            MultiplicationResult r = tl::multiply(basis_[i], basis_[j]);
            table_[i * n + j] = {static_cast<std::uint32_t>(index_.at(r.diagram.pairing)),
                                 static_cast<std::uint8_t>(r.loop_count)};
        }
    }
}

std::pair<std::size_t, int> DiagramAlgebra::mul(std::size_t i, std::size_t j) const {
    std::call_once(table_once_, [this] { build_table(); });
    const auto& e = table_[i * size() + j];
    return {e.first, e.second};
}

}  // namespace tl
