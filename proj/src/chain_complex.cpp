#include "tl/chain_complex.hpp"

#include <nlohmann/json.hpp>

namespace tl {

using ordered_json = nlohmann::ordered_json;

void FreeChainComplex::check_shapes() const {
    if (ranks.empty())
        throw std::invalid_argument("complex needs at least degree 0");
    if (differentials.size() != ranks.size())
        throw std::invalid_argument("one differential per degree expected");
    if (differentials[0].rows() != 0 || differentials[0].cols() != ranks[0])
        throw std::invalid_argument("differential 0 must be the zero map out of degree 0");
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        if (differentials[k].rows() != ranks[k - 1] || differentials[k].cols() != ranks[k])
            throw std::invalid_argument("differential shape mismatch at degree " +
                                        std::to_string(k));
    }
    for (std::size_t k = 0; k < basis_labels.size(); ++k) {
        if (!basis_labels[k].empty() && basis_labels[k].size() != ranks[k])
            throw std::invalid_argument("label count mismatch at degree " + std::to_string(k));
    }
}

FreeChainComplex zero_differential_complex(const RingSpec& ring,
                                           std::vector<std::size_t> ranks) {
    FreeChainComplex c{ring, std::move(ranks), {}, {}};
    c.differentials.emplace_back(0, c.ranks[0]);
    for (std::size_t k = 1; k < c.ranks.size(); ++k)
        c.differentials.emplace_back(c.ranks[k - 1], c.ranks[k]);
    return c;
}

bool verify_d_squared(const FreeChainComplex& c, int* bad_degree) {
    c.check_shapes();
    for (std::size_t k = 2; k < c.differentials.size(); ++k) {
        if (!c.differentials[k - 1].multiply(c.differentials[k]).is_zero_in(c.ring)) {
            if (bad_degree)
                *bad_degree = static_cast<int>(k);
            return false;
        }
    }
    return true;
}

std::vector<ModulePresentation> homology(const FreeChainComplex& c) {
    int bad = 0;
    if (!verify_d_squared(c, &bad))
        throw std::invalid_argument("d^2 != 0 at degree " + std::to_string(bad));

    const bool field = c.ring.is_field();
    if (c.ring.kind() == RingKind::modular && !c.ring.modulus_is_prime())
        throw std::invalid_argument("homology needs Z, Q or a prime field");

    // One Smith form per differential serves the two adjacent degrees.
    std::vector<SmithForm> forms;
    forms.reserve(c.differentials.size());
    for (const auto& d : c.differentials)
        forms.push_back(smith_normal_form(d, c.ring));

    std::vector<ModulePresentation> out;
    for (std::size_t k = 0; k < c.ranks.size(); ++k) {
        std::size_t rank_out = forms[k].rank();
        std::size_t rank_in = k + 1 < forms.size() ? forms[k + 1].rank() : 0;
        if (rank_out + rank_in > c.ranks[k])
            throw std::logic_error("rank bookkeeping violated at degree " + std::to_string(k));
        ModulePresentation h;
        h.free_rank = c.ranks[k] - rank_out - rank_in;
        if (!field && k + 1 < forms.size()) {
            for (const auto& d : forms[k + 1].invariant_factors)
                if (d > 1)
                    h.torsion.push_back(d);
        }
        out.push_back(std::move(h));
    }
    return out;
}

long long euler_characteristic(const FreeChainComplex& c) {
    long long chi = 0;
    for (std::size_t k = 0; k < c.ranks.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.ranks[k]);
    return chi;
}

std::string complex_to_json(const FreeChainComplex& c) {
    ordered_json j;
    j["ring"] = c.ring.description();
    j["parameter"] = scalar_to_string(c.ring.parameter());
    j["ranks"] = c.ranks;
    ordered_json diffs = ordered_json::array();
    for (std::size_t k = 0; k < c.differentials.size(); ++k) {
        ordered_json triples = ordered_json::array();
        c.differentials[k].for_each([&](std::size_t r, std::size_t col, const Scalar& v) {
            triples.push_back(ordered_json::array({r, col, scalar_to_string(v)}));
        });
        diffs.push_back(std::move(triples));
    }
    j["differentials"] = std::move(diffs);
    if (!c.basis_labels.empty())
        j["labels"] = c.basis_labels;
    return j.dump(2);
}

}  // namespace tl
