#include "tl/smith.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tl {

namespace {

// Sparse elimination over Z (modulus == 0) or F_p (modulus == prime).
// Diagonalizes by row/column operations without tracking transforms; the
// invariant-factor chain is restored from the collected pivots afterwards.
class Elimination {
  public:
    Elimination(std::size_t nrows, std::size_t ncols, unsigned long modulus)
        : nrows_(nrows), cols_(ncols), row_cols_(nrows), row_done_(nrows, false),
          col_done_(ncols, false), p_(modulus) {}

    // Entries must arrive column-major, rows ascending, values nonzero
    // (already reduced mod p when modular).
    void seed(std::uint32_t r, std::uint32_t c, mpz_class v) {
        row_cols_[r].push_back(c);
        if (is_unit(v))
            units_.push_back({r, c});
        cols_[c].emplace_back(r, std::move(v));
    }

    std::vector<mpz_class> run() {
        unit_phase();
        if (p_ == 0)
            general_phase();
        return std::move(pivots_);
    }

  private:
    using Entry = std::pair<std::uint32_t, mpz_class>;

    bool is_unit(const mpz_class& v) const {
        return p_ ? v != 0 : (v == 1 || v == -1);
    }

    void reduce_mod_p(mpz_class& v) {
        if (p_) {
            v %= static_cast<long>(p_);
            if (v < 0)
                v += static_cast<long>(p_);
        }
    }

    Entry* find(std::uint32_t c, std::uint32_t r) {
        auto& col = cols_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::uint32_t key) { return e.first < key; });
        if (it != col.end() && it->first == r)
            return &*it;
        return nullptr;
    }

    // col_j -= q * col_c, maintaining row indices and the unit worklist.
    void col_axpy(std::uint32_t j, std::uint32_t c, const mpz_class& q) {
        if (q == 0)
            return;
        const auto& src = cols_[c];
        auto& dst = cols_[j];
        std::vector<Entry> out;
        out.reserve(dst.size() + src.size());
        auto a = dst.begin(), ae = dst.end();
        auto b = src.begin(), be = src.end();
        mpz_class tmp;
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                out.push_back(std::move(*a));
                ++a;
            } else if (a == ae || b->first < a->first) {
                tmp = -q * b->second;
                reduce_mod_p(tmp);
                if (tmp != 0) {
                    row_cols_[b->first].push_back(j);
                    if (is_unit(tmp))
                        units_.push_back({b->first, j});
                    out.emplace_back(b->first, tmp);
                }
                ++b;
            } else {
                tmp = a->second - q * b->second;
                reduce_mod_p(tmp);
                if (tmp != 0) {
                    if (is_unit(tmp) && !is_unit(a->second))
                        units_.push_back({a->first, j});
                    out.emplace_back(a->first, std::move(tmp));
                }
                ++a;
                ++b;
            }
        }
        dst = std::move(out);
    }

    // Live columns having an entry in row r, other than skip_col.
    std::vector<std::uint32_t> row_snapshot(std::uint32_t r, std::uint32_t skip_col) {
        auto& cand = row_cols_[r];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<std::uint32_t> live;
        for (std::uint32_t j : cand) {
            if (j == skip_col || col_done_[j])
                continue;
            if (find(j, r))
                live.push_back(j);
        }
        return live;
    }

    void retire(std::uint32_t r, std::uint32_t c, const mpz_class& pivot_value) {
        pivots_.push_back(abs(pivot_value));
        row_done_[r] = true;
        col_done_[c] = true;
        cols_[c].clear();
        cols_[c].shrink_to_fit();
        row_cols_[r].clear();
        row_cols_[r].shrink_to_fit();
    }

    // Pivot on entries of absolute value 1 (any nonzero entry mod p). With a
    // unit pivot, clearing the pivot row makes the remaining pivot-column
    // entries removable by exact row operations, so the column is dropped
    // whole. Worklist order is deterministic.
    void unit_phase() {
        while (!units_.empty()) {
            auto [r, c] = units_.front();
            units_.pop_front();
            if (row_done_[r] || col_done_[c])
                continue;
            Entry* e = find(c, r);
            if (!e || !is_unit(e->second))
                continue;
            mpz_class v = e->second;
            if (p_ && v != 1) {
                // Scale the column by v^{-1} mod p so the pivot becomes 1.
                mpz_class inv, pz(static_cast<long>(p_));
                mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
                for (auto& entry : cols_[c]) {
                    entry.second *= inv;
                    reduce_mod_p(entry.second);
                }
                v = 1;
            }
            for (std::uint32_t j : row_snapshot(r, c)) {
                const Entry* other = find(j, r);
                mpz_class q = other->second * v;  // v is +-1, so q * v == a_rj
                reduce_mod_p(q);
                col_axpy(j, c, q);
            }
            retire(r, c, v);
        }
    }

    static void balanced_div(const mpz_class& a, const mpz_class& v, mpz_class& q,
                             mpz_class& rem) {
        mpz_class av = abs(v);
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), av.get_mpz_t());
        if (rem * 2 > av) {
            q += 1;
            rem -= av;
        }
        if (v < 0)
            q = -q;
    }

    // Smallest-absolute-value pivot, (row, col)-lexicographic tie break; rows
    // and columns are reduced with balanced remainders until the pivot is the
    // sole entry of both. Runs on the residual the unit phase leaves behind.
    void general_phase() {
        mpz_class q, rem;
        for (;;) {
            std::uint32_t pr = 0, pc = 0;
            const mpz_class* pv = nullptr;
            mpz_class best_abs;
            for (std::uint32_t c = 0; c < cols_.size(); ++c) {
                if (col_done_[c])
                    continue;
                for (const auto& [r, v] : cols_[c]) {
                    mpz_class a = abs(v);
                    if (!pv || a < best_abs ||
                        (a == best_abs && (r < pr || (r == pr && c < pc)))) {
                        pv = &v;
                        best_abs = a;
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (!pv)
                return;
            mpz_class v = *pv;

            bool exact = true;
            for (std::uint32_t j : row_snapshot(pr, pc)) {
                const Entry* other = find(j, pr);
                balanced_div(other->second, v, q, rem);
                col_axpy(j, pc, q);
                if (rem != 0)
                    exact = false;
            }
            if (!exact)
                continue;  // a smaller entry appeared in the pivot row

            // Pivot row is now {v at pc}; row operations only touch column pc.
            auto& col = cols_[pc];
            for (auto& [r, value] : col) {
                if (r == pr)
                    continue;
                balanced_div(value, v, q, rem);
                value = rem;
                if (rem != 0)
                    exact = false;
            }
            col.erase(std::remove_if(col.begin(), col.end(),
                                     [](const Entry& e) { return e.second == 0; }),
                      col.end());
            if (!exact)
                continue;
            retire(pr, pc, v);
        }
    }

    std::size_t nrows_;
    std::vector<std::vector<Entry>> cols_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<bool> row_done_, col_done_;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> units_;
    std::vector<mpz_class> pivots_;
    unsigned long p_;
};

// Invariant factors of diag(values): pairwise gcd/lcm sweeps until the chain
// stabilizes.
std::vector<mpz_class> divisibility_chain(std::vector<mpz_class> values) {
    bool changed = true;
    mpz_class g, l;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                mpz_gcd(g.get_mpz_t(), values[i].get_mpz_t(), values[j].get_mpz_t());
                if (g != values[i]) {
                    l = values[i] / g * values[j];
                    values[i] = g;
                    values[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<mpz_class> integer_pivots(const SparseMatrix& m, unsigned long modulus,
                                      bool augment_modulus = false) {
    const std::size_t extra = augment_modulus ? m.rows() : 0;
    Elimination elim(m.rows(), m.cols() + extra, modulus ? (augment_modulus ? 0 : modulus) : 0);
    mpz_class mz(static_cast<long>(modulus));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) {
            if (v.get_den() != 1)
                throw std::invalid_argument("non-integer entry in integer elimination");
            mpz_class z = v.get_num();
            if (modulus && !augment_modulus) {
                z %= mz;
                if (z < 0)
                    z += mz;
                if (z == 0)
                    continue;
            }
            elim.seed(r, static_cast<std::uint32_t>(c), std::move(z));
        }
    }
    if (augment_modulus)
        for (std::size_t r = 0; r < m.rows(); ++r)
            elim.seed(static_cast<std::uint32_t>(r),
                      static_cast<std::uint32_t>(m.cols() + r), mz);
    return elim.run();
}

SmithForm chain_from_pivots(std::vector<mpz_class> pivots) {
    std::size_t units = 0;
    std::vector<mpz_class> nonunits;
    for (auto& v : pivots) {
        if (v == 1)
            ++units;
        else
            nonunits.push_back(std::move(v));
    }
    SmithForm out;
    out.invariant_factors.assign(units, mpz_class(1));
    for (auto& v : divisibility_chain(std::move(nonunits)))
        out.invariant_factors.push_back(std::move(v));
    return out;
}

// Columns with rational entries are scaled to integers (a unit operation over
// Q), so rank can be read off the integer elimination.
SparseMatrix clear_denominators(const SparseMatrix& m) {
    SparseMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_class lcm(1);
        for (const auto& [r, v] : m.column(c))
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<SparseMatrix::Entry> col;
        col.reserve(m.column(c).size());
        for (const auto& [r, v] : m.column(c))
            col.emplace_back(r, Scalar(v * lcm));
        out.set_column(c, std::move(col));
    }
    return out;
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m, const RingSpec& ring) {
    switch (ring.kind()) {
        case RingKind::integers:
            return chain_from_pivots(integer_pivots(m, 0));
        case RingKind::rationals: {
            auto pivots = integer_pivots(clear_denominators(m), 0);
            SmithForm out;
            out.invariant_factors.assign(pivots.size(), mpz_class(1));
            return out;
        }
        case RingKind::modular: {
            if (ring.modulus_is_prime()) {
                auto pivots = integer_pivots(m, ring.modulus());
                SmithForm out;
                out.invariant_factors.assign(pivots.size(), mpz_class(1));
                return out;
            }
            // Composite modulus: integer SNF of [A | m*I] presents the same
            // Z/m-module; factors reduce to gcd(d, m), dropping the d with
            // gcd(d, m) == m (those are zero over Z/m).
            auto pivots = integer_pivots(m, ring.modulus(), /*augment_modulus=*/true);
            auto chain = chain_from_pivots(std::move(pivots)).invariant_factors;
            mpz_class mz(static_cast<long>(ring.modulus()));
            SmithForm out;
            for (const auto& d : chain) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mz.get_mpz_t());
                if (g != mz)
                    out.invariant_factors.push_back(g);
            }
            std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
            return out;
        }
    }
    throw std::logic_error("unreachable ring kind");
}

std::size_t matrix_rank(const SparseMatrix& m, const RingSpec& ring) {
    if (ring.kind() == RingKind::modular && !ring.modulus_is_prime())
        throw std::invalid_argument("rank over composite modulus is not defined");
    return smith_normal_form(m, ring).rank();
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
    ModulePresentation out;
    out.free_rank = a.free_rank + b.free_rank;
    std::vector<mpz_class> torsion = a.torsion;
    torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
    out.torsion = divisibility_chain(std::move(torsion));
    return out;
}

std::string presentation_to_string(const ModulePresentation& p, const RingSpec& ring) {
    const std::string R = ring.description();
    if (p.is_zero())
        return "0";
    std::string out;
    if (p.free_rank == 1)
        out = R;
    else if (p.free_rank > 1)
        out = R + "^" + std::to_string(p.free_rank);
    for (const auto& d : p.torsion) {
        if (!out.empty())
            out += " + ";
        out += R + "/" + d.get_str();
    }
    return out;
}

ModulePresentation cokernel_presentation(const SparseMatrix& m, const RingSpec& ring) {
    SmithForm f = smith_normal_form(m, ring);
    ModulePresentation out;
    out.free_rank = m.rows() - f.rank();
    for (const auto& d : f.invariant_factors)
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

ModulePresentation homology_step(const SparseMatrix& d_out, const SparseMatrix& d_in,
                                 const RingSpec& ring) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_step: differentials are not composable");
    if (!d_out.multiply(d_in).is_zero_in(ring))
        throw std::invalid_argument("homology_step: d_out * d_in != 0 (broken complex)");
    if (ring.kind() == RingKind::modular && !ring.modulus_is_prime())
        throw std::invalid_argument(
            "homology over composite modulus is not supported; compute over Z and reduce");

    const std::size_t middle = d_out.cols();
    if (ring.is_field()) {
        std::size_t nullity = middle - matrix_rank(d_out, ring);
        return ModulePresentation{nullity - matrix_rank(d_in, ring), {}};
    }
    // Over Z: ker(d_out) is a saturated direct summand containing im(d_in),
    // so the quotient is Z^(nullity - rank) plus the non-unit invariant
    // factors of d_in.
    SmithForm in_form = smith_normal_form(d_in, ring);
    std::size_t rank_out = matrix_rank(d_out, ring);
    ModulePresentation out;
    out.free_rank = middle - rank_out - in_form.rank();
    for (const auto& d : in_form.invariant_factors)
        if (d > 1)
            out.torsion.push_back(d);
    return out;
}

}  // namespace tl
