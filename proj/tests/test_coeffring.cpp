#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "tl/smith.hpp"

using namespace tl;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0)
                m.add(r, c, Scalar(rows[r][c]));
    return m;
}

}  // namespace

TEST_CASE("smith normal form: worked examples") {
    RingSpec Z = RingSpec::integers(Scalar(0));

    SparseMatrix diag(2, 2);
    diag.add(0, 0, Scalar(2));
    diag.add(1, 1, Scalar(3));
    auto f = smith_normal_form(diag, Z);
    REQUIRE(f.invariant_factors.size() == 2);
    CHECK(f.invariant_factors[0] == 1);
    CHECK(f.invariant_factors[1] == 6);

    SparseMatrix zero(3, 4);
    CHECK(smith_normal_form(zero, Z).invariant_factors.empty());

    auto id = smith_normal_form(SparseMatrix::identity(3), Z);
    REQUIRE(id.rank() == 3);
    for (const auto& d : id.invariant_factors)
        CHECK(d == 1);
}

TEST_CASE("smith normal form: divisibility chain and minor gcds on random matrices") {
    RingSpec Z = RingSpec::integers(Scalar(0));
    RingSpec Q = RingSpec::rationals(Scalar(0));
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_real_distribution<double> density(0.0, 1.0);

    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        std::vector<std::vector<long>> dense(r, std::vector<long>(c, 0));
        for (auto& row : dense)
            for (auto& v : row)
                if (density(rng) < 0.75)
                    v = entry(rng);
        SparseMatrix m = from_dense(dense, c);

        auto f = smith_normal_form(m, Z);
        for (std::size_t i = 0; i + 1 < f.invariant_factors.size(); ++i) {
            CHECK(f.invariant_factors[i] > 0);
            CHECK(f.invariant_factors[i + 1] % f.invariant_factors[i] == 0);
        }
        CHECK(f.rank() <= std::min(r, c));

        // product of the first k factors = gcd of all k x k minors
        mpz_class prod = 1;
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, std::min(r, c)); ++k) {
            mpz_class g = oracles::minors_gcd(dense, c, k);
            if (k <= f.rank()) {
                prod *= f.invariant_factors[k - 1];
                CHECK(prod == g);
            } else {
                CHECK(g == 0);
            }
        }

        CHECK(matrix_rank(m, Q) == f.rank());
    }
}

TEST_CASE("smith normal form over fields and composite moduli") {
    RingSpec Q = RingSpec::rationals(Scalar(0));
    SparseMatrix m(2, 3);
    m.add(0, 0, Scalar(2));
    m.add(1, 1, Scalar("1/3"));
    auto f = smith_normal_form(m, Q);
    REQUIRE(f.rank() == 2);
    CHECK(f.invariant_factors[0] == 1);
    CHECK(f.invariant_factors[1] == 1);

    RingSpec F2 = RingSpec::modular(2, Scalar(0));
    SparseMatrix even(1, 1);
    even.add(0, 0, Scalar(2));
    CHECK(smith_normal_form(even, F2).rank() == 0);
    SparseMatrix odd(1, 1);
    odd.add(0, 0, Scalar(3));
    CHECK(smith_normal_form(odd, F2).rank() == 1);

    RingSpec Z4 = RingSpec::modular(4, Scalar(0));
    CHECK_FALSE(Z4.is_field());
    auto c1 = smith_normal_form(even, Z4);  // [2] over Z/4
    REQUIRE(c1.invariant_factors.size() == 1);
    CHECK(c1.invariant_factors[0] == 2);
    auto c2 = smith_normal_form(odd, Z4);  // 3 is a unit mod 4
    REQUIRE(c2.invariant_factors.size() == 1);
    CHECK(c2.invariant_factors[0] == 1);
    CHECK_THROWS_AS(matrix_rank(even, Z4), std::invalid_argument);
}

TEST_CASE("homology_step: worked examples") {
    RingSpec Z = RingSpec::integers(Scalar(0));
    RingSpec Q = RingSpec::rationals(Scalar(0));

    SparseMatrix d_out(1, 1);  // zero map
    SparseMatrix d_in(1, 1);
    d_in.add(0, 0, Scalar(2));
    auto h = homology_step(d_out, d_in, Z);
    CHECK(h.free_rank == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 2);

    auto free3 = homology_step(SparseMatrix(2, 3), SparseMatrix(3, 2), Q);
    CHECK(free3.free_rank == 3);
    CHECK(free3.torsion.empty());

    auto trivial = homology_step(SparseMatrix::identity(3), SparseMatrix(3, 2), Z);
    CHECK(trivial.is_zero());
}

TEST_CASE("homology_step: contracts") {
    RingSpec Z = RingSpec::integers(Scalar(0));
    CHECK_THROWS_AS(homology_step(SparseMatrix(2, 3), SparseMatrix(4, 2), Z),
                    std::invalid_argument);

    SparseMatrix a = SparseMatrix::identity(2);
    SparseMatrix b = SparseMatrix::identity(2);
    CHECK_THROWS_AS(homology_step(a, b, Z), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(0, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = dim(rng);
        auto h = homology_step(SparseMatrix(dim(rng), n), SparseMatrix(n, dim(rng)), Z);
        CHECK(h.free_rank == n);
    }
}

TEST_CASE("presentations: direct sums and rendering") {
    RingSpec Z = RingSpec::integers(Scalar(0));
    ModulePresentation a{1, {mpz_class(4)}};
    ModulePresentation b{2, {mpz_class(6)}};
    auto s = direct_sum(a, b);
    CHECK(s.free_rank == 3);
    REQUIRE(s.torsion.size() == 2);
    CHECK(s.torsion[0] == 2);   // gcd(4, 6)
    CHECK(s.torsion[1] == 12);  // lcm(4, 6)
    CHECK(presentation_to_string(s, Z) == "Z^3 + Z/2 + Z/12");
    CHECK(presentation_to_string(ModulePresentation{}, Z) == "0");
    CHECK(presentation_to_string(ModulePresentation{1, {}}, Z) == "Z");
}

TEST_CASE("ring specs: parsing, normalization, units") {
    CHECK(RingSpec::parse("Z", "-1").description() == "Z");
    CHECK(RingSpec::parse("Q", "1/3").description() == "Q");
    CHECK(RingSpec::parse("Fp:5", "2").description() == "Fp:5");
    CHECK_THROWS_AS(RingSpec::parse("Fp:4", "0"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("Fp:x", "0"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("GF2", "0"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("Z", "1/2"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("Z", "two"), std::invalid_argument);

    RingSpec F5 = RingSpec::parse("Fp:5", "1/2");
    CHECK(F5.parameter() == 3);  // inverse of 2 mod 5
    CHECK(F5.normalize(Scalar(-1)) == 4);
    CHECK(F5.is_unit(Scalar(3)));
    CHECK_FALSE(F5.is_unit(Scalar(10)));
    CHECK(F5.parameter_power(2) == 4);

    RingSpec Z = RingSpec::integers(Scalar(2));
    CHECK(Z.is_unit(Scalar(-1)));
    CHECK_FALSE(Z.is_unit(Scalar(2)));
    CHECK(Z.parameter_power(3) == 8);

    RingSpec Q = RingSpec::rationals(Scalar("2/3"));
    CHECK(Q.is_unit(Scalar("-5/7")));
    CHECK_FALSE(Q.is_unit(Scalar(0)));
    CHECK(Q.parameter_power(2) == Scalar("4/9"));

    CHECK(RingSpec::modular(4, Scalar(0)).modulus() == 4);
    CHECK_THROWS_AS(RingSpec::modular(1, Scalar(0)), std::invalid_argument);
}
