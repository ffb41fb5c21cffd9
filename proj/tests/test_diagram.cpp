#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tl/diagram.hpp"

using namespace tl;

TEST_CASE("identity and generator diagrams") {
    CHECK(identity_diagram(1).pairing == std::vector<int>{1, 0});
    CHECK(identity_diagram(2).encode() == "[2,3,0,1]");
    CHECK(identity_diagram(3).pairing == std::vector<int>{3, 4, 5, 0, 1, 2});
    CHECK_THROWS_AS(identity_diagram(0), std::invalid_argument);

    // U_0 in TL_2: both cups
    CHECK(generator_diagram(2, 0).pairing == std::vector<int>{1, 0, 3, 2});
    // U_1 in TL_3: L1-L2, R1-R2, L0-R0
    CHECK(generator_diagram(3, 1).pairing == std::vector<int>{3, 2, 1, 0, 5, 4});
    CHECK_THROWS_AS(generator_diagram(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(generator_diagram(2, -1), std::invalid_argument);
}

TEST_CASE("right cups") {
    for (int s = 1; s <= 6; ++s)
        CHECK(right_cups(identity_diagram(s)).empty());
    for (int s = 2; s <= 6; ++s)
        for (int i = 0; i <= s - 2; ++i)
            CHECK(right_cups(generator_diagram(s, i)) == std::vector<int>{i});

    // F(U_0 U_1) = {1}: the possible last letters
    auto prod = multiply(generator_diagram(3, 0), generator_diagram(3, 1));
    CHECK(prod.loop_count == 0);
    CHECK(right_cups(prod.diagram) == std::vector<int>{1});
}

TEST_CASE("multiplication: defining relations hold diagrammatically") {
    for (int s = 2; s <= 8; ++s) {
        for (int i = 0; i <= s - 2; ++i) {
            auto sq = multiply(generator_diagram(s, i), generator_diagram(s, i));
            CHECK(sq.diagram == generator_diagram(s, i));
            CHECK(sq.loop_count == 1);

            for (int j = 0; j <= s - 2; ++j) {
                if (j == i + 1 || j == i - 1) {
                    auto mid = multiply(generator_diagram(s, i), generator_diagram(s, j));
                    CHECK(mid.loop_count == 0);
                    auto back = multiply(mid.diagram, generator_diagram(s, i));
                    CHECK(back.loop_count == 0);
                    CHECK(back.diagram == generator_diagram(s, i));
                } else if (std::abs(i - j) >= 2) {
                    auto ij = multiply(generator_diagram(s, i), generator_diagram(s, j));
                    auto ji = multiply(generator_diagram(s, j), generator_diagram(s, i));
                    CHECK(ij.loop_count == 0);
                    CHECK(ji.loop_count == 0);
                    CHECK(ij.diagram == ji.diagram);
                }
            }
        }
    }
}

TEST_CASE("multiplication: unit law and strand mismatch") {
    DiagramAlgebra algebra(4);
    for (std::size_t i = 0; i < algebra.size(); ++i) {
        auto left = multiply(identity_diagram(4), algebra.diagram(i));
        auto right = multiply(algebra.diagram(i), identity_diagram(4));
        CHECK(left.diagram == algebra.diagram(i));
        CHECK(left.loop_count == 0);
        CHECK(right.diagram == algebra.diagram(i));
        CHECK(right.loop_count == 0);
    }
    CHECK_THROWS_AS(multiply(identity_diagram(2), identity_diagram(3)),
                    std::invalid_argument);
}

TEST_CASE("enumeration matches the brute-force matching oracle") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int s = 1; s <= 8; ++s) {
        auto diagrams = enumerate_diagrams(s);
        CHECK(static_cast<long long>(diagrams.size()) == expected[s]);
        CHECK(catalan(s) == expected[s]);

        auto oracle = oracles::noncrossing_matchings(s);
        REQUIRE(oracle.size() == diagrams.size());
        for (const auto& d : diagrams)
            CHECK(oracle.count(d.pairing) == 1);
        CHECK(std::is_sorted(diagrams.begin(), diagrams.end()));
    }
}

TEST_CASE("from_word") {
    auto [id, k0] = diagram_from_word(3, {});
    CHECK(id == identity_diagram(3));
    CHECK(k0 == 0);

    auto [u0, k1] = diagram_from_word(2, {0, 0});
    CHECK(u0 == generator_diagram(2, 0));
    CHECK(k1 == 1);

    auto [d, k2] = diagram_from_word(4, {0, 2});
    CHECK(right_cups(d) == std::vector<int>{0, 2});
    CHECK(k2 == 0);

    CHECK_THROWS_AS(diagram_from_word(3, {5}), std::invalid_argument);
}

TEST_CASE("associativity fuzz, 1000 triples per strand count") {
    std::mt19937_64 rng(424242);
    for (int s = 1; s <= 6; ++s) {
        DiagramAlgebra algebra(s);
        std::uniform_int_distribution<std::size_t> pick(0, algebra.size() - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
            auto [ij, l1] = algebra.mul(i, j);
            auto [left, l2] = algebra.mul(ij, k);
            auto [jk, l3] = algebra.mul(j, k);
            auto [right, l4] = algebra.mul(i, jk);
            CHECK(left == right);
            CHECK(l1 + l2 == l3 + l4);
        }
    }
}

TEST_CASE("right cup sets: gap condition and stability under left multiplication") {
    for (int s = 2; s <= 5; ++s) {
        DiagramAlgebra algebra(s);
        for (std::size_t i = 0; i < algebra.size(); ++i) {
            const auto& cups = algebra.cups(i);
            for (std::size_t k = 0; k + 1 < cups.size(); ++k)
                CHECK(cups[k + 1] - cups[k] >= 2);
        }
        // F(A*B) contains F(B), and loops bound by s
        for (std::size_t a = 0; a < algebra.size(); ++a) {
            for (std::size_t b = 0; b < algebra.size(); ++b) {
                auto [p, loops] = algebra.mul(a, b);
                CHECK(loops <= s);
                const auto& pc = algebra.cups(p);
                const auto& bc = algebra.cups(b);
                CHECK(std::includes(pc.begin(), pc.end(), bc.begin(), bc.end()));
            }
        }
    }
}

TEST_CASE("products of non-identity diagrams that give the identity close a loop") {
    // Assertable form of the TLhat ideal property; the case never occurs.
    for (int s = 2; s <= 5; ++s) {
        DiagramAlgebra algebra(s);
        for (std::size_t a = 0; a < algebra.size(); ++a) {
            if (a == algebra.identity_index())
                continue;
            for (std::size_t b = 0; b < algebra.size(); ++b) {
                if (b == algebra.identity_index())
                    continue;
                auto [p, loops] = algebra.mul(a, b);
                if (p == algebra.identity_index())
                    CHECK(loops >= 1);
            }
        }
    }
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(PlanarDiagram(2, {1, 0, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarDiagram(2, {2, 3, 0}), std::invalid_argument);
    // L0-R1 and L1-R0 cross
    CHECK_THROWS_AS(PlanarDiagram(2, {3, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_diagrams(0), std::invalid_argument);
}

TEST_CASE("diagram algebra lookups") {
    DiagramAlgebra algebra(3);
    CHECK(algebra.size() == 5);
    CHECK(algebra.diagram(algebra.identity_index()).is_identity());
    for (std::size_t i = 0; i < algebra.size(); ++i)
        CHECK(algebra.index_of(algebra.diagram(i)) == i);
    CHECK_THROWS_AS(algebra.index_of(identity_diagram(4)), std::invalid_argument);
}
