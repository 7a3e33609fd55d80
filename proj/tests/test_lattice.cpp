#include "doctest.h"
#include "helpers.hpp"

#include "ratsing/fundamental.hpp"
#include "ratsing/lattice.hpp"

using namespace ratsing;
using namespace testing_support;

TEST_CASE("negative definiteness") {
    CHECK(check_negative_definite(chain_graph({2})).is_negative_definite);
    ResolutionGraph doubled({VertexData{}, VertexData{}}, {Edge{0, 1, 2}});
    auto rep = check_negative_definite(doubled);
    CHECK_FALSE(rep.is_negative_definite);
    REQUIRE(rep.failing_minor);
    CHECK(*rep.failing_minor == 2);
    CHECK(check_negative_definite(karras()).is_negative_definite);
    auto star = star_graph(2, {{2}, {2}, {2}, {2}});
    CHECK_FALSE(check_negative_definite(star).is_negative_definite);
}

TEST_CASE("definiteness agrees with exhaustive sign check") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 3;
        GraphBuilder gb;
        for (int i = 0; i < n; ++i) {
            gb.add(std::uniform_int_distribution<int>(1, 3)(rng));
            if (i > 0) gb.join(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
        }
        auto g = gb.build();
        bool all_negative = true;
        std::vector<int> a(n, -5);
        while (true) {
            bool zero = true;
            for (int x : a) zero = zero && x == 0;
            if (!zero && intersect(g, Cycle(a.begin(), a.end()), Cycle(a.begin(), a.end())) >= 0) all_negative = false;
            int k = 0;
            while (k < n && a[k] == 5) a[k++] = -5;
            if (k == n) break;
            ++a[k];
        }
        CHECK(check_negative_definite(g).is_negative_definite == all_negative);
    }
}

TEST_CASE("canonical cycle") {
    CHECK(canonical_cycle(chain_graph({2})) == RationalCycle{0});
    CHECK(canonical_cycle(chain_graph({3})) == RationalCycle{Rational(-1, 3)});
    auto g = chain_graph({3, 2});
    auto k = canonical_cycle(g);
    CHECK(k == RationalCycle{Rational(-2, 5), Rational(-1, 5)});
    for (int i = 0; i < 2; ++i) {
        auto e = unit_cycle(g, i);
        CHECK(Rational(intersect(g, e, e)) + intersect(g, e, k) == -2);
    }
    ResolutionGraph doubled({VertexData{}, VertexData{}}, {Edge{0, 1, 2}});
    CHECK_THROWS_AS(canonical_cycle(doubled), GraphError);
}

TEST_CASE("canonical degree") {
    CHECK(canonical_degree(chain_graph({3}), {1}) == 1);
    CHECK(canonical_degree(e8(), {1, 2, 3, 4, 5, 6, 4, 3}) == 0);
    auto k = karras();
    auto z = fundamental_cycle(k).first;
    CHECK(canonical_degree(k, z) == 35);
    ResolutionGraph g({VertexData{2, 1, ""}}, {});
    CHECK_THROWS_AS(canonical_degree(g, {1}), GraphError);
}

TEST_CASE("canonical degree matches Z.K and -Z^2 = Z.K + 2") {
    std::mt19937 rng(3);
    int rational = 0;
    for (int t = 0; t < 200; ++t) {
        auto g = random_tree(rng, 1 + t % 7, 2, 5);
        if (!check_negative_definite(g).is_negative_definite) continue;
        auto z = fundamental_cycle(g).first;
        CHECK(Rational(canonical_degree(g, z)) == intersect(g, z, canonical_cycle(g)));
        if (is_rational(g).is_rational) {
            ++rational;
            CHECK(-intersect(g, z, z) == canonical_degree(g, z) + 2);
        }
    }
    CHECK(rational > 50);
}
