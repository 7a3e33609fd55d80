#include "doctest.h"
#include "helpers.hpp"

#include "ratsing/fundamental.hpp"
#include "ratsing/lattice.hpp"

using namespace ratsing;
using namespace testing_support;

namespace {

Cycle ints(std::initializer_list<int> xs) { return Cycle(xs.begin(), xs.end()); }

// Expected coefficients, in the vertex order of the fixture.
Cycle karras_expected() {
    Cycle z;
    for (int c = 2; c <= 9; ++c) z.push_back(c);
    z.push_back(10);
    z.push_back(5);
    for (int c = 9; c >= 1; --c) z.push_back(c);
    z.push_back(6);
    z.push_back(7);
    z.push_back(8);
    z.push_back(4);
    for (int c = 7; c >= 1; --c) z.push_back(c);
    z.push_back(5);
    z.push_back(6);
    z.push_back(3);
    for (int c = 5; c >= 1; --c) z.push_back(c);
    z.push_back(4);
    z.push_back(2);
    return z;
}

}  // namespace

TEST_CASE("fundamental cycle basics") {
    for (int b = 1; b <= 5; ++b) CHECK(fundamental_cycle(chain_graph({b})).first == ints({1}));
    auto g = e6();
    auto [z, trace] = fundamental_cycle(g);
    CHECK(z == ints({1, 2, 3, 2, 1, 2}));
    CHECK(z == box_search_minimum(g, 6));
    CHECK(trace.start == reduced_cycle(g));
    CHECK(trace.result == z);
    for (const auto& st : trace.steps) CHECK(st.trigger > 0);
    CHECK_THROWS_AS(fundamental_cycle(star_graph(2, {{2}, {2}, {2}, {2}})), NotNegativeDefinite);
}

TEST_CASE("karras fundamental cycle matches the expected coefficients") {
    auto g = karras();
    auto z = fundamental_cycle(g).first;
    CHECK(z == karras_expected());
    for (int i = 0; i < g.size(); ++i) CHECK(row_value(g, karras_expected(), i) <= 0);
    CHECK(degree(g) == 37);
    CHECK(complexity(g) == 6);
    auto fast = rational_fundamental_cycle(g);
    REQUIRE(fast);
    CHECK(*fast == z);
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_fundamental_cycle(chain_graph({2}), 3) == ints({1}));
    CHECK(brute_force_fundamental_cycle(chain_graph({2, 2}), 2) == ints({1, 1}));
    CHECK(brute_force_fundamental_cycle(e6(), 6) == fundamental_cycle(e6()).first);
    CHECK_THROWS_AS(brute_force_fundamental_cycle(e6(), 2), BoxExhausted);
}

TEST_CASE("oracle equivalence on random small trees") {
    std::mt19937 rng(5);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        auto g = random_tree(rng, 1 + t % 6, 2, 4);
        if (!check_negative_definite(g).is_negative_definite) continue;
        auto z = fundamental_cycle(g).first;
        bool small = true;
        for (const auto& c : z) small = small && c <= 6;
        if (!small) continue;
        CHECK(z == box_search_minimum(g, 6));
        CHECK(z == brute_force_fundamental_cycle(g, 12));
        for (int i = 0; i < g.size(); ++i) {
            Cycle w = z;
            w[i] -= 1;
            bool positive = true;
            for (const auto& c : w) positive = positive && c >= 1;
            if (positive) CHECK_FALSE(is_anti_nef(g, w));
        }
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("rationality") {
    CHECK(is_rational(e6()).is_rational);
    CHECK(is_rational(e8()).is_rational);
    CHECK(is_rational(dn(7)).is_rational);
    CHECK(is_rational(chain_graph({2, 2, 2, 2})).is_rational);
    ResolutionGraph g({VertexData{2, 1, ""}}, {});
    auto rep = is_rational(g);
    CHECK_FALSE(rep.is_rational);
    CHECK(rep.reason == RationalityReason::GenusWeight);
    auto star = star_graph(2, {{3}, {3}, {3}, {3}});
    auto z = fundamental_cycle(star).first;
    CHECK(z == ints({2, 1, 1, 1, 1}));
    CHECK(genus(star, z) == 1);
    auto srep = is_rational(star);
    CHECK_FALSE(srep.is_rational);
    CHECK(srep.reason == RationalityReason::LauferViolation);
    CHECK_FALSE(rational_fundamental_cycle(star));
    CHECK(is_rational(karras()).is_rational);
}

TEST_CASE("rationality agrees with genus of Z") {
    std::mt19937 rng(9);
    for (int t = 0; t < 400; ++t) {
        auto g = random_tree(rng, 1 + t % 9, 2, 4);
        if (!check_negative_definite(g).is_negative_definite) {
            CHECK(is_rational(g).reason == RationalityReason::NotNegativeDefinite);
            CHECK_FALSE(rational_fundamental_cycle(g));
            continue;
        }
        auto z = fundamental_cycle(g).first;
        bool r = is_rational(g).is_rational;
        CHECK(r == (genus(g, z) == 0));
        auto fast = rational_fundamental_cycle(g);
        CHECK(fast.has_value() == r);
        if (fast) CHECK(*fast == z);
    }
}

TEST_CASE("degree") {
    for (int b = 2; b <= 6; ++b) CHECK(degree(chain_graph({b})) == b);
    CHECK(degree(e6()) == 2);
    CHECK(degree(e8()) == 2);
    CHECK(degree(dn(5)) == 2);
    CHECK_THROWS_AS(degree(star_graph(2, {{3}, {3}, {3}, {3}})), NotRational);
}

TEST_CASE("blow up and pull back") {
    auto [g1, e0] = blow_up(chain_graph({2}), FreePoint{0});
    CHECK(e0 == 1);
    CHECK(g1.weight(0) == 3);
    CHECK(g1.weight(1) == 1);
    auto pb = pull_back(chain_graph({2}), g1, FreePoint{0}, ints({1}));
    CHECK(pb == ints({1, 1}));
    CHECK(intersect(g1, pb, pb) == -2);

    auto a2 = chain_graph({2, 2});
    auto [g2, e1] = blow_up(a2, EdgePoint{0, 1});
    CHECK(g2.weight(0) == 3);
    CHECK(g2.weight(1) == 3);
    CHECK(g2.weight(e1) == 1);
    CHECK_FALSE(g2.adjacent(0, 1));
    auto pb2 = pull_back(a2, g2, EdgePoint{0, 1}, ints({1, 1}));
    CHECK(pb2 == ints({1, 1, 2}));
    CHECK(intersect(g2, pb2, pb2) == -2);
    CHECK_THROWS(pull_back(a2, g1, EdgePoint{0, 1}, ints({1, 1})));
    CHECK_THROWS(blow_up(a2, EdgePoint{0, 0}));

    std::mt19937 rng(2);
    for (int t = 0; t < 30; ++t) {
        auto g = random_tree(rng, 4, 2, 4);
        Cycle a(4);
        for (auto& x : a) x = std::uniform_int_distribution<int>(-2, 3)(rng);
        auto [h, _] = blow_up(g, FreePoint{t % 4});
        CHECK(genus(h, pull_back(g, h, FreePoint{t % 4}, a)) == genus(g, a));
    }

    auto k = karras();
    auto [kb, kv] = blow_up(k, FreePoint{8});
    auto z = fundamental_cycle(kb).first;
    CHECK(z == pull_back(k, kb, FreePoint{8}, karras_expected()));
    CHECK(-intersect(kb, z, z) == 37);
    CHECK(genus(kb, z) == 0);
    (void)kv;
}

TEST_CASE("steepening") {
    auto g = steepen(chain_graph({2}), {{0, 1}});
    CHECK(g.weight(0) == 3);
    CHECK(is_rational(g).is_rational);
    auto e = steepen(e6(), {{2, 1}});
    CHECK(is_rational(e).is_rational);
    CHECK(fundamental_cycle(e).first[2] == 1);
    auto k = steepen(karras(), {{8, 1}});
    CHECK(is_rational(k).is_rational);
    CHECK(fundamental_cycle(k).first[8] == 1);
    CHECK_THROWS(steepen(e6(), {{9, 1}}));
    CHECK_THROWS(steepen(e6(), {{0, 0}}));
}

TEST_CASE("complexity") {
    CHECK(complexity(chain_graph({2, 3, 4, 2})) == 0);
    auto star = star_graph(3, {{2}, {2}, {2}});
    CHECK(complexity(star) == 1);
    CHECK(degree(star) == 3);
}

TEST_CASE("traces") {
    auto g = e6();
    auto t1 = fundamental_cycle(g).second;
    auto t2 = fundamental_cycle(g).second;
    CHECK(render_trace(t1) == render_trace(t2));
    CHECK(render_trace(t1).find("+2 -> ") != std::string::npos);
    auto t = computation_sequence(g, reduced_cycle(g));
    CHECK(t.result == ints({1, 2, 3, 2, 1, 2}));
    // the first addition is at the lowest index with positive row value
    REQUIRE(!t.steps.empty());
    CHECK(t.steps.front().vertex == 2);
}
