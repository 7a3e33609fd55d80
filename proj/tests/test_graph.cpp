#include "doctest.h"
#include "helpers.hpp"

#include "ratsing/fundamental.hpp"

using namespace ratsing;
using namespace testing_support;

TEST_CASE("intersect on small graphs") {
    auto single = chain_graph({2});
    CHECK(intersect(single, {1}, {1}) == -2);
    auto a2 = chain_graph({2, 2});
    CHECK(intersect(a2, {1, 0}, {0, 1}) == 1);
    CHECK(row_value(a2, {1, 1}, 0) == -1);
    CHECK(row_value(single, {1}, 0) == -2);
}

TEST_CASE("E8 fundamental cycle squares to -2") {
    auto g = e8();
    auto z = box_search_minimum(g, 6);
    CHECK(intersect(g, z, z) == -2);
}

TEST_CASE("intersection form properties on random cycles") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto g = random_tree(rng, 6, 2, 4);
        std::uniform_int_distribution<int> c(-3, 3);
        Cycle a(6), b(6), d(6);
        for (int i = 0; i < 6; ++i) {
            a[i] = c(rng);
            b[i] = c(rng);
            d[i] = c(rng);
        }
        CHECK(intersect(g, a, b) == intersect(g, b, a));
        Cycle ab(6);
        for (int i = 0; i < 6; ++i) ab[i] = a[i] + b[i];
        CHECK(intersect(g, ab, d) == intersect(g, a, d) + intersect(g, b, d));
        CHECK(genus(g, ab) == genus(g, a) + genus(g, b) + intersect(g, a, b) - 1);
        for (int i = 0; i < 6; ++i) CHECK(row_value(g, a, i) == intersect(g, a, unit_cycle(g, i)));
    }
}

TEST_CASE("genus") {
    ResolutionGraph g({VertexData{2, 3, ""}}, {});
    CHECK(genus(g, {1}) == 3);
    CHECK(genus(chain_graph({2, 2}), {1, 1}) == 0);
    auto star = star_graph(2, {{3}, {3}, {3}, {3}});
    CHECK(genus(star, {2, 1, 1, 1, 1}) == 1);
}

TEST_CASE("valency") {
    CHECK(valency(chain_graph({2, 2, 2}), 1) == 2);
    CHECK(valency(dn(4), 1) == 3);
    CHECK(valency(chain_graph({5}), 0) == 0);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(ResolutionGraph({VertexData{0, 0, ""}}, {}), GraphError);
    CHECK_THROWS_AS(ResolutionGraph({VertexData{}, VertexData{}}, {}), GraphError);
    CHECK_THROWS_AS(ResolutionGraph({VertexData{}, VertexData{}}, {Edge{0, 1, 1}, Edge{0, 1, 1}}), GraphError);
    CHECK_THROWS_AS(ResolutionGraph({VertexData{}}, {Edge{0, 0, 1}}), GraphError);
    CHECK_THROWS_AS(row_value(chain_graph({2}), {1}, 3), GraphError);
    CHECK_THROWS_AS(intersect(chain_graph({2}), {1, 1}, {1}), GraphError);
}

TEST_CASE("text format round trip") {
    auto g = parse_graph("# comment\nv 0 3\nv 1 2 1 @tip\ne 0 1 2\n");
    CHECK(g.weight(0) == 3);
    CHECK(g.vertex(1).genus == 1);
    CHECK(g.vertex(1).label == "tip");
    CHECK(g.edge_weight(0, 1) == 2);
    CHECK(parse_graph(render_graph(g)) == g);
    CHECK_THROWS_AS(parse_graph("v 0 2\ne 0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("v 1 2\n"), GraphError);
    auto k = karras();
    CHECK(parse_graph(render_graph(k)) == k);
}

TEST_CASE("karras fixture shape") {
    auto k = karras();
    CHECK(k.size() == 40);
    CHECK(k.is_tree());
    int squares = 0;
    for (int i = 0; i < k.size(); ++i) squares += k.weight(i) == 3;
    CHECK(squares == 5);
}
