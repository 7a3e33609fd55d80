#include "doctest.h"
#include "helpers.hpp"

#include "ratsing/canon.hpp"
#include "ratsing/classify.hpp"
#include "ratsing/fundamental.hpp"
#include "ratsing/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace ratsing;
using namespace testing_support;

namespace {

Cycle expected_karras_cycle() {
    std::ifstream in(data_path("karras.cycle"));
    std::string line;
    Cycle z;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long c;
        while (ls >> c) z.push_back(c);
    }
    return z;
}

// (-2) components named by shape alone: chains are A_n, anything else is left as "?".
std::vector<std::string> chain_records(const ResolutionGraph& g) {
    std::vector<int> removed;
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) != 2) removed.push_back(i);
    std::vector<std::string> out;
    for (const auto& comp : components_without(g, removed)) {
        bool path = true;
        for (int v : comp) {
            int inside = 0;
            for (const auto& nb : g.neighbors(v)) inside += std::count(comp.begin(), comp.end(), nb.vertex) > 0;
            path = path && inside <= 2;
        }
        out.push_back(path ? "A" + std::to_string(comp.size()) : "?");
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("karras canonical model") {
    auto g = karras();
    auto z = expected_karras_cycle();
    auto m = canonical_model(g);
    REQUIRE(m.vertices.size() == 5);
    std::vector<Integer> mult;
    for (const auto& v : m.vertices) {
        CHECK(v.weight == g.weight(v.source));
        CHECK(v.multiplicity == z[v.source]);
        mult.push_back(v.multiplicity);
    }
    CHECK(mult == std::vector<Integer>{10, 6, 8, 5, 6});
    CHECK(m.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(m.t_joints.empty());
    CHECK(m.rdp_records == chain_records(g));
    Integer kz = 0;
    for (const auto& v : m.vertices) kz += v.multiplicity * (v.weight - 2);
    CHECK(kz == degree(g) - 2);
}

TEST_CASE("T-joint becomes a hyperedge") {
    auto g = star_graph(2, {{3}, {3}, {3}});
    auto m = canonical_model(g);
    CHECK(m.vertices.size() == 3);
    CHECK(m.edges.empty());
    REQUIRE(m.t_joints.size() == 1);
    CHECK(m.t_joints[0] == std::array<int, 3>{0, 1, 2});
    CHECK(isomorphic(minimal_tree(m), g));
    auto dot = model_dot(m);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("t0 [shape=point") != std::string::npos);
}

TEST_CASE("RDP graphs have an empty hypergraph") {
    auto m = canonical_model(e8());
    CHECK(m.vertices.empty());
    CHECK(m.edges.empty());
    CHECK(m.rdp_records == std::vector<std::string>{"E8"});
    CHECK(canonical_model(dn(5)).rdp_records == std::vector<std::string>{"D5"});
}

TEST_CASE("canonical model needs a rational graph") {
    CHECK_THROWS(canonical_model(star_graph(2, {{3}, {3}, {3}, {3}})));
}

TEST_CASE("minimal tree round trip") {
    for (int m = 3; m <= 6; ++m) {
        for (const auto& g : enumerate_minimal_representatives(m)) {
            auto model = canonical_model(g);
            auto tree = minimal_tree(model);
            CHECK(isomorphic(tree, g));
            CHECK(same_hypertree(model, canonical_model(tree)));
        }
    }
}

TEST_CASE("same hypertree") {
    auto direct = chain_graph({3, 3});
    auto bridged = chain_graph({3, 2, 3});
    // contracting the A1 bridge leaves the two images meeting
    CHECK(same_hypertree(canonical_model(direct), canonical_model(bridged)));
    CHECK_FALSE(same_hypertree(canonical_model(chain_graph({3, 3, 3})), canonical_model(star_graph(2, {{3}, {3}, {3}}))));
    CHECK(same_hypertree(canonical_model(direct), canonical_model(chain_graph({2, 3, 3, 2, 2}))));
    CHECK_FALSE(same_hypertree(canonical_model(direct), canonical_model(chain_graph({3, 4}))));
}

TEST_CASE("canonical degree from the model on enumerated graphs") {
    EnumerationCaps caps;
    caps.max_chain = 4;
    caps.max_components_per_vertex = 3;
    caps.max_vertices = 8;
    int seen = 0;
    enumerate_almost_reduced(5, caps, [&](const ResolutionGraph& g) {
        if (seen++ % 7) return;
        auto m = canonical_model(g);
        Integer kz = 0;
        for (const auto& v : m.vertices) {
            CHECK(v.multiplicity == 1);
            kz += v.weight - 2;
        }
        CHECK(kz == 3);
        CHECK(almost_reduced_check(g));
    });
    CHECK(seen > 100);
}

TEST_CASE("almost reduced check and valency criterion") {
    // (-3) carrying A1 + A2 + A4 + A5 reaches multiplicity 6
    auto high = single_vertex_graph(3, {config(Family::A, 1, 1), config(Family::A, 2, 1), config(Family::A, 4, 1),
                                        config(Family::A, 5, 1)});
    CHECK_FALSE(almost_reduced_check(high));
    CHECK(almost_reduced_check(star_graph(3, {{2}, {2, 2}})));
    CHECK(valency_criterion(star_graph(3, {{3}, {3}, {3}})));
    CHECK(valency_criterion(star_graph(3, {{3}, {2}})));
    // three neighbours plus one adjacent (-2) exceed b = 3
    CHECK_FALSE(valency_criterion(star_graph(3, {{3}, {2}, {3}})));
    CHECK(valency_criterion(star_graph(4, {{3}, {2}, {3}})));
}
