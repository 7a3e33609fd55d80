#pragma once

#include "ratsing/graph.hpp"

#include <array>

namespace ratsing {

struct ModelVertex {
    int source = 0;  // vertex in the resolution graph
    std::int64_t weight = 3;
    Integer multiplicity = 1;
};

// Dual hypergraph of the canonical model, with fundamental-cycle
// multiplicities carried as a second weight.
struct CanonicalModelGraph {
    std::vector<ModelVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // model indices, sorted
    std::vector<std::array<int, 3>> t_joints;
    std::vector<std::string> rdp_records;  // "A3", "D5", "E8", sorted

    bool operator==(const CanonicalModelGraph&) const = default;
};

CanonicalModelGraph canonical_model(const ResolutionGraph& g);

// Direct edges stay edges; each T-joint becomes one (-2) joined to all three.
ResolutionGraph minimal_tree(const CanonicalModelGraph& m);

// Same hypertree: vertices matched by weight, edges and T-joints as sets.
bool same_hypertree(const CanonicalModelGraph& a, const CanonicalModelGraph& b);

bool almost_reduced_check(const ResolutionGraph& g);

// Every non-(-2): valency plus number of adjacent (-2)'s is at most b.
bool valency_criterion(const ResolutionGraph& g);

std::string model_dot(const CanonicalModelGraph& m);
std::string graph_dot(const ResolutionGraph& g);  // b/z labels when rational

std::string render_model(const CanonicalModelGraph& m);

}  // namespace ratsing
