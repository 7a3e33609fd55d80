#pragma once

#include "ratsing/graph.hpp"
#include "ratsing/rdp.hpp"

#include <functional>

namespace ratsing {

struct EnumerationCaps {
    int max_chain = 12;
    int max_components_per_vertex = 6;
    int max_weight = 10;
    int max_vertices = 12;

    void validate() const;
    std::string describe() const;
};

// A configuration joined to core vertices, one target per family role.
// A^{1,1}_0 is a direct edge.
struct Placement {
    ConfigName name;
    std::vector<int> targets;
    auto operator<=>(const Placement&) const = default;
};

// Core non-(-2) vertices plus placed configurations.
struct Realisation {
    std::vector<std::int64_t> weights;
    std::vector<std::pair<int, int>> edges;  // direct core adjacencies
    std::vector<Placement> placements;

    ResolutionGraph build() const;
    int vertex_count() const;
    std::string describe() const;
};

// All unlabelled trees on n vertices (weights 2), up to isomorphism.
std::vector<ResolutionGraph> unlabeled_trees(int n);

// Hypertrees of canonical degree m - 2 drawn as minimal trees: non-(-2)
// vertices with b >= 3 and T-joints as (-2)'s of valency 3 whose neighbours are
// all non-(-2). `strict` applies the valency criterion, otherwise only b >= valency.
std::vector<ResolutionGraph> enumerate_hypertrees(int m, bool strict);

std::vector<ResolutionGraph> enumerate_minimal_representatives(int m);

struct EnumerationStats {
    std::size_t candidates = 0;
    std::size_t emitted = 0;
    std::size_t rejected = 0;  // built but failing the verification
};

using GraphSink = std::function<void(const ResolutionGraph&)>;

// Output is sorted by canonical form and free of isomorphic duplicates.
EnumerationStats enumerate_almost_reduced(int m, const EnumerationCaps& caps, const GraphSink& sink);
EnumerationStats enumerate_single_nonreduced(int m, const EnumerationCaps& caps, const GraphSink& sink);

// Configurations with one attachment, within the chain cap.
std::vector<ConfigName> single_attachment_catalogue(int max_chain);
// Configurations with two attachments, one entry per orientation.
std::vector<ConfigName> double_attachment_catalogue(int max_chain);

// Multiplicity of the vertex of the configuration adjacent to the attachment.
int attachment_multiplicity(const ConfigName& c, Role role);

// (-b) vertex with the given single-attachment configurations.
ResolutionGraph single_vertex_graph(std::int64_t b, const std::vector<ConfigName>& configs);

struct SingleVertexSearch {
    std::size_t graphs = 0;    // candidates examined
    std::size_t rational = 0;  // of which rational
    Integer max_multiplicity = 0;
    std::vector<std::pair<std::int64_t, std::vector<ConfigName>>> maximisers;
    // best multiplicity per (b, multiset) for later lookups
    std::map<std::pair<std::int64_t, std::vector<ConfigName>>, Integer> results;
};

// Every multiset of at most max_components configurations from
// {A^1_n : n <= max_a1} and {A^2_{2l} : l <= max_l} at a (-b), bmin <= b <= bmax.
SingleVertexSearch single_vertex_search(int max_a1, int max_l, int max_components, int bmin, int bmax);

}  // namespace ratsing
