#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ratsing {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Cycle = std::vector<Integer>;
using RationalCycle = std::vector<Rational>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VertexData {
    std::int64_t weight = 2;  // b_i, self-intersection is -b_i
    std::int64_t genus = 0;
    std::string label;
};

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    std::int64_t weight = 1;

    bool operator==(const Edge&) const = default;
};

struct Neighbor {
    int vertex;
    std::int64_t weight;
};

// Immutable weighted graph; vertex order is part of its identity.
class ResolutionGraph {
public:
    ResolutionGraph() = default;
    ResolutionGraph(std::vector<VertexData> vertices, std::vector<Edge> edges);

    int size() const { return static_cast<int>(vertices_.size()); }
    const VertexData& vertex(int i) const;
    const std::vector<VertexData>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(int i) const;

    std::int64_t weight(int i) const { return vertex(i).weight; }
    std::int64_t edge_weight(int i, int j) const;  // 0 when not adjacent
    bool adjacent(int i, int j) const { return edge_weight(i, j) != 0; }

    bool is_tree() const;
    bool has_simple_edges() const;
    bool all_genus_zero() const;

    // Exact determinant of the intersection matrix, computed once.
    const Integer& determinant() const;

    bool operator==(const ResolutionGraph& other) const;

private:
    std::vector<VertexData> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

Cycle zero_cycle(const ResolutionGraph& g);
Cycle reduced_cycle(const ResolutionGraph& g);  // E = sum of all E_i
Cycle unit_cycle(const ResolutionGraph& g, int i);

Integer intersect(const ResolutionGraph& g, const Cycle& a, const Cycle& b);
Integer row_value(const ResolutionGraph& g, const Cycle& a, int i);
bool is_anti_nef(const ResolutionGraph& g, const Cycle& a);
Integer genus(const ResolutionGraph& g, const Cycle& a);
int valency(const ResolutionGraph& g, int i);

// Text format: `v <index> <b> [genus] [@label]`, `e <i> <j> [weight]`, `#` comments.
ResolutionGraph parse_graph(const std::string& text);
std::string render_graph(const ResolutionGraph& g);
ResolutionGraph load_graph(const std::string& path);

std::string format_cycle(const Cycle& a);

// Induced subgraph on `keep` (in the given order); must be connected.
ResolutionGraph induced_subgraph(const ResolutionGraph& g, const std::vector<int>& keep);

// Connected components of g with the vertices in `removed` deleted.
std::vector<std::vector<int>> components_without(const ResolutionGraph& g,
                                                 const std::vector<int>& removed);

}  // namespace ratsing
