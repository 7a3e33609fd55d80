#pragma once

#include "ratsing/graph.hpp"

namespace ratsing {

// Incremental construction of simple genus-zero trees.
class GraphBuilder {
public:
    int add(std::int64_t b, std::string label = {});
    void join(int a, int b);

    // Chain of n vertices of weight b; returns the indices in order.
    std::vector<int> chain(int n, std::int64_t b = 2);

    void set_weight(int v, std::int64_t b);
    std::int64_t weight(int v) const { return vertices_.at(v).weight; }
    int size() const { return static_cast<int>(vertices_.size()); }

    ResolutionGraph build() const;

private:
    std::vector<VertexData> vertices_;
    std::vector<Edge> edges_;
};

// Star with a central vertex and arms of the given lengths (all weights b).
// Index 0 is the centre; arms follow in order, each listed from the centre out.
ResolutionGraph star_graph(std::int64_t centre, const std::vector<std::vector<std::int64_t>>& arms);

ResolutionGraph chain_graph(const std::vector<std::int64_t>& weights);

}  // namespace ratsing
