#include "ratsing/builders.hpp"

namespace ratsing {

int GraphBuilder::add(std::int64_t b, std::string label) {
    VertexData d;
    d.weight = b;
    d.label = std::move(label);
    vertices_.push_back(std::move(d));
    return size() - 1;
}

void GraphBuilder::join(int a, int b) {
    if (a == b) throw GraphError("cannot join a vertex to itself");
    edges_.push_back(Edge{std::min(a, b), std::max(a, b), 1});
}

std::vector<int> GraphBuilder::chain(int n, std::int64_t b) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(add(b));
        if (i > 0) join(out[i - 1], out[i]);
    }
    return out;
}

void GraphBuilder::set_weight(int v, std::int64_t b) { vertices_.at(v).weight = b; }

ResolutionGraph GraphBuilder::build() const { return ResolutionGraph(vertices_, edges_); }

ResolutionGraph star_graph(std::int64_t centre, const std::vector<std::vector<std::int64_t>>& arms) {
    GraphBuilder gb;
    int c = gb.add(centre);
    for (const auto& arm : arms) {
        int prev = c;
        for (auto b : arm) {
            int v = gb.add(b);
            gb.join(prev, v);
            prev = v;
        }
    }
    return gb.build();
}

ResolutionGraph chain_graph(const std::vector<std::int64_t>& weights) {
    GraphBuilder gb;
    int prev = -1;
    for (auto b : weights) {
        int v = gb.add(b);
        if (prev >= 0) gb.join(prev, v);
        prev = v;
    }
    return gb.build();
}

}  // namespace ratsing
