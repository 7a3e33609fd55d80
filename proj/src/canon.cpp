#include "ratsing/canon.hpp"

#include <algorithm>

namespace ratsing {

namespace {

std::vector<int> tree_centres(const ResolutionGraph& g) {
    const int n = g.size();
    if (n <= 2) {
        std::vector<int> all;
        for (int i = 0; i < n; ++i) all.push_back(i);
        return all;
    }
    std::vector<int> deg(n), layer;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(g.neighbors(i).size());
        if (deg[i] <= 1) layer.push_back(i);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (const auto& nb : g.neighbors(v)) {
                if (--deg[nb.vertex] == 1) next.push_back(nb.vertex);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string vertex_tag(const VertexData& v) {
    std::string s = std::to_string(v.weight);
    if (v.genus) s += "g" + std::to_string(v.genus);
    return s;
}

struct Encoder {
    const ResolutionGraph& g;
    std::vector<int> order;

    std::string encode(int v, int parent, std::int64_t edge_weight) {
        std::vector<std::pair<std::string, int>> kids;
        for (const auto& nb : g.neighbors(v)) {
            if (nb.vertex == parent) continue;
            kids.emplace_back(encode(nb.vertex, v, nb.weight), nb.vertex);
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        if (edge_weight != 1) s += "*" + std::to_string(edge_weight);
        s += vertex_tag(g.vertex(v));
        for (auto& k : kids) s += k.first;
        return s + ")";
    }

    // Preorder following the sorted child encodings.
    void collect(int v, int parent) {
        order.push_back(v);
        std::vector<std::pair<std::string, int>> kids;
        for (const auto& nb : g.neighbors(v)) {
            if (nb.vertex != parent) kids.emplace_back(encode(nb.vertex, v, nb.weight), nb.vertex);
        }
        std::sort(kids.begin(), kids.end());
        for (auto& k : kids) collect(k.second, v);
    }
};

std::pair<std::string, int> best_root(const ResolutionGraph& g) {
    if (!g.is_tree()) throw GraphError("canonical form needs a tree");
    std::pair<std::string, int> best{"", -1};
    for (int c : tree_centres(g)) {
        Encoder e{g, {}};
        auto s = e.encode(c, -1, 1);
        if (best.second < 0 || s < best.first) best = {s, c};
    }
    return best;
}

}  // namespace

std::string canonical_form(const ResolutionGraph& g) {
    if (g.size() == 0) return "()";
    return best_root(g).first;
}

bool isomorphic(const ResolutionGraph& a, const ResolutionGraph& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

ResolutionGraph canonical_relabel(const ResolutionGraph& g) {
    if (g.size() == 0) return g;
    Encoder e{g, {}};
    e.collect(best_root(g).second, -1);
    std::vector<int> pos(g.size());
    for (int i = 0; i < g.size(); ++i) pos[e.order[i]] = i;
    std::vector<VertexData> vs;
    for (int v : e.order) vs.push_back(g.vertex(v));
    std::vector<Edge> es;
    for (const auto& ed : g.edges()) es.push_back({std::min(pos[ed.u], pos[ed.v]), std::max(pos[ed.u], pos[ed.v]), ed.weight});
    std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    return ResolutionGraph(std::move(vs), std::move(es));
}

}  // namespace ratsing
