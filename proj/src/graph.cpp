#include "ratsing/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace ratsing {

struct ResolutionGraph::Cache {
    std::once_flag det_once;
    Integer det;
};

namespace {

void fail(const std::string& msg) { throw GraphError(msg); }

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

ResolutionGraph::ResolutionGraph(std::vector<VertexData> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), cache_(std::make_shared<Cache>()) {
    const int r = size();
    if (r == 0) fail("graph has no vertices");
    for (int i = 0; i < r; ++i) {
        if (vertices_[i].weight < 1) fail("vertex " + std::to_string(i) + " has weight < 1");
        if (vertices_[i].genus < 0) fail("vertex " + std::to_string(i) + " has negative genus");
    }
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= r || e.v >= r)
            fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " references a missing vertex");
        if (e.u == e.v) fail("loop at vertex " + std::to_string(e.u));
        if (e.weight < 1) fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has weight < 1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v)
            fail("duplicate edge " + std::to_string(edges[k].u) + "-" + std::to_string(edges[k].v));
    }
    edges_ = std::move(edges);
    adjacency_.assign(r, {});
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.weight});
        adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }

    std::vector<char> seen(r, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& nb : adjacency_[x]) {
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = 1;
                ++count;
                stack.push_back(nb.vertex);
            }
        }
    }
    if (count != r) fail("graph is not connected");
}

const VertexData& ResolutionGraph::vertex(int i) const {
    if (i < 0 || i >= size()) fail("vertex index " + std::to_string(i) + " out of range");
    return vertices_[i];
}

const std::vector<Neighbor>& ResolutionGraph::neighbors(int i) const {
    if (i < 0 || i >= size()) fail("vertex index " + std::to_string(i) + " out of range");
    return adjacency_[i];
}

std::int64_t ResolutionGraph::edge_weight(int i, int j) const {
    for (const auto& nb : neighbors(i)) {
        if (nb.vertex == j) return nb.weight;
    }
    return 0;
}

bool ResolutionGraph::is_tree() const { return static_cast<int>(edges_.size()) == size() - 1; }

bool ResolutionGraph::has_simple_edges() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1; });
}

bool ResolutionGraph::all_genus_zero() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const VertexData& v) { return v.genus == 0; });
}

const Integer& ResolutionGraph::determinant() const {
    std::call_once(cache_->det_once, [this] {
        const int r = size();
        std::vector<std::vector<Integer>> m(r, std::vector<Integer>(r));
        for (int i = 0; i < r; ++i) m[i][i] = -vertices_[i].weight;
        for (const auto& e : edges_) {
            m[e.u][e.v] = e.weight;
            m[e.v][e.u] = e.weight;
        }
        cache_->det = bareiss_determinant(std::move(m));
    });
    return cache_->det;
}

bool ResolutionGraph::operator==(const ResolutionGraph& other) const {
    if (size() != other.size() || edges_ != other.edges_) return false;
    for (int i = 0; i < size(); ++i) {
        if (vertices_[i].weight != other.vertices_[i].weight || vertices_[i].genus != other.vertices_[i].genus)
            return false;
    }
    return true;
}

Cycle zero_cycle(const ResolutionGraph& g) { return Cycle(g.size(), 0); }

Cycle reduced_cycle(const ResolutionGraph& g) { return Cycle(g.size(), 1); }

Cycle unit_cycle(const ResolutionGraph& g, int i) {
    g.vertex(i);
    Cycle c(g.size(), 0);
    c[i] = 1;
    return c;
}

namespace {
void check_dim(const ResolutionGraph& g, const Cycle& a) {
    if (static_cast<int>(a.size()) != g.size())
        fail("cycle has " + std::to_string(a.size()) + " coefficients, graph has " + std::to_string(g.size()) +
             " vertices");
}
}  // namespace

Integer intersect(const ResolutionGraph& g, const Cycle& a, const Cycle& b) {
    check_dim(g, a);
    check_dim(g, b);
    Integer s = 0;
    for (int i = 0; i < g.size(); ++i) s -= a[i] * b[i] * g.weight(i);
    for (const auto& e : g.edges()) s += e.weight * (a[e.u] * b[e.v] + a[e.v] * b[e.u]);
    return s;
}

Integer row_value(const ResolutionGraph& g, const Cycle& a, int i) {
    check_dim(g, a);
    Integer s = -a[i] * g.weight(i);
    for (const auto& nb : g.neighbors(i)) s += nb.weight * a[nb.vertex];
    return s;
}

bool is_anti_nef(const ResolutionGraph& g, const Cycle& a) {
    for (int i = 0; i < g.size(); ++i) {
        if (row_value(g, a, i) > 0) return false;
    }
    return true;
}

Integer genus(const ResolutionGraph& g, const Cycle& a) {
    check_dim(g, a);
    if (g.determinant() == 0) fail("intersection matrix is singular; adjunction has no solution");
    // E_i.K = 2g_i - 2 + b_i by adjunction
    Integer ak = 0;
    for (int i = 0; i < g.size(); ++i) ak += a[i] * (2 * g.vertex(i).genus - 2 + g.weight(i));
    Integer twice = intersect(g, a, a) + ak;
    return 1 + twice / 2;
}

int valency(const ResolutionGraph& g, int i) {
    std::int64_t v = 0;
    for (const auto& nb : g.neighbors(i)) v += nb.weight;
    return static_cast<int>(v);
}

ResolutionGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<int, VertexData> verts;
    std::vector<Edge> edges;
    auto err = [&](const std::string& msg) { fail("line " + std::to_string(lineno) + ": " + msg); };
    auto to_int = [&](const std::string& tok) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (...) {
            err("expected an integer, got '" + tok + "'");
        }
        if (pos != tok.size()) err("expected an integer, got '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "v") {
            std::string label;
            if (tok.size() >= 3 && tok.back().starts_with('@')) {
                label = tok.back().substr(1);
                tok.pop_back();
            }
            if (tok.size() < 3 || tok.size() > 4) err("vertex line needs `v <index> <b> [genus]`");
            auto idx = to_int(tok[1]);
            if (idx < 0) err("negative vertex index");
            if (verts.count(static_cast<int>(idx))) err("duplicate vertex index " + tok[1]);
            VertexData vd;
            vd.weight = to_int(tok[2]);
            vd.genus = tok.size() == 4 ? to_int(tok[3]) : 0;
            vd.label = label;
            if (vd.weight < 1) err("vertex weight must be >= 1");
            if (vd.genus < 0) err("genus must be >= 0");
            verts[static_cast<int>(idx)] = vd;
        } else if (tok[0] == "e") {
            if (tok.size() < 3 || tok.size() > 4) err("edge line needs `e <i> <j> [weight]`");
            auto a = to_int(tok[1]);
            auto b = to_int(tok[2]);
            if (!verts.count(static_cast<int>(a))) err("edge endpoint " + tok[1] + " not declared");
            if (!verts.count(static_cast<int>(b))) err("edge endpoint " + tok[2] + " not declared");
            if (a == b) err("edge endpoints coincide");
            std::int64_t w = tok.size() == 4 ? to_int(tok[3]) : 1;
            if (w < 1) err("edge weight must be >= 1");
            Edge e{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)), w};
            for (const auto& o : edges) {
                if (o.u == e.u && o.v == e.v) err("duplicate edge " + tok[1] + " " + tok[2]);
            }
            edges.push_back(e);
        } else {
            err("unknown item '" + tok[0] + "'");
        }
    }
    std::vector<VertexData> vs;
    int expect = 0;
    for (auto& [idx, vd] : verts) {
        if (idx != expect) fail("vertex indices are not contiguous: missing " + std::to_string(expect));
        vs.push_back(vd);
        ++expect;
    }
    return ResolutionGraph(std::move(vs), std::move(edges));
}

std::string render_graph(const ResolutionGraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        out << "v " << i << ' ' << v.weight;
        if (v.genus != 0) out << ' ' << v.genus;
        if (!v.label.empty()) out << " @" << v.label;
        out << '\n';
    }
    for (const auto& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v;
        if (e.weight != 1) out << ' ' << e.weight;
        out << '\n';
    }
    return out.str();
}

ResolutionGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string format_cycle(const Cycle& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ' ';
        s += a[i].str();
    }
    return s;
}

ResolutionGraph induced_subgraph(const ResolutionGraph& g, const std::vector<int>& keep) {
    std::vector<int> pos(g.size(), -1);
    std::vector<VertexData> vs;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        pos[keep[k]] = static_cast<int>(k);
        vs.push_back(g.vertex(keep[k]));
    }
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v], e.weight});
    }
    return ResolutionGraph(std::move(vs), std::move(es));
}

std::vector<std::vector<int>> components_without(const ResolutionGraph& g, const std::vector<int>& removed) {
    std::vector<char> seen(g.size(), 0);
    for (int x : removed) seen[x] = 1;
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            for (const auto& nb : g.neighbors(comp[k])) {
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = 1;
                    comp.push_back(nb.vertex);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace ratsing
