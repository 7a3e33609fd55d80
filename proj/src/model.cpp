#include "ratsing/model.hpp"

#include "ratsing/canon.hpp"
#include "ratsing/central.hpp"
#include "ratsing/fundamental.hpp"
#include "ratsing/rdp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ratsing {

CanonicalModelGraph canonical_model(const ResolutionGraph& g) {
    auto report = is_rational(g);
    if (!report.is_rational) throw NotRational("canonical model needs a rational graph: " + describe(report));
    Cycle z = fundamental_cycle_of(g);
    CanonicalModelGraph m;
    std::vector<int> index(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (g.weight(v) == 2) continue;
        index[v] = static_cast<int>(m.vertices.size());
        m.vertices.push_back({v, g.weight(v), z[v]});
    }
    std::set<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0) edges.insert(std::minmax(index[e.u], index[e.v]));
    }
    for (const auto& comp : find_rdp_components(g)) {
        m.rdp_records.push_back(dynkin_name(comp));
        std::vector<int> ext;
        for (const auto& [e, in] : comp.attachments) ext.push_back(index[e]);
        std::sort(ext.begin(), ext.end());
        ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
        if (ext.size() == 2) {
            edges.insert({ext[0], ext[1]});
        } else if (ext.size() == 3) {
            m.t_joints.push_back({ext[0], ext[1], ext[2]});
        } else if (ext.size() > 3) {
            throw GraphError("configuration " + dynkin_name(comp) + " meets " + std::to_string(ext.size()) +
                             " curves; not a hypertree");
        }
    }
    m.edges.assign(edges.begin(), edges.end());
    std::sort(m.t_joints.begin(), m.t_joints.end());
    std::sort(m.rdp_records.begin(), m.rdp_records.end());
    return m;
}

ResolutionGraph minimal_tree(const CanonicalModelGraph& m) {
    std::vector<VertexData> vs;
    std::vector<Edge> es;
    for (const auto& v : m.vertices) vs.push_back({v.weight, 0, {}});
    for (const auto& [a, b] : m.edges) es.push_back({a, b, 1});
    for (const auto& t : m.t_joints) {
        int c = static_cast<int>(vs.size());
        vs.push_back({2, 0, {}});
        for (int x : t) es.push_back({x, c, 1});
    }
    return ResolutionGraph(std::move(vs), std::move(es));
}

bool same_hypertree(const CanonicalModelGraph& a, const CanonicalModelGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
        a.t_joints.size() != b.t_joints.size())
        return false;
    return isomorphic(minimal_tree(a), minimal_tree(b));
}

bool almost_reduced_check(const ResolutionGraph& g) {
    Cycle z = fundamental_cycle_of(g);
    for (int v = 0; v < g.size(); ++v) {
        if (g.weight(v) > 2 && z[v] != 1) return false;
    }
    return true;
}

bool valency_criterion(const ResolutionGraph& g) {
    for (int v = 0; v < g.size(); ++v) {
        if (g.weight(v) == 2) continue;
        std::int64_t twos = 0;
        for (const auto& nb : g.neighbors(v)) twos += g.weight(nb.vertex) == 2;
        if (valency(g, v) + twos > g.weight(v)) return false;
    }
    return true;
}

std::string model_dot(const CanonicalModelGraph& m) {
    std::ostringstream out;
    out << "graph model {\n  node [shape=box, style=filled, fillcolor=black, fontcolor=white];\n";
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << m.vertices[i].weight << '/' << m.vertices[i].multiplicity << "\"];\n";
    for (const auto& [a, b] : m.edges) out << "  v" << a << " -- v" << b << ";\n";
    for (std::size_t i = 0; i < m.t_joints.size(); ++i) {
        out << "  t" << i << " [shape=point, label=\"\"];\n";
        for (int x : m.t_joints[i]) out << "  v" << x << " -- t" << i << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_dot(const ResolutionGraph& g) {
    std::optional<Cycle> z;
    if (g.size() > 0 && is_rational(g).is_rational) z = fundamental_cycle_of(g);
    std::ostringstream out;
    out << "graph resolution {\n";
    for (int v = 0; v < g.size(); ++v) {
        out << "  v" << v << " [";
        if (g.weight(v) == 2) {
            out << "shape=circle, label=\"" << (z ? (*z)[v].str() : std::string()) << "\"";
        } else {
            out << "shape=box, style=filled, fillcolor=black, fontcolor=white, label=\"" << g.weight(v);
            if (z) out << '/' << (*z)[v];
            out << "\"";
        }
        out << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  v" << e.u << " -- v" << e.v;
        if (e.weight != 1) out << " [label=\"" << e.weight << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_model(const CanonicalModelGraph& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        const auto& v = m.vertices[i];
        out << "vertex " << i << " (source " << v.source << "): b=" << v.weight << " z=" << v.multiplicity << '\n';
    }
    for (const auto& [a, b] : m.edges) out << "edge " << a << ' ' << b << '\n';
    for (const auto& t : m.t_joints) out << "t-joint " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    for (const auto& r : m.rdp_records) out << "rdp " << r << '\n';
    return out.str();
}

}  // namespace ratsing
