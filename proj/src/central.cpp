#include "ratsing/central.hpp"

#include "ratsing/fundamental.hpp"

#include <algorithm>
#include <sstream>

namespace ratsing {

Cycle fundamental_cycle_of(const ResolutionGraph& g) {
    if (auto z = rational_fundamental_cycle(g)) return *z;
    return fundamental_cycle(g).first;
}

namespace {

CentralTrace start_trace(const ResolutionGraph& g, int central) {
    g.vertex(central);
    if (!is_rational(g).is_rational) throw NotRational("central computation needs a rational graph");
    CentralTrace t;
    t.central = central;
    t.components = components_without(g, {central});
    return t;
}

void record_stage(const ResolutionGraph& g, CentralTrace& t, const Cycle& before, const Cycle& after) {
    StageRecord rec;
    rec.s = static_cast<int>(t.stages.size()) + 1;
    rec.cycle = after;
    for (const auto& comp : t.components) {
        Cycle y = zero_cycle(g);
        Integer m = 0;
        for (int v : comp) {
            y[v] = after[v] - before[v];
            if (g.adjacent(v, t.central)) m += y[v];
        }
        rec.contributions.push_back(std::move(y));
        rec.m.push_back(m);
    }
    for (int v = 0; v < g.size(); ++v) {
        if (v != t.central && row_value(g, after, v) > 0)
            throw std::logic_error("stage cycle is not anti-nef away from the central vertex");
    }
    t.stages.push_back(std::move(rec));
}

}  // namespace

CentralTrace central_by_sequences(const ResolutionGraph& g, int central) {
    CentralTrace t = start_trace(g, central);
    std::vector<char> allowed(g.size(), 1);
    allowed[central] = 0;
    Cycle z = zero_cycle(g);
    const int limit = 1 << 20;
    do {
        Cycle start = z;
        start[central] += 1;
        Cycle next = computation_sequence(g, start, allowed).result;
        record_stage(g, t, z, next);
        z = std::move(next);
        if (static_cast<int>(t.stages.size()) > limit) throw std::logic_error("central computation does not stop");
    } while (row_value(g, z, central) > 0);
    t.final = z;
    return t;
}

namespace {

// One stage of the literal construction; returns Z^(s+1).
Cycle next_stage(const ResolutionGraph& g, const CentralTrace& t, const Cycle& z) {
    Cycle next = z;
    next[t.central] += 1;
    for (const auto& comp : t.components) {
        // Gamma_i^(s): zero-row part of Gamma_i that touches E_0 (all of Gamma_i at stage 1)
        std::vector<char> in(g.size(), 0);
        for (int v : comp) {
            if (t.stages.empty() || row_value(g, z, v) == 0) in[v] = 1;
        }
        std::vector<int> keep{t.central};
        std::vector<char> taken(g.size(), 0);
        taken[t.central] = 1;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            for (const auto& nb : g.neighbors(keep[k])) {
                if (in[nb.vertex] && !taken[nb.vertex]) {
                    taken[nb.vertex] = 1;
                    keep.push_back(nb.vertex);
                }
            }
        }
        if (keep.size() == 1) continue;
        std::sort(keep.begin() + 1, keep.end());
        auto sub = induced_subgraph(g, keep);
        Cycle fc = fundamental_cycle_of(sub);
        if (fc[0] != 1) throw std::logic_error("component cycle reaches the central vertex");
        for (std::size_t k = 1; k < keep.size(); ++k) next[keep[k]] += fc[k];
    }
    return next;
}

}  // namespace

CentralTrace central_fundamental_cycle(const ResolutionGraph& g, int central) {
    CentralTrace t = start_trace(g, central);
    if (t.components.size() <= 1) return central_by_sequences(g, central);
    Cycle z = zero_cycle(g);
    const int limit = 1 << 20;
    while (true) {
        Cycle next = next_stage(g, t, z);
        record_stage(g, t, z, next);
        z = std::move(next);
        if (row_value(g, z, central) <= 0) break;
        if (static_cast<int>(t.stages.size()) > limit) throw std::logic_error("central computation does not stop");
    }
    t.final = z;
    return t;
}

CentralTrace forced_central_stages(const ResolutionGraph& g, int central, int stages) {
    auto verts = g.vertices();
    verts.at(central).weight = std::int64_t{1} << 40;
    ResolutionGraph h(std::move(verts), g.edges());
    CentralTrace t;
    t.central = central;
    t.components = components_without(h, {central});
    Cycle z = zero_cycle(h);
    for (int s = 0; s < stages; ++s) {
        Cycle next = next_stage(h, t, z);
        record_stage(h, t, z, next);
        z = std::move(next);
    }
    t.final = z;
    return t;
}

std::vector<Integer> observed_multiplicity_sequence(const CentralTrace& t, int component) {
    if (t.components.empty()) return {};
    if (component < 0 || component >= static_cast<int>(t.components.size()))
        throw GraphError("component index out of range");
    std::vector<Integer> seq;
    for (const auto& st : t.stages) seq.push_back(st.m[component]);
    return seq;
}

int component_of(const CentralTrace& t, int v) {
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (std::binary_search(t.components[i].begin(), t.components[i].end(), v)) return static_cast<int>(i);
    }
    return -1;
}

std::string render_central(const ResolutionGraph& g, const CentralTrace& t) {
    std::ostringstream out;
    out << "central vertex " << t.central << ", " << t.components.size() << " component(s)\n";
    for (const auto& st : t.stages) {
        out << "stage " << st.s << ":";
        for (int v = 0; v < g.size(); ++v) {
            out << ' ';
            if (v == t.central)
                out << '[' << st.cycle[v] << ']';
            else
                out << st.cycle[v];
        }
        out << "   m =";
        for (const auto& m : st.m) out << ' ' << m;
        out << '\n';
    }
    return out.str();
}

}  // namespace ratsing
