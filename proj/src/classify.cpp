#include "ratsing/classify.hpp"

#include "ratsing/builders.hpp"
#include "ratsing/canon.hpp"
#include "ratsing/central.hpp"
#include "ratsing/fundamental.hpp"
#include "ratsing/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ratsing {

void EnumerationCaps::validate() const {
    if (max_chain < 1 || max_components_per_vertex < 1 || max_weight < 1 || max_vertices < 1)
        throw std::invalid_argument("enumeration caps must be at least 1");
}

std::string EnumerationCaps::describe() const {
    std::ostringstream out;
    out << "caps: chain<=" << max_chain << " components<=" << max_components_per_vertex << " b<=" << max_weight
        << " vertices<=" << max_vertices;
    return out.str();
}

ResolutionGraph Realisation::build() const {
    GraphBuilder gb;
    for (auto b : weights) gb.add(b);
    for (auto [a, b] : edges) gb.join(a, b);
    for (const auto& p : placements) build_configuration(gb, p.name, p.targets);
    return gb.build();
}

int Realisation::vertex_count() const {
    int n = static_cast<int>(weights.size());
    for (const auto& p : placements) n += p.name.n;
    return n;
}

std::string Realisation::describe() const {
    std::ostringstream out;
    out << "core";
    for (std::size_t i = 0; i < weights.size(); ++i) out << ' ' << i << ":-" << weights[i];
    for (auto [a, b] : edges) out << " " << a << "-" << b;
    for (const auto& p : placements) {
        out << "; " << p.name.render() << " @";
        for (int t : p.targets) out << ' ' << t;
    }
    return out.str();
}

std::vector<ResolutionGraph> unlabeled_trees(int n) {
    if (n < 1) return {};
    std::map<std::string, ResolutionGraph> level;
    level.emplace(canonical_form(chain_graph({2})), chain_graph({2}));
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, ResolutionGraph> next;
        for (const auto& [form, g] : level) {
            for (int v = 0; v < g.size(); ++v) {
                auto vs = g.vertices();
                auto es = g.edges();
                vs.push_back({2, 0, {}});
                es.push_back({v, size - 1, 1});
                ResolutionGraph h(std::move(vs), std::move(es));
                next.emplace(canonical_form(h), canonical_relabel(h));
            }
        }
        level = std::move(next);
    }
    std::vector<ResolutionGraph> out;
    for (auto& [form, g] : level) out.push_back(std::move(g));
    return out;
}

namespace {

std::vector<int> degrees(const ResolutionGraph& g) {
    std::vector<int> d(g.size());
    for (int v = 0; v < g.size(); ++v) d[v] = static_cast<int>(g.neighbors(v).size());
    return d;
}

// Distribute `total` = sum (b_i - 2) over the vertices in `free`, b_i >= lower[i].
void distribute(const std::vector<int>& free, std::size_t k, std::int64_t total, std::vector<std::int64_t>& w,
                const std::vector<std::int64_t>& lower, const std::function<void()>& done) {
    if (k == free.size()) {
        if (total == 0) done();
        return;
    }
    int v = free[k];
    for (std::int64_t b = lower[v]; b - 2 <= total; ++b) {
        w[v] = b;
        distribute(free, k + 1, total - (b - 2), w, lower, done);
    }
}

ResolutionGraph reweight(const ResolutionGraph& shape, const std::vector<std::int64_t>& w) {
    auto vs = shape.vertices();
    for (int i = 0; i < shape.size(); ++i) vs[i].weight = w[i];
    return ResolutionGraph(std::move(vs), shape.edges());
}

}  // namespace

std::vector<ResolutionGraph> enumerate_hypertrees(int m, bool strict) {
    if (m < 3) throw std::invalid_argument("degree must be at least 3");
    const int max_core = m - 2;
    std::map<std::string, ResolutionGraph> out;
    for (int n = 1; n <= max_core + (max_core - 1) / 2; ++n) {
        for (const auto& shape : unlabeled_trees(n)) {
            auto deg = degrees(shape);
            std::vector<int> threes;
            for (int v = 0; v < n; ++v) {
                if (deg[v] == 3) threes.push_back(v);
            }
            for (unsigned mask = 0; mask < (1u << threes.size()); ++mask) {
                std::vector<char> tj(n, 0);
                for (std::size_t i = 0; i < threes.size(); ++i) {
                    if (mask >> i & 1) tj[threes[i]] = 1;
                }
                bool ok = true;
                for (const auto& e : shape.edges()) ok = ok && !(tj[e.u] && tj[e.v]);
                if (!ok) continue;
                std::vector<int> core;
                std::vector<std::int64_t> lower(n, 3), w(n, 2);
                for (int v = 0; v < n; ++v) {
                    if (tj[v]) continue;
                    core.push_back(v);
                    std::int64_t t = 0;
                    for (const auto& nb : shape.neighbors(v)) t += tj[nb.vertex];
                    lower[v] = std::max<std::int64_t>(3, strict ? deg[v] + t : deg[v]);
                }
                if (static_cast<int>(core.size()) > max_core) continue;
                distribute(core, 0, m - 2, w, lower, [&] {
                    auto g = reweight(shape, w);
                    out.emplace(canonical_form(g), canonical_relabel(g));
                });
            }
        }
    }
    std::vector<ResolutionGraph> list;
    for (auto& [f, g] : out) list.push_back(std::move(g));
    return list;
}

std::vector<ResolutionGraph> enumerate_minimal_representatives(int m) {
    std::vector<ResolutionGraph> out;
    for (auto& g : enumerate_hypertrees(m, true)) {
        if (!valency_criterion(g)) continue;
        if (!is_rational(g).is_rational) continue;
        if (!almost_reduced_check(g)) continue;
        if (degree(g) != m) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<ConfigName> single_attachment_catalogue(int max_chain) {
    std::vector<ConfigName> out;
    for (int n = 1; n <= max_chain; ++n) {
        for (int k = 1; 2 * k - 1 <= n; ++k) out.push_back(config(Family::A, n, k));
    }
    for (int n = 4; n <= max_chain; ++n) out.push_back(config(Family::ID, n, 2));
    for (int k = 2; 2 * k <= max_chain; ++k) {
        if (k >= 3) out.push_back(config(Family::IID, 2 * k, k));
        if (2 * k + 1 <= max_chain) out.push_back(config(Family::IID, 2 * k + 1, k));
    }
    if (max_chain >= 6) out.push_back(config(Family::E6, 6, 2));
    if (max_chain >= 7) out.push_back(config(Family::E7, 7, 3));
    return out;
}

std::vector<ConfigName> double_attachment_catalogue(int max_chain) {
    std::vector<ConfigName> out;
    for (int n = 1; n <= max_chain; ++n) {
        out.push_back(config(Family::A11, n, 1));
        for (int k = 2; k <= n + 2; ++k) {
            for (Family f : {Family::IA, Family::IIA}) {
                auto c = config(f, n, k);
                if (c.valid()) out.push_back(c);
            }
        }
    }
    for (int k = 2; 2 * k <= max_chain; ++k) {
        out.push_back(config(Family::DEven, 2 * k, k));
        if (2 * k + 1 <= max_chain) out.push_back(config(Family::DOdd, 2 * k + 1, k));
    }
    return out;
}

int attachment_multiplicity(const ConfigName& c, Role role) {
    return predicted_multiplicity_sequence(c, role).prefix(1).at(0);
}

namespace {

struct Collector {
    std::map<std::string, ResolutionGraph> found;
    EnumerationStats stats;
};

// Core of a hypertree: non-(-2) vertices renumbered, direct edges, T-joints.
struct Hyper {
    std::vector<std::int64_t> weights;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> tjoints;
};

Hyper split_hypertree(const ResolutionGraph& g) {
    Hyper h;
    std::vector<int> idx(g.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (g.weight(v) == 2) continue;
        idx[v] = static_cast<int>(h.weights.size());
        h.weights.push_back(g.weight(v));
    }
    for (const auto& e : g.edges()) {
        if (idx[e.u] >= 0 && idx[e.v] >= 0) h.edges.emplace_back(idx[e.u], idx[e.v]);
    }
    for (int v = 0; v < g.size(); ++v) {
        if (g.weight(v) != 2) continue;
        const auto& nb = g.neighbors(v);
        h.tjoints.push_back({idx[nb[0].vertex], idx[nb[1].vertex], idx[nb[2].vertex]});
    }
    return h;
}

void emit_sorted(const Collector& c, const GraphSink& sink) {
    for (const auto& [f, g] : c.found) sink(g);
}

}  // namespace

EnumerationStats enumerate_almost_reduced(int m, const EnumerationCaps& caps, const GraphSink& sink) {
    caps.validate();
    if (m < 3) throw std::invalid_argument("degree must be at least 3");
    const auto singles = single_attachment_catalogue(caps.max_chain);
    const auto doubles = double_attachment_catalogue(caps.max_chain);
    Collector col;

    for (const auto& base : enumerate_hypertrees(m, false)) {
        Hyper h = split_hypertree(base);
        const int p = static_cast<int>(h.weights.size());
        if (p > caps.max_vertices) continue;
        if (std::any_of(h.weights.begin(), h.weights.end(), [&](auto b) { return b > caps.max_weight; })) continue;
        Realisation r;
        r.weights = h.weights;
        std::vector<std::int64_t> load(p, 0);
        int size = p;

        auto finish = [&]() {
            ++col.stats.candidates;
            auto g = r.build();
            if (!is_rational(g).is_rational || !almost_reduced_check(g) || degree(g) != m) {
                ++col.stats.rejected;
                return;
            }
            col.found.emplace(canonical_form(g), canonical_relabel(g));
        };

        // vertex attachments: nondecreasing index into `singles`, per vertex
        std::function<void(int, std::size_t, int)> vertices = [&](int v, std::size_t from, int count) {
            if (v == p) {
                finish();
                return;
            }
            vertices(v + 1, 0, 0);
            if (count == caps.max_components_per_vertex) return;
            for (std::size_t i = from; i < singles.size(); ++i) {
                const auto& c = singles[i];
                int mult = attachment_multiplicity(c, Role::None);
                if (load[v] + mult > h.weights[v] || size + c.n > caps.max_vertices) continue;
                load[v] += mult;
                size += c.n;
                r.placements.push_back({c, {v}});
                vertices(v, i, count + 1);
                r.placements.pop_back();
                size -= c.n;
                load[v] -= mult;
            }
        };

        std::function<void(std::size_t)> tjoints = [&](std::size_t t) {
            if (t == h.tjoints.size()) {
                vertices(0, 0, 0);
                return;
            }
            auto tri = h.tjoints[t];
            std::sort(tri.begin(), tri.end());
            do {
                for (int n = 1; n <= caps.max_chain; ++n) {
                    for (int k = 2; k <= n + 3; ++k) {
                        auto c = config(Family::A2k2, n, k);
                        if (!c.valid() || size + n > caps.max_vertices) continue;
                        int ml = attachment_multiplicity(c, Role::L), mm = attachment_multiplicity(c, Role::M),
                            mr = attachment_multiplicity(c, Role::R);
                        if (load[tri[0]] + ml > h.weights[tri[0]] || load[tri[1]] + mm > h.weights[tri[1]] ||
                            load[tri[2]] + mr > h.weights[tri[2]])
                            continue;
                        load[tri[0]] += ml;
                        load[tri[1]] += mm;
                        load[tri[2]] += mr;
                        size += n;
                        r.placements.push_back({c, {tri[0], tri[1], tri[2]}});
                        tjoints(t + 1);
                        r.placements.pop_back();
                        size -= n;
                        load[tri[0]] -= ml;
                        load[tri[1]] -= mm;
                        load[tri[2]] -= mr;
                    }
                }
            } while (std::next_permutation(tri.begin(), tri.end()));
        };

        std::function<void(std::size_t)> edges = [&](std::size_t e) {
            if (e == h.edges.size()) {
                tjoints(0);
                return;
            }
            auto [a, b] = h.edges[e];
            // direct edge
            if (load[a] + 1 <= h.weights[a] && load[b] + 1 <= h.weights[b]) {
                ++load[a];
                ++load[b];
                r.edges.emplace_back(a, b);
                edges(e + 1);
                r.edges.pop_back();
                --load[a];
                --load[b];
            }
            for (const auto& c : doubles) {
                if (size + c.n > caps.max_vertices) continue;
                auto roles = family_roles(c.family);
                for (int flip = 0; flip < 2; ++flip) {
                    int x = flip ? b : a, y = flip ? a : b;
                    int mx = attachment_multiplicity(c, roles[0]), my = attachment_multiplicity(c, roles[1]);
                    if (load[x] + mx > h.weights[x] || load[y] + my > h.weights[y]) continue;
                    load[x] += mx;
                    load[y] += my;
                    size += c.n;
                    r.placements.push_back({c, {x, y}});
                    edges(e + 1);
                    r.placements.pop_back();
                    size -= c.n;
                    load[x] -= mx;
                    load[y] -= my;
                }
            }
        };
        edges(0);
    }
    col.stats.emitted = col.found.size();
    emit_sorted(col, sink);
    return col.stats;
}

namespace {

// Core vertex multiplicities of a built realisation (cores are vertices 0..p-1).
std::optional<std::vector<Integer>> core_multiplicities(const ResolutionGraph& g, int p) {
    if (!is_rational(g).is_rational) return std::nullopt;
    auto z = fundamental_cycle_of(g);
    return std::vector<Integer>(z.begin(), z.begin() + p);
}

struct EquivalenceMove {
    ConfigName name;  // with the role sitting at the non-reduced vertex
    Role role;
    std::vector<int> chains;  // A^1 lengths, sorted
    int bridge = -1;          // bridge length, -1 if none
};

std::vector<EquivalenceMove> equivalence_moves(int max_chain) {
    std::vector<EquivalenceMove> out;
    auto add = [&](ConfigName c, Role role) {
        c.role = role;
        auto eq = equivalent_configuration(c);
        if (!eq) return;
        EquivalenceMove mv{c, role, {}, -1};
        for (const auto& e : *eq) {
            if (e.family == Family::A11)
                mv.bridge = e.n;
            else
                mv.chains.push_back(e.n);
        }
        std::sort(mv.chains.begin(), mv.chains.end());
        out.push_back(mv);
    };
    for (const auto& c : single_attachment_catalogue(max_chain)) add(c, Role::None);
    for (const auto& c : double_attachment_catalogue(max_chain)) {
        for (Role r : family_roles(c.family)) add(c, r);
    }
    return out;
}

}  // namespace

EnumerationStats enumerate_single_nonreduced(int m, const EnumerationCaps& caps, const GraphSink& sink) {
    caps.validate();
    if (m < 3) throw std::invalid_argument("degree must be at least 3");
    Collector col;
    std::vector<std::pair<Realisation, std::vector<Integer>>> accepted;

    auto singles = std::vector<ConfigName>{};
    for (int n = 1; n <= caps.max_chain; ++n) singles.push_back(config(Family::A, n, 1));
    for (int l = 2; 2 * l <= caps.max_chain; ++l) singles.push_back(config(Family::A, 2 * l, 2));

    // shapes: hypertree shapes of any canonical degree, reweighted below
    std::set<std::string> shapes_seen;
    std::vector<Hyper> shapes;
    for (int d = 3; d <= m; ++d) {
        for (const auto& g : enumerate_hypertrees(d, false)) {
            auto vs = g.vertices();
            for (auto& v : vs) v.weight = v.weight == 2 ? 2 : 3;
            ResolutionGraph flat(std::move(vs), g.edges());
            if (shapes_seen.insert(canonical_form(flat)).second) shapes.push_back(split_hypertree(flat));
        }
    }

    for (const auto& shape : shapes) {
        const int p = static_cast<int>(shape.weights.size());
        if (p > caps.max_vertices) continue;
        std::vector<std::int64_t> b(p, 3);
        std::vector<Integer> z(p, 1);
        // assign (b, z) with sum z (b - 2) = m - 2
        std::function<void(int, std::int64_t)> assign = [&](int v, std::int64_t left) {
            if (v == p) {
                if (left != 0) return;
                bool nonreduced = false;
                for (int i = 0; i < p; ++i) nonreduced = nonreduced || z[i] > 1;
                if (!nonreduced) return;
                for (auto [x, y] : shape.edges) {
                    if (z[x] > 1 && z[y] > 1) return;
                }
                for (const auto& t : shape.tjoints) {
                    int big = (z[t[0]] > 1) + (z[t[1]] > 1) + (z[t[2]] > 1);
                    if (big > 1) return;
                }
                Realisation r;
                r.weights = b;
                int size = p;
                std::function<void(int, std::size_t, int)> vertices = [&](int v2, std::size_t from, int count) {
                    if (v2 == p) {
                        ++col.stats.candidates;
                        auto g = r.build();
                        auto zs = core_multiplicities(g, p);
                        if (!zs || *zs != z || degree(g) != m) {
                            ++col.stats.rejected;
                            return;
                        }
                        if (col.found.emplace(canonical_form(g), canonical_relabel(g)).second)
                            accepted.emplace_back(r, z);
                        return;
                    }
                    vertices(v2 + 1, 0, 0);
                    if (count == caps.max_components_per_vertex) return;
                    for (std::size_t i = from; i < singles.size(); ++i) {
                        if (size + singles[i].n > caps.max_vertices) continue;
                        size += singles[i].n;
                        r.placements.push_back({singles[i], {v2}});
                        vertices(v2, i, count + 1);
                        r.placements.pop_back();
                        size -= singles[i].n;
                    }
                };
                std::function<void(std::size_t)> tjoints = [&](std::size_t t) {
                    if (t == shape.tjoints.size()) {
                        vertices(0, 0, 0);
                        return;
                    }
                    auto tri = shape.tjoints[t];
                    // L at the non-reduced vertex if there is one
                    std::stable_sort(tri.begin(), tri.end(), [&](int x, int y) { return z[x] > z[y]; });
                    for (int rot = 0; rot < 3; ++rot) {
                        if (rot > 0 && z[tri[0]] > 1) break;
                        std::array<int, 3> order{tri[rot], tri[(rot + 1) % 3], tri[(rot + 2) % 3]};
                        for (int n = 1; n <= caps.max_chain; ++n) {
                            if (size + n > caps.max_vertices) break;
                            auto c = config(Family::A2k2, n, 2, Role::L);
                            size += n;
                            r.placements.push_back({c, {order[0], order[1], order[2]}});
                            tjoints(t + 1);
                            r.placements.pop_back();
                            size -= n;
                        }
                    }
                };
                std::function<void(std::size_t)> edges = [&](std::size_t e) {
                    if (e == shape.edges.size()) {
                        tjoints(0);
                        return;
                    }
                    auto [x, y] = shape.edges[e];
                    for (int n = 0; n <= caps.max_chain; ++n) {
                        if (size + n > caps.max_vertices) break;
                        size += n;
                        r.placements.push_back({config(Family::A11, n, 1), {x, y}});
                        edges(e + 1);
                        r.placements.pop_back();
                        size -= n;
                    }
                };
                edges(0);
                return;
            }
            for (std::int64_t bv = 3; bv <= caps.max_weight && bv - 2 <= left; ++bv) {
                for (std::int64_t zv = 1; zv * (bv - 2) <= left; ++zv) {
                    b[v] = bv;
                    z[v] = zv;
                    assign(v + 1, left - zv * (bv - 2));
                }
            }
        };
        assign(0, m - 2);
    }

    // expansion by table equivalences
    const auto moves = equivalence_moves(caps.max_chain);
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        const auto [r, z] = accepted[i];
        const int p = static_cast<int>(r.weights.size());
        for (int v = 0; v < p; ++v) {
            if (z[v] == 1) continue;
            for (const auto& mv : moves) {
                std::vector<std::size_t> used;
                std::vector<char> taken(r.placements.size(), 0);
                bool ok = true;
                for (int len : mv.chains) {
                    bool hit = false;
                    for (std::size_t j = 0; j < r.placements.size() && !hit; ++j) {
                        const auto& pl = r.placements[j];
                        if (!taken[j] && pl.targets == std::vector<int>{v} && pl.name.family == Family::A &&
                            pl.name.k == 1 && pl.name.n == len) {
                            taken[j] = 1;
                            used.push_back(j);
                            hit = true;
                        }
                    }
                    ok = ok && hit;
                }
                if (!ok) continue;
                int other = -1;
                if (mv.bridge >= 0) {
                    for (std::size_t j = 0; j < r.placements.size() && other < 0; ++j) {
                        const auto& pl = r.placements[j];
                        if (taken[j] || pl.name.family != Family::A11 || pl.name.n != mv.bridge) continue;
                        if (pl.targets[0] == v) other = pl.targets[1];
                        else if (pl.targets[1] == v) other = pl.targets[0];
                        if (other >= 0) {
                            taken[j] = 1;
                            used.push_back(j);
                        }
                    }
                    if (other < 0) continue;
                }
                Realisation next;
                next.weights = r.weights;
                next.edges = r.edges;
                for (std::size_t j = 0; j < r.placements.size(); ++j) {
                    if (!taken[j]) next.placements.push_back(r.placements[j]);
                }
                std::vector<int> targets;
                for (Role role : family_roles(mv.name.family)) targets.push_back(role == mv.role || role == Role::None ? v : other);
                next.placements.push_back({mv.name, targets});
                if (next.vertex_count() > caps.max_vertices) continue;
                ++col.stats.candidates;
                auto g = next.build();
                auto zs = core_multiplicities(g, p);
                if (!zs || *zs != z || degree(g) != m) {
                    ++col.stats.rejected;
                    continue;
                }
                if (col.found.emplace(canonical_form(g), canonical_relabel(g)).second) accepted.emplace_back(next, z);
            }
        }
    }
    col.stats.emitted = col.found.size();
    emit_sorted(col, sink);
    return col.stats;
}

ResolutionGraph single_vertex_graph(std::int64_t b, const std::vector<ConfigName>& configs) {
    GraphBuilder gb;
    int c = gb.add(b, "E0");
    for (const auto& cfg : configs) build_configuration(gb, cfg, {c});
    return gb.build();
}

SingleVertexSearch single_vertex_search(int max_a1, int max_l, int max_components, int bmin, int bmax) {
    std::vector<ConfigName> pool;
    for (int n = 1; n <= max_a1; ++n) pool.push_back(config(Family::A, n, 1));
    for (int l = 2; l <= max_l; ++l) pool.push_back(config(Family::A, 2 * l, 2));
    std::vector<int> weight;
    for (const auto& c : pool) weight.push_back(attachment_multiplicity(c, Role::None));
    SingleVertexSearch out;
    std::vector<ConfigName> chosen;
    // Once every component sits at its own cycle with E_0 at 1, E_0 is hit by
    // the sum of the neighbour multiplicities minus b; above 1 is a Laufer violation.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t load) {
        if (!chosen.empty()) {
            for (std::int64_t b = bmin; b <= bmax; ++b) {
                ++out.graphs;
                if (load > b + 1) continue;
                auto z = rational_fundamental_cycle(single_vertex_graph(b, chosen));
                if (!z) continue;
                ++out.rational;
                const Integer& z0 = (*z)[0];
                out.results[{b, chosen}] = z0;
                if (z0 > out.max_multiplicity) {
                    out.max_multiplicity = z0;
                    out.maximisers.clear();
                }
                if (z0 == out.max_multiplicity) out.maximisers.emplace_back(b, chosen);
            }
        }
        if (static_cast<int>(chosen.size()) == max_components) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            rec(i, load + weight[i]);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace ratsing
