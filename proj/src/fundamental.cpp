#include "ratsing/fundamental.hpp"

#include "ratsing/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace ratsing {

namespace {

// Checked arithmetic so the int64 kernel is exact or reports overflow.
inline bool add_to(std::int64_t& a, std::int64_t b) { return !__builtin_add_overflow(a, b, &a); }
inline bool add_to(Integer& a, std::int64_t b) {
    a += b;
    return true;
}
inline bool mul_add(std::int64_t& acc, std::int64_t x, std::int64_t w) {
    std::int64_t p;
    if (__builtin_mul_overflow(x, w, &p)) return false;
    return add_to(acc, p);
}
inline bool mul_add(Integer& acc, const Integer& x, std::int64_t w) {
    acc += x * w;
    return true;
}

enum class Status { Done, Overflow, StepCap };

template <class T>
using StepFn = std::function<bool(int vertex, const T& trigger, const std::vector<T>& z)>;

// Adds, one at a time, the lowest-index allowed vertex with positive row value.
// The step callback may stop the run by returning false.
template <class T>
Status run_sequence(const ResolutionGraph& g, std::vector<T>& z, const std::vector<char>& allowed,
                    std::size_t cap, const StepFn<T>& on_step, bool& stopped) {
    const int r = g.size();
    std::vector<T> row(r, T(0));
    for (int i = 0; i < r; ++i) {
        if (!mul_add(row[i], z[i], -g.weight(i))) return Status::Overflow;
        for (const auto& nb : g.neighbors(i)) {
            if (!mul_add(row[i], z[nb.vertex], nb.weight)) return Status::Overflow;
        }
    }
    auto ok = [&](int i) { return allowed.empty() || allowed[i]; };
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    for (int i = 0; i < r; ++i) {
        if (ok(i) && row[i] > 0) heap.push(i);
    }
    std::size_t steps = 0;
    stopped = false;
    while (!heap.empty()) {
        int j = heap.top();
        heap.pop();
        if (!(row[j] > 0)) continue;
        if (++steps > cap) return Status::StepCap;
        T trigger = row[j];
        if (!add_to(z[j], 1)) return Status::Overflow;
        if (!add_to(row[j], -g.weight(j))) return Status::Overflow;
        for (const auto& nb : g.neighbors(j)) {
            if (!add_to(row[nb.vertex], nb.weight)) return Status::Overflow;
            if (ok(nb.vertex) && row[nb.vertex] > 0) heap.push(nb.vertex);
        }
        if (row[j] > 0) heap.push(j);
        if (on_step && !on_step(j, trigger, z)) {
            stopped = true;
            return Status::Done;
        }
    }
    return Status::Done;
}

Cycle to_cycle(const std::vector<std::int64_t>& v) { return Cycle(v.begin(), v.end()); }

ComputationTrace traced_sequence(const ResolutionGraph& g, const Cycle& start, const std::vector<char>& allowed) {
    if (static_cast<int>(start.size()) != g.size()) throw GraphError("cycle dimension mismatch");
    if (!allowed.empty() && static_cast<int>(allowed.size()) != g.size()) throw GraphError("mask dimension mismatch");
    ComputationTrace t;
    t.start = start;
    std::vector<Integer> z = start;
    StepFn<Integer> rec = [&](int v, const Integer& trig, const std::vector<Integer>& cur) {
        if (trig > 1 && !t.rationality_violation) t.rationality_violation = t.steps.size();
        t.steps.push_back({v, cur, trig});
        return true;
    };
    bool stopped = false;
    run_sequence<Integer>(g, z, allowed, static_cast<std::size_t>(-1), rec, stopped);
    t.result = std::move(z);
    return t;
}

}  // namespace

ComputationTrace computation_sequence(const ResolutionGraph& g, const Cycle& start, const std::vector<char>& allowed) {
    return traced_sequence(g, start, allowed);
}

std::pair<Cycle, ComputationTrace> fundamental_cycle(const ResolutionGraph& g) {
    if (!check_negative_definite(g).is_negative_definite)
        throw NotNegativeDefinite("intersection matrix is not negative definite");
    auto t = traced_sequence(g, reduced_cycle(g), {});
    return {t.result, std::move(t)};
}

std::optional<Cycle> rational_fundamental_cycle(const ResolutionGraph& g) {
    if (!g.all_genus_zero()) return std::nullopt;
    const int r = g.size();
    StepFn<std::int64_t> stop64 = [](int, const std::int64_t& trig, const std::vector<std::int64_t>&) {
        return trig == 1;
    };
    std::vector<std::int64_t> z(r, 1);
    bool stopped = false;
    std::size_t cap = 1'000'000;
    Status st = run_sequence<std::int64_t>(g, z, {}, cap, stop64, stopped);
    if (st == Status::Done) {
        if (stopped) return std::nullopt;
        // Certificate: positive anti-nef cycle with a strictly negative row.
        bool strict = false;
        for (int i = 0; i < r && !strict; ++i) {
            std::int64_t row = -z[i] * g.weight(i);
            for (const auto& nb : g.neighbors(i)) row += nb.weight * z[nb.vertex];
            strict = row < 0;
        }
        if (!strict) return std::nullopt;
        return to_cycle(z);
    }
    auto rep = is_rational(g);
    if (!rep.is_rational) return std::nullopt;
    return fundamental_cycle(g).first;
}

Cycle brute_force_fundamental_cycle(const ResolutionGraph& g, int box) {
    if (box < 1) throw GraphError("box must be positive");
    if (box > 1'000'000) throw GraphError("box too large for the oracle");
    if (!check_negative_definite(g).is_negative_definite)
        throw NotNegativeDefinite("intersection matrix is not negative definite");
    const int r = g.size();
    // BFS order so every vertex is closed soon after it is assigned.
    std::vector<int> order{0}, pos(r, -1);
    pos[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (const auto& nb : g.neighbors(order[k])) {
            if (pos[nb.vertex] < 0) {
                pos[nb.vertex] = static_cast<int>(order.size());
                order.push_back(nb.vertex);
            }
        }
    }
    std::vector<std::int64_t> z(r, 0);
    // Unassigned coefficients are 0 here and will be at least 1, so the row
    // value is bounded below already; for closed vertices this is the exact test.
    auto row_possible = [&](int v) {
        std::int64_t s = -z[v] * g.weight(v);
        for (const auto& nb : g.neighbors(v)) s += nb.weight * std::max<std::int64_t>(z[nb.vertex], 1);
        return s <= 0;
    };
    // The infimum of all anti-nef cycles in the box is itself anti-nef and lies
    // below every other one, so it is the unique anti-nef cycle of least total.
    // Sweeping totals upward therefore returns the infimum of the box.
    std::vector<std::vector<std::int64_t>> found;
    std::function<void(int, std::int64_t)> dfs = [&](int k, std::int64_t remaining) {
        if (k == r) {
            if (remaining == 0) found.push_back(z);
            return;
        }
        const std::int64_t slots = r - k - 1;
        std::int64_t lo = std::max<std::int64_t>(1, remaining - slots * box);
        std::int64_t hi = std::min<std::int64_t>(box, remaining - slots);
        int v = order[k];
        for (std::int64_t c = lo; c <= hi; ++c) {
            z[v] = c;
            bool good = row_possible(v);
            for (const auto& nb : g.neighbors(v)) {
                if (good && pos[nb.vertex] < k) good = row_possible(nb.vertex);
            }
            if (good) dfs(k + 1, remaining - c);
        }
        z[v] = 0;
    };
    for (std::int64_t total = r; total <= static_cast<std::int64_t>(r) * box; ++total) {
        dfs(0, total);
        if (!found.empty()) {
            std::vector<std::int64_t> inf = found.front();
            for (const auto& f : found) {
                for (int i = 0; i < r; ++i) inf[i] = std::min(inf[i], f[i]);
            }
            return to_cycle(inf);
        }
    }
    throw BoxExhausted("no anti-nef cycle with coefficients in [1, " + std::to_string(box) + "]");
}

RationalityReport is_rational(const ResolutionGraph& g) {
    RationalityReport rep;
    if (!g.all_genus_zero()) {
        rep.reason = RationalityReason::GenusWeight;
        return rep;
    }
    if (!check_negative_definite(g).is_negative_definite) {
        rep.reason = RationalityReason::NotNegativeDefinite;
        return rep;
    }
    auto t = traced_sequence(g, reduced_cycle(g), {});
    if (t.rationality_violation) {
        rep.reason = RationalityReason::LauferViolation;
        rep.violation_step = t.rationality_violation;
    } else {
        rep.is_rational = true;
    }
    if (rep.is_rational != (genus(g, t.result) == 0))
        throw std::logic_error("Laufer criterion disagrees with p_a(Z) = 0");
    return rep;
}

std::string describe(const RationalityReport& r) {
    switch (r.reason) {
        case RationalityReason::GenusWeight: return "not rational: genus weight";
        case RationalityReason::NotNegativeDefinite: return "not rational: not negative definite";
        case RationalityReason::LauferViolation:
            return "not rational: Laufer violation at step " + std::to_string(*r.violation_step);
        case RationalityReason::Passes: return "rational";
    }
    return "";
}

Integer degree(const ResolutionGraph& g) {
    if (!is_rational(g).is_rational) throw NotRational("degree is only defined for rational graphs");
    auto z = fundamental_cycle(g).first;
    return -intersect(g, z, z);
}

std::pair<ResolutionGraph, int> blow_up(const ResolutionGraph& g, const BlowUpSite& site) {
    auto verts = g.vertices();
    auto edges = g.edges();
    const int fresh = g.size();
    if (auto* fp = std::get_if<FreePoint>(&site)) {
        if (fp->vertex < 0 || fp->vertex >= g.size()) throw GraphError("blow-up site vertex out of range");
        verts[fp->vertex].weight += 1;
        edges.push_back({fp->vertex, fresh, 1});
    } else {
        const auto& ep = std::get<EdgePoint>(site);
        if (ep.a < 0 || ep.b < 0 || ep.a >= g.size() || ep.b >= g.size()) throw GraphError("blow-up site out of range");
        auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
            return (e.u == ep.a && e.v == ep.b) || (e.u == ep.b && e.v == ep.a);
        });
        if (it == edges.end()) throw GraphError("blow-up site is not an edge");
        if (it->weight != 1) throw GraphError("blow-up at an edge needs edge weight 1");
        edges.erase(it);
        verts[ep.a].weight += 1;
        verts[ep.b].weight += 1;
        edges.push_back({ep.a, fresh, 1});
        edges.push_back({ep.b, fresh, 1});
    }
    verts.push_back({1, 0, ""});
    return {ResolutionGraph(std::move(verts), std::move(edges)), fresh};
}

Cycle pull_back(const ResolutionGraph& old_graph, const ResolutionGraph& new_graph, const BlowUpSite& site,
                const Cycle& a) {
    if (static_cast<int>(a.size()) != old_graph.size()) throw GraphError("cycle dimension mismatch");
    if (!(blow_up(old_graph, site).first == new_graph)) throw GraphError("graphs do not differ by this blow-up");
    Cycle out = a;
    if (auto* fp = std::get_if<FreePoint>(&site)) {
        out.push_back(a[fp->vertex]);
    } else {
        const auto& ep = std::get<EdgePoint>(site);
        out.push_back(a[ep.a] + a[ep.b]);
    }
    return out;
}

ResolutionGraph steepen(const ResolutionGraph& g, const std::map<int, std::int64_t>& deltas) {
    auto verts = g.vertices();
    for (const auto& [i, d] : deltas) {
        if (i < 0 || i >= g.size()) throw GraphError("steepen: vertex index out of range");
        if (d < 1) throw GraphError("steepen: deltas must be positive");
        verts[i].weight += d;
    }
    return ResolutionGraph(std::move(verts), g.edges());
}

int complexity(const ResolutionGraph& g) {
    int c = 0;
    for (int i = 0; i < g.size(); ++i) {
        int v = valency(g, i);
        if (v >= 3) c += v - 2;
    }
    return c;
}

std::string render_trace(const ComputationTrace& t) {
    std::ostringstream out;
    out << "start -> " << format_cycle(t.start) << '\n';
    for (const auto& s : t.steps) out << '+' << s.vertex << " -> " << format_cycle(s.after) << '\n';
    return out.str();
}

}  // namespace ratsing
