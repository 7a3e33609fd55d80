#include "ratsing/witness.hpp"

#include "ratsing/fundamental.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace ratsing {

Piece Piece::from_equivalent(const ConfigName& c) {
    if (c.family == Family::A && c.k == 1) return chain(c.n);
    if (c.family == Family::A11) return bridge(c.n);
    throw std::invalid_argument("not an equivalence entry: " + c.render());
}

std::string Piece::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Config:
            out << name.render();
            break;
        case Kind::Chain:
            out << "chain(" << n << ")";
            break;
        case Kind::Leaf:
            out << "leaf(-" << n << ")";
            break;
        case Kind::Bridge:
            out << "bridge(" << n << ")";
            break;
        case Kind::Tree:
            out << "tree(";
            for (std::size_t i = 0; i < weights.size(); ++i) {
                if (i) out << ' ';
                out << '-' << weights[i];
                if (i) out << '^' << parent[i];
            }
            out << ")";
            break;
    }
    return out.str();
}

std::vector<int> Piece::attach(GraphBuilder& gb, int centre, std::int64_t big,
                                std::vector<std::pair<Role, int>>* outer) const {
    std::vector<int> out;
    switch (kind) {
        case Kind::Config: {
            auto roles = family_roles(name.family);
            Role own = name.role == Role::None ? roles.front() : name.role;
            std::vector<int> targets;
            for (Role r : roles) {
                targets.push_back(r == own ? centre : gb.add(big));
                if (outer && r != own) outer->emplace_back(r, targets.back());
            }
            out = build_configuration(gb, name, targets);
            for (int t : targets) {
                if (t != centre) out.push_back(t);
            }
            break;
        }
        case Kind::Chain:
            out = gb.chain(n);
            gb.join(centre, out.front());
            break;
        case Kind::Leaf:
            out = {gb.add(n)};
            gb.join(centre, out.front());
            break;
        case Kind::Bridge: {
            if (n > 0) out = gb.chain(n);
            out.push_back(gb.add(big));
            gb.join(centre, out.front());
            if (n > 0) gb.join(out[n - 1], out[n]);
            break;
        }
        case Kind::Tree:
            for (std::size_t i = 0; i < weights.size(); ++i) {
                out.push_back(gb.add(weights[i]));
                gb.join(i == 0 ? centre : out[parent[i]], out.back());
            }
            break;
    }
    return out;
}

std::vector<int> intrinsic_sequence(const Piece& p, int stages) {
    GraphBuilder gb;
    int c = gb.add(2, "E0");
    p.attach(gb, c, 1000);
    auto t = forced_central_stages(gb.build(), c, stages);
    std::vector<int> seq;
    for (const auto& st : t.stages) seq.push_back(static_cast<int>(st.m.at(0)));
    return seq;
}

std::vector<Integer> stage_sums(const CentralTrace& t) {
    std::vector<Integer> out;
    for (const auto& st : t.stages) {
        Integer s = 0;
        for (const auto& m : st.m) s += m;
        out.push_back(s);
    }
    return out;
}

ResolutionGraph assemble(const std::vector<Piece>& pieces, std::int64_t centre_weight, std::int64_t big,
                         std::vector<int>* first_vertex, std::vector<std::pair<Role, int>>* outer) {
    GraphBuilder gb;
    int c = gb.add(centre_weight, "E0");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        auto vs = p.attach(gb, c, big, i == 0 ? outer : nullptr);
        if (first_vertex) first_vertex->push_back(vs.empty() ? -1 : vs.front());
    }
    return gb.build();
}

std::map<Role, Integer> other_multiplicity(const ResolutionGraph& g, const std::vector<std::pair<Role, int>>& outer,
                                           const Cycle& z) {
    std::map<Role, Integer> out;
    for (const auto& [role, far] : outer) {
        for (const auto& nb : g.neighbors(far)) out[role] = z[nb.vertex];
    }
    return out;
}

std::map<Role, Integer> intrinsic_other_multiplicity(const ConfigName& c, int s) {
    GraphBuilder gb;
    int centre = gb.add(2, "E0");
    std::vector<std::pair<Role, int>> outer;
    Piece::config(c).attach(gb, centre, 1000, &outer);
    auto g = gb.build();
    auto t = forced_central_stages(g, centre, s);
    return other_multiplicity(g, outer, t.final);
}

namespace {

constexpr int kLibraryStages = 48;

struct LibraryEntry {
    Piece piece;
    std::vector<int> seq;
};

std::string rooted_form(const std::vector<std::int64_t>& w, const std::vector<std::vector<int>>& kids, int v) {
    std::vector<std::string> parts;
    for (int c : kids[v]) parts.push_back(rooted_form(w, kids, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + std::to_string(w[v]);
    for (auto& p : parts) s += p;
    return s + ")";
}

void generic_trees(int max_size, std::vector<Piece>& out) {
    std::set<std::string> seen;
    for (int n = 2; n <= max_size; ++n) {
        std::vector<int> parent(n, -1);
        std::function<void(int)> shapes = [&](int i) {
            if (i == n) {
                std::vector<std::int64_t> w(n, 2);
                std::function<void(int)> weights = [&](int j) {
                    if (j == n) {
                        std::vector<std::vector<int>> kids(n);
                        for (int v = 1; v < n; ++v) kids[parent[v]].push_back(v);
                        if (!seen.insert(rooted_form(w, kids, 0)).second) return;
                        out.push_back(Piece::tree(w, parent));
                        return;
                    }
                    for (std::int64_t b = 2; b <= 4; ++b) {
                        w[j] = b;
                        weights(j + 1);
                    }
                };
                weights(0);
                return;
            }
            for (int p = 0; p < i; ++p) {
                parent[i] = p;
                shapes(i + 1);
            }
        };
        shapes(1);
    }
}

const std::vector<LibraryEntry>& library(bool with_trees) {
    static std::mutex mu;
    static std::vector<LibraryEntry> basic, full;
    static bool ready = false;
    std::lock_guard<std::mutex> lock(mu);
    if (!ready) {
        std::vector<Piece> cands;
        for (int n = 1; n <= kLibraryStages; ++n) cands.push_back(Piece::chain(n));
        for (int b = 3; b <= kLibraryStages + 1; ++b) cands.push_back(Piece::leaf(b));
        for (int n = 1; n <= kLibraryStages; ++n) cands.push_back(Piece::bridge(n));
        for (int q = 3; q <= 8; ++q) {
            for (int a = 1; a <= 8; ++a) {
                cands.push_back(Piece::tree(std::vector<std::int64_t>(a + 1, 2), {}));
                auto& t = cands.back();
                t.weights[0] = q;
                t.parent.assign(a + 1, 0);
                for (int i = 2; i <= a; ++i) t.parent[i] = i - 1;
                for (int b2 = a; b2 <= 8; ++b2) {
                    Piece u = Piece::tree(std::vector<std::int64_t>(a + b2 + 1, 2), {});
                    u.weights[0] = q;
                    u.parent.assign(a + b2 + 1, 0);
                    for (int i = 2; i <= a; ++i) u.parent[i] = i - 1;
                    for (int i = a + 2; i <= a + b2; ++i) u.parent[i] = i - 1;
                    cands.push_back(u);
                }
            }
        }
        std::size_t basic_count = cands.size();
        generic_trees(5, cands);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            try {
                LibraryEntry e{cands[i], intrinsic_sequence(cands[i], kLibraryStages)};
                if (i < basic_count) basic.push_back(e);
                full.push_back(std::move(e));
            } catch (const std::exception&) {
                // not definite or not a valid stage computation
            }
        }
        ready = true;
    }
    return with_trees ? full : basic;
}

}  // namespace

std::optional<SequenceWitness> build_sequence_witness(const Piece& test, const std::vector<int>& target,
                                                      const WitnessOptions& opt) {
    const int len = static_cast<int>(target.size());
    if (len == 0) throw std::invalid_argument("empty target sequence");
    if (len > kLibraryStages) throw std::invalid_argument("target sequence too long");
    // positions 2..len-1 (1-based) where the test piece does not drop by one
    std::vector<int> need;
    for (int s = 2; s <= len - 1; ++s) {
        int d = target[0] - target[s - 1];
        if (d < 0 || d > 1) return std::nullopt;
        if (d == 0) need.push_back(s);
    }

    struct Cand {
        const LibraryEntry* e;
        std::vector<int> drops;
    };
    std::vector<Cand> cands;
    std::set<std::vector<int>> seen;
    for (const auto& e : library(opt.generic_trees)) {
        std::vector<int> drops;
        bool ok = true;
        for (int s = 2; s <= len - 1 && ok; ++s) {
            int d = e.seq[0] - e.seq[s - 1];
            if (d < 0 || d > 1) ok = false;
            else if (d == 1) drops.push_back(s);
        }
        if (!ok || drops.empty()) continue;
        if (!std::includes(need.begin(), need.end(), drops.begin(), drops.end())) continue;
        if (!seen.insert(drops).second) continue;
        cands.push_back({&e, std::move(drops)});
    }

    const bool finite_target = target.back() < target.front() - 1;
    std::vector<std::vector<const LibraryEntry*>> covers;
    std::vector<const LibraryEntry*> chosen;
    std::vector<char> covered(len + 1, 0);
    std::function<void()> search = [&]() {
        if (static_cast<int>(covers.size()) >= opt.max_covers) return;
        int first = -1;
        for (int s : need) {
            if (!covered[s]) {
                first = s;
                break;
            }
        }
        if (first < 0) {
            covers.push_back(chosen);
            return;
        }
        for (const auto& c : cands) {
            if (c.drops.front() != first) continue;
            bool fits = true;
            for (int s : c.drops) fits = fits && !covered[s];
            if (!fits) continue;
            for (int s : c.drops) covered[s] = 1;
            chosen.push_back(c.e);
            search();
            chosen.pop_back();
            for (int s : c.drops) covered[s] = 0;
        }
    };
    search();
    std::stable_sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& cover : covers) {
        std::vector<Piece> pieces{test};
        int s1 = target[0];
        for (const auto* e : cover) {
            pieces.push_back(e->piece);
            s1 += e->seq[0];
        }
        if (!finite_target && len > 1) {
            // two A^1_{len-1} chains drop together at stage len and stop the computation there
            pieces.push_back(Piece::chain(len - 1));
            pieces.push_back(Piece::chain(len - 1));
            s1 += 2;
        }
        while (s1 - 1 < 3) {
            pieces.push_back(Piece::chain(len + 2));
            s1 += 1;
        }
        SequenceWitness w;
        w.pieces = pieces;
        w.graph = assemble(pieces, s1 - 1, opt.big, &w.first_vertex, &w.outer);
        try {
            if (!is_rational(w.graph).is_rational) continue;
            w.trace = central_fundamental_cycle(w.graph, 0);
        } catch (const std::exception&) {
            continue;
        }
        int comp = component_of(w.trace, w.first_vertex[0]);
        for (const auto& m : observed_multiplicity_sequence(w.trace, comp)) w.observed.push_back(static_cast<int>(m));
        if (static_cast<int>(w.observed.size()) != len) continue;
        if (!std::equal(target.begin(), target.end(), w.observed.begin())) continue;
        return w;
    }
    return std::nullopt;
}

SequenceWitness rebuild_with(const SequenceWitness& w, const std::vector<Piece>& replacement, std::int64_t big) {
    SequenceWitness out;
    out.pieces = replacement;
    out.pieces.insert(out.pieces.end(), w.pieces.begin() + 1, w.pieces.end());
    out.graph = assemble(out.pieces, w.graph.weight(w.central), big, &out.first_vertex, &out.outer);
    out.trace = central_fundamental_cycle(out.graph, 0);
    return out;
}

}  // namespace ratsing
