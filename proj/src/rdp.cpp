#include "ratsing/rdp.hpp"

#include "ratsing/central.hpp"
#include "ratsing/fundamental.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace ratsing {

namespace {

bool is_minus_two(const ResolutionGraph& g, int v) { return g.weight(v) == 2 && g.vertex(v).genus == 0; }

// Arms of a branched tree seen from its branch vertex, each listed outward.
std::vector<std::vector<int>> arms_from(const ResolutionGraph& g, const std::set<int>& in, int centre) {
    std::vector<std::vector<int>> arms;
    for (const auto& nb : g.neighbors(centre)) {
        if (!in.count(nb.vertex)) continue;
        std::vector<int> arm{nb.vertex};
        int prev = centre;
        int cur = nb.vertex;
        while (true) {
            int next = -1;
            for (const auto& x : g.neighbors(cur)) {
                if (in.count(x.vertex) && x.vertex != prev) next = x.vertex;
            }
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(std::move(arm));
    }
    std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return arms;
}

struct Shape {
    std::vector<int> chain;                // A_n in order
    int centre = -1;                       // D/E branch vertex
    std::vector<std::vector<int>> arms;    // sorted by length
};

Shape shape_of(const ResolutionGraph& g, const RdpComponent& c) {
    std::set<int> in(c.vertices.begin(), c.vertices.end());
    Shape sh;
    auto inner_degree = [&](int v) {
        int d = 0;
        for (const auto& nb : g.neighbors(v)) d += in.count(nb.vertex) ? 1 : 0;
        return d;
    };
    if (c.type == DynkinType::A) {
        int start = c.vertices.front();
        for (int v : c.vertices) {
            if (inner_degree(v) <= 1) {
                start = v;
                break;
            }
        }
        sh.chain.push_back(start);
        int prev = -1;
        int cur = start;
        while (true) {
            int next = -1;
            for (const auto& nb : g.neighbors(cur)) {
                if (in.count(nb.vertex) && nb.vertex != prev) next = nb.vertex;
            }
            if (next < 0) break;
            sh.chain.push_back(next);
            prev = cur;
            cur = next;
        }
        return sh;
    }
    for (int v : c.vertices) {
        if (inner_degree(v) == 3) sh.centre = v;
    }
    sh.arms = arms_from(g, in, sh.centre);
    return sh;
}

}  // namespace

std::string dynkin_name(const RdpComponent& c) {
    switch (c.type) {
        case DynkinType::A: return "A" + std::to_string(c.rank);
        case DynkinType::D: return "D" + std::to_string(c.rank);
        case DynkinType::E6: return "E6";
        case DynkinType::E7: return "E7";
        case DynkinType::E8: return "E8";
    }
    return "?";
}

std::vector<RdpComponent> find_rdp_components(const ResolutionGraph& g) {
    std::vector<RdpComponent> out;
    std::vector<char> seen(g.size(), 0);
    for (int s = 0; s < g.size(); ++s) {
        if (seen[s] || !is_minus_two(g, s)) continue;
        RdpComponent c;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.vertices.push_back(v);
            for (const auto& nb : g.neighbors(v)) {
                if (!seen[nb.vertex] && is_minus_two(g, nb.vertex)) {
                    seen[nb.vertex] = 1;
                    stack.push_back(nb.vertex);
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        std::set<int> in(c.vertices.begin(), c.vertices.end());
        int inner_edges = 0;
        std::vector<int> branch;
        for (int v : c.vertices) {
            int d = 0;
            for (const auto& nb : g.neighbors(v)) {
                if (in.count(nb.vertex)) {
                    ++d;
                    if (nb.weight != 1) throw std::logic_error("(-2)-configuration with a multiple edge");
                } else {
                    c.attachments.emplace_back(nb.vertex, v);
                }
            }
            inner_edges += d;
            if (d > 3) throw std::logic_error("(-2)-configuration is not of ADE type");
            if (d == 3) branch.push_back(v);
        }
        if (inner_edges / 2 != static_cast<int>(c.vertices.size()) - 1 || branch.size() > 1)
            throw std::logic_error("(-2)-configuration is not of ADE type");
        c.rank = static_cast<int>(c.vertices.size());
        if (branch.empty()) {
            c.type = DynkinType::A;
        } else {
            auto arms = arms_from(g, in, branch[0]);
            auto a = arms[0].size(), b = arms[1].size(), d = arms[2].size();
            if (a == 1 && b == 1)
                c.type = DynkinType::D;
            else if (a == 1 && b == 2 && d == 2)
                c.type = DynkinType::E6;
            else if (a == 1 && b == 2 && d == 3)
                c.type = DynkinType::E7;
            else if (a == 1 && b == 2 && d == 4)
                c.type = DynkinType::E8;
            else
                throw std::logic_error("(-2)-configuration is not of ADE type");
        }
        std::sort(c.attachments.begin(), c.attachments.end());
        out.push_back(std::move(c));
    }
    return out;
}

char role_letter(Role r) {
    switch (r) {
        case Role::L: return 'L';
        case Role::M: return 'M';
        case Role::R: return 'R';
        case Role::None: break;
    }
    return '\0';
}

ConfigName config(Family f, int n, int k, Role role) {
    ConfigName c;
    c.family = f;
    c.n = n;
    c.k = k;
    if (f == Family::ID) c.k = 2;
    if (f == Family::E6) c.n = 6, c.k = 2;
    if (f == Family::E7) c.n = 7, c.k = 3;
    if (f == Family::A11) c.k = 1;
    if (f == Family::IID || f == Family::DEven) c.k = k > 0 ? k : n / 2;
    if (f == Family::DOdd) c.k = k > 0 ? k : (n - 1) / 2;
    c.role = role;
    return c;
}

std::string ConfigName::render() const {
    std::ostringstream out;
    if (role != Role::None) out << role_letter(role);
    switch (family) {
        case Family::A: out << "A[" << n << "]^{" << k << "}"; break;
        case Family::ID: out << "ID[" << n << "]^{2}"; break;
        case Family::IID: out << "IID[" << n << "]^{" << k << "}"; break;
        case Family::E6: out << "E[6]^{2}"; break;
        case Family::E7: out << "E[7]^{3}"; break;
        case Family::A11: out << "A[" << n << "]^{1,1}"; break;
        case Family::IA: out << "IA[" << n << "]^{2," << k << "}"; break;
        case Family::IIA: out << "IIA[" << n << "]^{" << k << ",2}"; break;
        case Family::DOdd: out << "D[" << n << "]^{" << k + 1 << ",2}"; break;
        case Family::DEven: out << "D[" << n << "]^{" << k << ",2}"; break;
        case Family::A2k2: out << "A[" << n << "]^{2," << k << ",2}"; break;
    }
    return out.str();
}

std::vector<Role> family_roles(Family f) {
    switch (f) {
        case Family::A11:
        case Family::DOdd:
        case Family::DEven: return {Role::L, Role::R};
        case Family::IA: return {Role::L, Role::M};
        case Family::IIA: return {Role::M, Role::R};
        case Family::A2k2: return {Role::L, Role::M, Role::R};
        default: return {Role::None};
    }
}

bool ConfigName::valid() const {
    if (role != Role::None) {
        auto roles = family_roles(family);
        if (std::find(roles.begin(), roles.end(), role) == roles.end()) return false;
    }
    switch (family) {
        case Family::A: return k >= 1 && n >= 2 * k - 1;
        case Family::ID: return k == 2 && n >= 4;
        case Family::IID: return (n == 2 * k && k >= 3) || (n == 2 * k + 1 && k >= 2);
        case Family::E6: return n == 6 && k == 2;
        case Family::E7: return n == 7 && k == 3;
        case Family::A11: return n >= 0 && k == 1;
        case Family::IA: return k >= 2 && n >= 2 * k - 1;
        case Family::IIA: return k >= 2 && n >= 2 * k - 2;
        case Family::DOdd: return k >= 2 && n == 2 * k + 1;
        case Family::DEven: return k >= 2 && n == 2 * k;
        case Family::A2k2: return k >= 2 && n >= std::max(1, 2 * k - 3);
    }
    return false;
}

ConfigName parse_config_name(const std::string& text) {
    static const std::regex re(R"(^([LMR]?)(I{0,2})([ADE])\[(\d+)\]\^\{(\d+(?:,\d+)*)\}$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse configuration name '" + text + "'");
    Role role = Role::None;
    if (m[1] == "L") role = Role::L;
    if (m[1] == "M") role = Role::M;
    if (m[1] == "R") role = Role::R;
    std::string prefix = m[2];
    char letter = m.str(3)[0];
    int n = std::stoi(m[4]);
    std::vector<int> sup;
    std::stringstream ss(m[5]);
    for (std::string part; std::getline(ss, part, ',');) sup.push_back(std::stoi(part));
    ConfigName c;
    bool ok = false;
    if (letter == 'A' && prefix.empty() && sup.size() == 1) c = config(Family::A, n, sup[0], role), ok = true;
    if (letter == 'A' && prefix.empty() && sup.size() == 2 && sup[0] == 1 && sup[1] == 1)
        c = config(Family::A11, n, 1, role), ok = true;
    if (letter == 'A' && prefix.empty() && sup.size() == 3 && sup[0] == 2 && sup[2] == 2)
        c = config(Family::A2k2, n, sup[1], role), ok = true;
    if (letter == 'A' && prefix == "I" && sup.size() == 2 && sup[0] == 2) c = config(Family::IA, n, sup[1], role), ok = true;
    if (letter == 'A' && prefix == "II" && sup.size() == 2 && sup[1] == 2)
        c = config(Family::IIA, n, sup[0], role), ok = true;
    if (letter == 'D' && prefix == "I" && sup.size() == 1 && sup[0] == 2) c = config(Family::ID, n, 2, role), ok = true;
    if (letter == 'D' && prefix == "II" && sup.size() == 1) c = config(Family::IID, n, sup[0], role), ok = true;
    if (letter == 'D' && prefix.empty() && sup.size() == 2 && sup[1] == 2) {
        if (n % 2 == 1)
            c = config(Family::DOdd, n, sup[0] - 1, role);
        else
            c = config(Family::DEven, n, sup[0], role);
        ok = true;
    }
    if (letter == 'E' && prefix.empty() && n == 6 && sup == std::vector<int>{2}) c = config(Family::E6, 6, 2, role), ok = true;
    if (letter == 'E' && prefix.empty() && n == 7 && sup == std::vector<int>{3}) c = config(Family::E7, 7, 3, role), ok = true;
    if (!ok || !c.valid() || c.render() != text)
        throw std::invalid_argument("'" + text + "' is not a configuration of the tables");
    return c;
}

namespace {

Classification reject(std::string why) {
    Classification c;
    c.rejection = std::move(why);
    return c;
}

Cycle extended_cycle(const ResolutionGraph& g, const RdpComponent& comp) {
    std::vector<int> keep;
    for (const auto& [ext, in] : comp.attachments) keep.push_back(ext);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    const std::size_t squares = keep.size();
    keep.insert(keep.end(), comp.vertices.begin(), comp.vertices.end());
    auto sub = induced_subgraph(g, keep);
    std::vector<char> allowed(keep.size(), 1);
    for (std::size_t i = 0; i < squares; ++i) allowed[i] = 0;
    auto t = computation_sequence(sub, reduced_cycle(sub), allowed);
    Cycle z = zero_cycle(g);
    for (std::size_t i = squares; i < keep.size(); ++i) z[keep[i]] = t.result[i];
    return z;
}

}  // namespace

Classification classify_component(const ResolutionGraph& g, const RdpComponent& comp) {
    if (comp.attachments.empty()) return reject("no attached non-(-2) vertex");
    std::set<int> externals;
    for (const auto& [ext, in] : comp.attachments) {
        if (g.edge_weight(ext, in) != 1) return reject("attachment by a multiple edge");
        if (!externals.insert(ext).second) return reject("a vertex is attached twice, so the graph is not a tree");
    }
    if (externals.size() > 3) return reject("more than three attached vertices");

    std::vector<int> sorted = comp.vertices;
    auto rdp = induced_subgraph(g, sorted);
    auto zr = fundamental_cycle(rdp).first;
    for (const auto& [ext, in] : comp.attachments) {
        auto pos = std::lower_bound(sorted.begin(), sorted.end(), in) - sorted.begin();
        if (zr[pos] >= 2) return reject("attachment at a vertex of multiplicity >= 2 in the RDP fundamental cycle");
    }
    int valency_three = 0;
    for (int v : comp.vertices) {
        int val = valency(g, v);
        if (val >= 4) return reject("a vertex of the configuration has valency four or more");
        if (val == 3) ++valency_three;
    }
    if (valency_three > 1) return reject("more than one vertex of the configuration has valency three");

    Shape sh = shape_of(g, comp);
    Classification out;
    out.extended = extended_cycle(g, comp);
    const int count = static_cast<int>(comp.attachments.size());
    std::vector<std::pair<int, int>> at = comp.attachments;  // (external, internal)

    if (comp.type == DynkinType::A) {
        const int n = comp.rank;
        auto pos = [&](int internal) {
            return static_cast<int>(std::find(sh.chain.begin(), sh.chain.end(), internal) - sh.chain.begin());
        };
        std::vector<std::pair<int, int>> pe;  // (position, external)
        for (const auto& [ext, in] : at) pe.emplace_back(pos(in), ext);
        std::sort(pe.begin(), pe.end());
        if (count == 1) {
            int p = pe[0].first;
            out.name = config(Family::A, n, std::min(p, n - 1 - p) + 1);
            out.roles = {{Role::None, pe[0].second}};
            return out;
        }
        if (count == 2) {
            auto [a, ea] = pe[0];
            auto [b, eb] = pe[1];
            if (n == 1) {
                out.name = config(Family::A11, 1);
                out.roles = {{Role::L, ea}, {Role::R, eb}};
                return out;
            }
            if (a == 0 && b == n - 1) {
                out.name = config(Family::A11, n);
                out.roles = {{Role::L, ea}, {Role::R, eb}};
                return out;
            }
            int end_ext = -1, other_ext = -1, q = 0;
            if (a == 0) {
                end_ext = ea, other_ext = eb, q = b + 1;
            } else if (b == n - 1) {
                end_ext = eb, other_ext = ea, q = n - a;
            } else {
                return reject("two attachments on an A-chain need one of them at an end");
            }
            if (2 * q + 1 <= n) {
                out.name = config(Family::IA, n, q + 1);
                out.roles = {{Role::L, end_ext}, {Role::M, other_ext}};
            } else {
                out.name = config(Family::IIA, n, n - q + 1);
                out.roles = {{Role::M, other_ext}, {Role::R, end_ext}};
            }
            return out;
        }
        // three attachments: both ends plus one more
        int left = -1, right = -1;
        for (int i = 0; i < 3; ++i) {
            if (pe[i].first == 0 && left < 0) left = i;
        }
        for (int i = 2; i >= 0; --i) {
            if (pe[i].first == n - 1 && right < 0 && i != left) right = i;
        }
        if (left < 0 || right < 0) return reject("three attachments on an A-chain need both ends attached");
        int third = 3 - left - right;
        int p = pe[third].first;
        int ql = p + 1, qr = n - p;
        if (ql <= qr) {
            out.name = config(Family::A2k2, n, ql + 1);
            out.roles = {{Role::L, pe[left].second}, {Role::M, pe[third].second}, {Role::R, pe[right].second}};
        } else {
            out.name = config(Family::A2k2, n, qr + 1);
            out.roles = {{Role::L, pe[right].second}, {Role::M, pe[third].second}, {Role::R, pe[left].second}};
        }
        return out;
    }

    if (comp.type == DynkinType::D) {
        const int m = comp.rank;
        // short arms first; for D4 every leaf counts as the end of the long arm
        int long_end = sh.arms[2].back();
        auto is_short_leaf = [&](int v) { return m > 4 && (v == sh.arms[0][0] || v == sh.arms[1][0]); };
        if (count == 1) {
            auto [ext, in] = at[0];
            out.roles = {{Role::None, ext}};
            if (m == 4 || in == long_end) {
                out.name = config(Family::ID, m, 2);
            } else if (is_short_leaf(in)) {
                out.name = config(Family::IID, m, m / 2);
            } else {
                return reject("attachment at a vertex of multiplicity >= 2 in the RDP fundamental cycle");
            }
            return out;
        }
        if (count == 2) {
            int l = -1, r = -1;
            for (int i = 0; i < 2; ++i) {
                if (is_short_leaf(at[i].second))
                    l = i;
                else
                    r = i;
            }
            if (m == 4) l = 0, r = 1;
            if (l < 0 || r < 0) return reject("two attachments at the short leaves of a D-configuration");
            out.name = m % 2 == 1 ? config(Family::DOdd, m, (m - 1) / 2) : config(Family::DEven, m, m / 2);
            out.roles = {{Role::L, at[l].first}, {Role::R, at[r].first}};
            return out;
        }
        return reject("more than two attachments on a D-configuration");
    }

    if (count > 1) return reject("an E-configuration attached to more than one vertex");
    if (comp.type == DynkinType::E6) {
        out.name = config(Family::E6, 6, 2);
    } else if (comp.type == DynkinType::E7) {
        out.name = config(Family::E7, 7, 3);
    } else {
        return reject("attachment at a vertex of multiplicity >= 2 in the RDP fundamental cycle");
    }
    out.roles = {{Role::None, at[0].first}};
    return out;
}

std::vector<int> build_configuration(GraphBuilder& gb, const ConfigName& name, const std::vector<int>& targets) {
    if (!name.valid()) throw std::invalid_argument("invalid configuration " + name.render());
    if (targets.size() != family_roles(name.family).size())
        throw std::invalid_argument("wrong number of attachment targets for " + name.render());
    const int n = name.n, k = name.k;
    auto dn = [&](int m, std::vector<int>& out) {
        // returns {short leaf, other short leaf, fork, long arm ...}
        int s1 = gb.add(2), s2 = gb.add(2), f = gb.add(2);
        gb.join(s1, f);
        gb.join(s2, f);
        out = {s1, s2, f};
        int prev = f;
        for (int i = 0; i < m - 3; ++i) {
            int v = gb.add(2);
            gb.join(prev, v);
            out.push_back(v);
            prev = v;
        }
    };
    std::vector<int> v;
    switch (name.family) {
        case Family::A:
            v = gb.chain(n);
            gb.join(targets[0], v[k - 1]);
            break;
        case Family::ID:
            dn(n, v);
            gb.join(targets[0], v.back());
            break;
        case Family::IID:
            dn(n, v);
            gb.join(targets[0], v[0]);
            break;
        case Family::DOdd:
        case Family::DEven:
            dn(n, v);
            gb.join(targets[0], v[0]);
            gb.join(targets[1], v.back());
            break;
        case Family::E6: {
            v = gb.chain(5);
            int b = gb.add(2);
            gb.join(v[2], b);
            v.push_back(b);
            gb.join(targets[0], v[0]);
            break;
        }
        case Family::E7: {
            v = gb.chain(6);
            int b = gb.add(2);
            gb.join(v[3], b);
            v.push_back(b);
            gb.join(targets[0], v[0]);
            break;
        }
        case Family::A11:
            if (n == 0) {
                gb.join(targets[0], targets[1]);
                break;
            }
            v = gb.chain(n);
            gb.join(targets[0], v.front());
            gb.join(targets[1], v.back());
            break;
        case Family::IA:
            v = gb.chain(n);
            gb.join(targets[0], v.front());
            gb.join(targets[1], v[k - 2]);
            break;
        case Family::IIA:
            v = gb.chain(n);
            gb.join(targets[0], v[k - 1]);
            gb.join(targets[1], v.back());
            break;
        case Family::A2k2:
            v = gb.chain(n);
            gb.join(targets[0], v.front());
            gb.join(targets[1], v[k - 2]);
            gb.join(targets[2], v.back());
            break;
    }
    return v;
}

// ---------------------------------------------------------------------------
// multiplicity sequences

std::vector<int> MultiplicitySequence::prefix(std::size_t len) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < len; ++i) {
        if (i < head.size())
            out.push_back(head[i]);
        else if (!period.empty())
            out.push_back(period[(i - head.size()) % period.size()]);
        else
            break;
    }
    return out;
}

std::string MultiplicitySequence::render() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << head[i];
    if (!period.empty()) {
        out << (head.empty() ? "" : ",") << '[';
        for (std::size_t i = 0; i < period.size(); ++i) out << (i ? "," : "") << period[i];
        out << "]...";
    }
    out << ')';
    return out.str();
}

namespace {

struct Seq {
    std::vector<int> v;
    Seq& rep(int value, int count) {
        for (int i = 0; i < count; ++i) v.push_back(value);
        return *this;
    }
    Seq& add(int value) { return rep(value, 1); }
};

MultiplicitySequence finite(const Seq& s) { return {s.v, {}}; }
MultiplicitySequence periodic(const Seq& h, const Seq& p) { return {h.v, p.v}; }

// n + shift = (l+1)*base + r with 0 <= r < base, l >= 1
std::pair<int, int> split(int value, int base) { return {value / base - 1, value % base}; }

Role effective_role(const ConfigName& name, Role role) {
    auto roles = family_roles(name.family);
    if (roles.size() == 1) {
        if (role != Role::None) throw RoleError(name.render() + " has a single attached vertex");
        return Role::None;
    }
    if (std::find(roles.begin(), roles.end(), role) == roles.end())
        throw RoleError(std::string("role ") + (role == Role::None ? '-' : role_letter(role)) + " is absent from " +
                        name.render());
    // coincident attachment vertices behave identically
    if ((name.family == Family::IA || name.family == Family::A2k2) && name.k == 2 && role == Role::M) return Role::L;
    if (name.family == Family::A2k2 && name.n == 1) return Role::L;
    if (name.family == Family::IIA && name.n == 2 && role == Role::R) return Role::M;
    if (name.family == Family::DEven && name.k == 2) return Role::R;
    if (name.family == Family::A11) return Role::L;
    return role;
}

}  // namespace

MultiplicitySequence predicted_multiplicity_sequence(const ConfigName& name) {
    return predicted_multiplicity_sequence(name, name.role);
}

MultiplicitySequence predicted_multiplicity_sequence(const ConfigName& name, Role role) {
    if (!name.valid()) throw std::invalid_argument("invalid configuration " + name.render());
    const int n = name.n, k = name.k;
    role = effective_role(name, role);
    switch (name.family) {
        case Family::A: {
            if (k == 1) return periodic({}, Seq{}.rep(1, n).add(0));
            auto [l, r] = split(n + 1, k);
            if (r < k - 1) return finite(Seq{}.rep(k, l).add(r));
            if (k == 2) return finite(Seq{}.rep(2, l).rep(1, 2).rep(2, l).add(0));
            return finite(Seq{}.rep(k, l).add(k - 1).add(1));
        }
        case Family::ID: return finite(Seq{{2, 0}});
        case Family::IID:
            if (n == 2 * k) return finite(Seq{{k, 0}});
            if (k == 2) return finite(Seq{{2, 1, 2, 0}});
            return finite(Seq{{k, 1}});
        case Family::E6: return finite(Seq{{2, 2, 0}});
        case Family::E7: return finite(Seq{{3, 0}});
        case Family::A11: return periodic(Seq{}.rep(1, n + 1), Seq{}.add(0).rep(1, n));
        case Family::IA: {
            if (role == Role::L) return finite(Seq{}.add(2).rep(1, n - k).add(0));
            auto [l, r] = split(n, k - 1);
            return finite(Seq{}.add(k).rep(k - 1, l - 1).add(r));
        }
        case Family::IIA: {
            if (role == Role::R) return finite(Seq{}.add(2).rep(1, k - 2).add(0));
            auto [l, r] = split(n + 2, k);
            if (r < k - 1) return finite(Seq{}.rep(k, l).add(r));
            if (k == 2) return periodic(Seq{}.rep(2, l), Seq{}.rep(1, 2).rep(2, l - 1));
            return finite(Seq{}.rep(k, l).add(k - 1).add(1));
        }
        case Family::DOdd:
            if (role == Role::L) return finite(Seq{{k + 1, 0}});
            return periodic(Seq{{2}}, Seq{{1}});
        case Family::DEven:
            if (role == Role::L) return finite(Seq{{k, 1}});
            return periodic(Seq{{2}}, Seq{{1}});
        case Family::A2k2: {
            if (role == Role::L) return finite(Seq{}.add(2).rep(1, n - k + 1).add(0));
            if (role == Role::R) return finite(Seq{}.add(2).rep(1, k - 2).add(0));
            auto [l, r] = split(n + 1, k - 1);
            return finite(Seq{}.add(k).rep(k - 1, l - 1).add(r));
        }
    }
    throw std::logic_error("unhandled family");
}

std::map<Role, Integer> predicted_other_multiplicity(const ConfigName& name, Role role, int s) {
    if (!name.valid()) throw std::invalid_argument("invalid configuration " + name.render());
    const int n = name.n, k = name.k;
    const Role original = role;
    role = effective_role(name, role);
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    std::map<Role, Integer> out;
    auto others = [&](Integer v) {
        for (Role r : family_roles(name.family)) {
            if (r != original && r != Role::None) out[r] = v;
        }
    };
    switch (name.family) {
        case Family::A11: others(ceil_div(n + s, n + 1)); break;
        case Family::IA:
            if (role == Role::L)
                others(n - k + 2);
            else
                others(ceil_div(n, k - 1));
            break;
        case Family::IIA:
            if (role == Role::R) {
                others(k);
            } else {
                auto [l, r] = split(n + 2, k);
                if (r < k - 1)
                    others(2);
                else if (k > 2)
                    others(3);
                else
                    others(ceil_div(l + 1 + s, l + 1));
            }
            break;
        case Family::DOdd: others(role == Role::L ? Integer(2) : Integer(ceil_div(2 * k + s, 2))); break;
        case Family::DEven: others(role == Role::L ? Integer(3) : Integer((2 * k + s) / 2)); break;
        case Family::A2k2:
            if (role == Role::L) {
                if (original != Role::M) out[Role::M] = n - k + 3;
                if (original != Role::R) out[Role::R] = 2;
                if (original == Role::M) out[Role::L] = n - k + 3;
                if (original == Role::R) out[Role::L] = 2;
            } else if (role == Role::M) {
                out[Role::L] = ceil_div(n + 1, k - 1);
                out[Role::R] = 2;
            } else {
                out[Role::L] = 2;
                out[Role::M] = k;
            }
            break;
        default: break;
    }
    return out;
}

std::optional<std::vector<ConfigName>> equivalent_configuration(const ConfigName& name) {
    if (!name.valid()) throw std::invalid_argument("invalid configuration " + name.render());
    const int n = name.n, k = name.k;
    std::vector<ConfigName> out;
    auto a1 = [&](int len, int count) {
        for (int i = 0; i < count; ++i) out.push_back(config(Family::A, len, 1));
    };
    auto bridge = [&](int len) { out.push_back(config(Family::A11, len, 1, Role::L)); };
    switch (name.family) {
        case Family::A: {
            if (k == 1) return std::nullopt;
            auto [l, r] = split(n + 1, k);
            if (r < k - 1) {
                a1(l, k - r);
                a1(l + 1, r);
            } else {
                if (k == 2) return std::nullopt;
                a1(l, 1);
                a1(l + 1, k - 1);
            }
            break;
        }
        case Family::ID: a1(1, 2); break;
        case Family::IID:
            if (n == 2 * k) {
                a1(1, k);
            } else if (k == 2) {
                a1(1, 1);
                a1(3, 1);
            } else {
                a1(1, k - 1);
                a1(2, 1);
            }
            break;
        case Family::E6: a1(2, 2); break;
        case Family::E7: a1(1, 3); break;
        case Family::A11: return std::nullopt;
        case Family::A2k2: return std::nullopt;
        default: {
            Role role = effective_role(name, name.role);
            if (name.family == Family::IA) {
                bridge(0);
                if (role == Role::L) {
                    a1(n - k + 1, 1);
                } else {
                    auto [l, r] = split(n, k - 1);
                    a1(l, k - 1 - r);
                    a1(l + 1, r);
                }
            } else if (name.family == Family::IIA) {
                if (role == Role::R) {
                    bridge(0);
                    a1(k - 1, 1);
                } else {
                    auto [l, r] = split(n + 2, k);
                    if (r < k - 1) {
                        bridge(l - 1);
                        a1(l + 1, r);
                        a1(l, k - 1 - r);
                    } else if (k == 2) {
                        bridge(l);
                        a1(l, 1);
                    } else if (l > 1) {
                        bridge(l - 1);
                        a1(l + 1, k - 1);
                    } else {
                        bridge(1);
                        a1(1, 1);
                        a1(2, k - 2);
                    }
                }
            } else if (name.family == Family::DOdd) {
                if (role == Role::L) {
                    bridge(0);
                    a1(1, k);
                } else {
                    bridge(1);
                    a1(1, 1);
                }
            } else if (name.family == Family::DEven) {
                if (role == Role::L) {
                    a1(1, k - 2);
                    a1(2, 1);
                    bridge(0);
                } else {
                    bridge(1);
                    a1(1, 1);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// attached-vertex data

AttachmentProfile attachment_profile(const ResolutionGraph& g, const RdpComponent& comp, const Classification& cls,
                                     int stages) {
    if (!cls.name) throw std::invalid_argument("profile needs a classified configuration");
    std::vector<int> removed = comp.vertices;
    for (const auto& [role, ext] : cls.roles) removed.push_back(ext);
    auto outer = components_without(g, removed);
    AttachmentProfile p;
    for (const auto& [role, ext] : cls.roles) {
        Integer nd = 0;
        for (const auto& [e, in] : comp.attachments) {
            if (e == ext) nd = cls.extended[in];
        }
        p.n_delta[role] = static_cast<std::int64_t>(nd);
        std::vector<int> keep{ext};
        for (const auto& c : outer) {
            bool touches = false;
            for (int v : c) touches = touches || g.adjacent(v, ext);
            if (touches) keep.insert(keep.end(), c.begin(), c.end());
        }
        std::vector<std::int64_t> sums(stages, 0);
        if (keep.size() > 1) {
            std::sort(keep.begin() + 1, keep.end());
            auto t = forced_central_stages(induced_subgraph(g, keep), 0, stages);
            for (int s = 0; s < stages; ++s) {
                Integer total = 0;
                for (const auto& m : t.stages[s].m) total += m;
                sums[s] = static_cast<std::int64_t>(total);
            }
        }
        p.n_outer[role] = sums;
        std::vector<std::int64_t> def;
        const std::int64_t b = g.weight(ext);
        for (int s = 0; s < stages; ++s) def.push_back(s == 0 ? b + 1 - p.n_delta[role] - sums[0] : b - sums[s]);
        p.deficiency_sequences[role] = def;
    }
    return p;
}

bool is_bad_vertex(const AttachmentProfile& p, Role role, std::int64_t b) {
    auto d = p.n_delta.find(role);
    auto o = p.n_outer.find(role);
    if (d == p.n_delta.end() || o == p.n_outer.end() || o->second.empty())
        throw std::invalid_argument("profile has no stage-1 data for this vertex");
    return d->second + o->second[0] == b + 1;
}

namespace {

enum class Rel { Eq, Le };

struct Condition {
    Role role;
    int stage;  // 1 or 2
    Rel rel;
    std::int64_t offset;  // right hand side is b_role + offset
};

struct System {
    std::string label;
    std::vector<Condition> conds;
};

std::string describe(const Condition& c) {
    std::ostringstream out;
    char r = role_letter(c.role);
    out << "n_" << r << "^(" << c.stage << ") " << (c.rel == Rel::Eq ? "=" : "<=") << " b_" << r;
    if (c.offset > 0) out << " + " << c.offset;
    if (c.offset < 0) out << " - " << -c.offset;
    return out.str();
}

Condition eq(Role r, int s, std::int64_t off) { return {r, s, Rel::Eq, off}; }
Condition le(Role r, int s, std::int64_t off) { return {r, s, Rel::Le, off}; }

System mirrored(const System& s) {
    System m{s.label + " (mirrored)", {}};
    for (auto c : s.conds) {
        c.role = c.role == Role::L ? Role::R : (c.role == Role::R ? Role::L : c.role);
        m.conds.push_back(c);
    }
    return m;
}

std::vector<System> systems_for(const ConfigName& name) {
    const std::int64_t n = name.n, k = name.k;
    using enum Role;
    std::vector<System> out;
    switch (name.family) {
        case Family::A11: {
            System s{"left vertex bad", {eq(L, 1, 0), le(L, 2, -2), eq(R, 1, -1), le(R, 2, -1)}};
            out.push_back(s);
            out.push_back(mirrored(s));
            break;
        }
        case Family::IA: {
            std::int64_t m2 = n <= 3 * k - 4 ? -k + 1 : (n == 3 * k - 3 ? -k : -k - 1);
            out.push_back({"middle vertex bad", {eq(L, 1, -2), le(L, 2, -2), eq(M, 1, -k + 1), le(M, 2, m2)}});
            out.push_back({"left vertex bad",
                           {eq(L, 1, -1), le(L, 2, n == 2 * k - 1 ? -2 : -3), eq(M, 1, -k), le(M, 2, -k)}});
            break;
        }
        case Family::IIA: {
            std::int64_t m2 = n <= 3 * k - 5 ? -k + 1 : (n == 3 * k - 4 ? -k : -k - 1);
            out.push_back({"right vertex bad", {eq(M, 1, -k + 1), le(M, 2, m2), eq(R, 1, -1), le(R, 2, -2)}});
            break;
        }
        case Family::DOdd:
            out.push_back({"stops at stage two", {eq(L, 1, -k), le(L, 2, -k), eq(R, 1, -1), le(R, 2, -3)}});
            break;
        case Family::DEven: {
            System two{"stops at stage two", {eq(L, 1, -k), le(L, 2, -k), eq(R, 1, -1), le(R, 2, -2)}};
            if (k > 2)
                out.push_back({"stops at stage one", {eq(L, 1, -k + 1), le(L, 2, -k + 1), eq(R, 1, -2), le(R, 2, -2)}});
            out.push_back(two);
            if (k == 2) out.push_back(mirrored(two));
            break;
        }
        case Family::A2k2: {
            std::vector<System> base;
            if (k > 2) {
                base.push_back({"right vertex bad, left stays reduced",
                                {le(L, 1, -3), eq(M, 1, -k + 1), le(M, 2, n <= 3 * k - 6 ? -k + 1 : -k), eq(R, 1, -1),
                                 le(R, 2, -2)}});
                std::int64_t m2a = n <= 3 * k - 5 ? -k + 1 : (n == 3 * k - 4 ? -k : -k - 1);
                if (n > 2 * k - 3)
                    base.push_back({"middle vertex bad, right stays reduced",
                                    {eq(L, 1, -2), le(L, 2, -2), eq(M, 1, -k + 1), le(M, 2, m2a), le(R, 1, -2)}});
                std::int64_t m2b = n <= 3 * k - 6 ? -k + 1 : (n == 3 * k - 5 ? -k : -k - 1);
                base.push_back({"all three of multiplicity two",
                                {eq(L, 1, -2), le(L, 2, -2), eq(M, 1, -k + 1), le(M, 2, m2b), eq(R, 1, -1),
                                 le(R, 2, -2)}});
            }
            base.push_back({"middle vertex not bad",
                            {eq(L, 1, -1), le(L, 2, -2), eq(M, 1, -k - 1), eq(R, 1, -1), le(R, 2, -2)}});
            base.push_back({"middle vertex not bad, all three of multiplicity two",
                            {eq(L, 1, -1), le(L, 2, n == 2 * k - 3 ? -2 : -3), eq(M, 1, -k), le(M, 2, -k),
                             eq(R, 1, -1), le(R, 2, -2)}});
            for (const auto& s : base) {
                out.push_back(s);
                if (n == 2 * k - 3) out.push_back(mirrored(s));
            }
            break;
        }
        default: throw std::invalid_argument(name.render() + " has no multiplicity-two inequality system");
    }
    return out;
}

}  // namespace

ConstraintResult multiplicity_two_constraints(const ConfigName& name, const AttachmentProfile& p,
                                              const std::map<Role, std::int64_t>& weights) {
    auto systems = systems_for(name);
    std::string first_failure;
    for (const auto& sys : systems) {
        bool ok = true;
        std::string failure;
        for (const auto& c : sys.conds) {
            auto w = weights.find(c.role);
            auto o = p.n_outer.find(c.role);
            if (w == weights.end() || o == p.n_outer.end() || o->second.empty())
                throw std::invalid_argument(std::string("missing data for vertex ") + role_letter(c.role));
            std::int64_t value = static_cast<int>(o->second.size()) >= c.stage ? o->second[c.stage - 1] : 0;
            std::int64_t rhs = w->second + c.offset;
            bool holds = c.rel == Rel::Eq ? value == rhs : value <= rhs;
            if (!holds) {
                ok = false;
                failure = sys.label + ": " + describe(c) + " fails (value " + std::to_string(value) + ")";
                break;
            }
        }
        if (ok) return {true, sys.label};
        if (first_failure.empty()) first_failure = failure;
    }
    return {false, first_failure};
}

std::optional<int> max_attachment_multiplicity_bound(const ConfigName& name) {
    Role role = name.role;
    auto roles = family_roles(name.family);
    if (roles.size() > 1 && role == Role::None) role = roles.front();
    if ((name.family == Family::DOdd || name.family == Family::DEven) && role == Role::L) return 2;
    if (name.family == Family::DEven && name.k == 2) return 2;
    auto seq = predicted_multiplicity_sequence(name, role);
    if (seq.infinite()) return std::nullopt;
    return static_cast<int>(seq.head.size());
}

}  // namespace ratsing
