#include "ratsing/lattice.hpp"

namespace ratsing {

DefinitenessReport check_negative_definite(const ResolutionGraph& g) {
    const int r = g.size();
    std::vector<std::vector<Integer>> m(r, std::vector<Integer>(r));
    for (int i = 0; i < r; ++i) m[i][i] = -g.weight(i);
    for (const auto& e : g.edges()) {
        m[e.u][e.v] = e.weight;
        m[e.v][e.u] = e.weight;
    }
    // Without pivoting, the k-th Bareiss pivot is the k-th leading principal minor.
    DefinitenessReport rep;
    Integer prev = 1;
    for (int k = 0; k < r; ++k) {
        const Integer& det = m[k][k];
        rep.leading_minors.push_back(det);
        bool ok = (k % 2 == 0) ? det < 0 : det > 0;
        if (!ok) {
            rep.failing_minor = k + 1;
            return rep;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < r; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    rep.is_negative_definite = true;
    return rep;
}

RationalCycle canonical_cycle(const ResolutionGraph& g) {
    const int r = g.size();
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r + 1));
    for (int i = 0; i < r; ++i) {
        a[i][i] = -g.weight(i);
        a[i][r] = 2 * g.vertex(i).genus - 2 + g.weight(i);
    }
    for (const auto& e : g.edges()) {
        a[e.u][e.v] = e.weight;
        a[e.v][e.u] = e.weight;
    }
    for (int c = 0; c < r; ++c) {
        int p = c;
        while (p < r && a[p][c] == 0) ++p;
        if (p == r) throw GraphError("intersection matrix is singular; no canonical cycle");
        std::swap(a[c], a[p]);
        for (int i = 0; i < r; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (int j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RationalCycle k(r);
    for (int i = 0; i < r; ++i) k[i] = a[i][r] / a[i][i];
    return k;
}

Integer canonical_degree(const ResolutionGraph& g, const Cycle& z) {
    if (!g.all_genus_zero()) throw GraphError("canonical degree formula needs all genus weights zero");
    if (static_cast<int>(z.size()) != g.size()) throw GraphError("cycle dimension mismatch");
    Integer s = 0;
    for (int i = 0; i < g.size(); ++i) s += z[i] * (g.weight(i) - 2);
    return s;
}

Rational intersect(const ResolutionGraph& g, const Cycle& a, const RationalCycle& b) {
    if (static_cast<int>(a.size()) != g.size() || static_cast<int>(b.size()) != g.size())
        throw GraphError("cycle dimension mismatch");
    Rational s = 0;
    for (int i = 0; i < g.size(); ++i) s -= Rational(a[i]) * b[i] * g.weight(i);
    for (const auto& e : g.edges()) s += Rational(e.weight) * (Rational(a[e.u]) * b[e.v] + Rational(a[e.v]) * b[e.u]);
    return s;
}

}  // namespace ratsing
