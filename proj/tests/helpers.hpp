#pragma once

#include "ratsing/builders.hpp"
#include "ratsing/graph.hpp"

#include <random>
#include <string>

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(RATSING_DATA_DIR) + "/" + name; }

inline ratsing::ResolutionGraph karras() { return ratsing::load_graph(data_path("karras.graph")); }

// E6 with chain e1..e5 (indices 0..4) and branch e6 (index 5) at e3.
inline ratsing::ResolutionGraph e6() {
    ratsing::GraphBuilder gb;
    auto c = gb.chain(5);
    int b = gb.add(2);
    gb.join(c[2], b);
    return gb.build();
}

inline ratsing::ResolutionGraph e8() {
    ratsing::GraphBuilder gb;
    auto c = gb.chain(7);
    int b = gb.add(2);
    gb.join(c[4], b);
    return gb.build();
}

inline ratsing::ResolutionGraph dn(int n) {
    ratsing::GraphBuilder gb;
    auto c = gb.chain(n - 1);
    int b = gb.add(2);
    gb.join(c[1], b);
    return gb.build();
}

// Random labelled tree (Pruefer-free: attach each new vertex to a random earlier one).
inline ratsing::ResolutionGraph random_tree(std::mt19937& rng, int n, int bmin, int bmax) {
    ratsing::GraphBuilder gb;
    std::uniform_int_distribution<int> w(bmin, bmax);
    for (int i = 0; i < n; ++i) {
        gb.add(w(rng));
        if (i > 0) gb.join(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    }
    return gb.build();
}

// Straightforward oracle: smallest anti-nef cycle >= E found by scanning
// coefficient vectors in a box in order of total size.
inline ratsing::Cycle box_search_minimum(const ratsing::ResolutionGraph& g, int box) {
    const int r = g.size();
    ratsing::Cycle best;
    std::vector<int> a(r, 1);
    while (true) {
        ratsing::Cycle c(a.begin(), a.end());
        if (ratsing::is_anti_nef(g, c)) {
            if (best.empty()) {
                best = c;
            } else {
                for (int i = 0; i < r; ++i) best[i] = std::min(best[i], c[i]);
            }
        }
        int k = 0;
        while (k < r && a[k] == box) a[k++] = 1;
        if (k == r) break;
        ++a[k];
    }
    return best;
}

}  // namespace testing_support
