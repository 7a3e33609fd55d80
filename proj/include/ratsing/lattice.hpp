#pragma once

#include "ratsing/graph.hpp"

#include <optional>

namespace ratsing {

struct DefinitenessReport {
    bool is_negative_definite = false;
    // 1-based size of the first leading principal minor with the wrong sign.
    std::optional<int> failing_minor;
    std::vector<Integer> leading_minors;  // det_1 .. det_k as far as computed
};

DefinitenessReport check_negative_definite(const ResolutionGraph& g);

// Solves E_i.(E_i + K) = 2 p_a(E_i) - 2 exactly.
RationalCycle canonical_cycle(const ResolutionGraph& g);

// Z.K = sum z_i (b_i - 2); genus-zero graphs only.
Integer canonical_degree(const ResolutionGraph& g, const Cycle& z);

Rational intersect(const ResolutionGraph& g, const Cycle& a, const RationalCycle& b);

}  // namespace ratsing
