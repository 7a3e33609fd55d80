#pragma once

#include "ratsing/graph.hpp"

namespace ratsing {

// Isomorphism-invariant string for a weighted tree: AHU encoding rooted at the
// centre (both centres tried, smaller string kept). Vertex labels are ignored.
std::string canonical_form(const ResolutionGraph& g);

bool isomorphic(const ResolutionGraph& a, const ResolutionGraph& b);

// Same graph with vertices renumbered in canonical order.
ResolutionGraph canonical_relabel(const ResolutionGraph& g);

}  // namespace ratsing
