#pragma once

#include "ratsing/graph.hpp"

namespace ratsing {

struct StageRecord {
    int s = 0;
    std::vector<Cycle> contributions;  // Y_i^(s), full-length cycles supported on Gamma_i
    std::vector<Integer> m;            // m_i^(s)
    Cycle cycle;                       // Z^(s)
};

struct CentralTrace {
    int central = 0;
    std::vector<std::vector<int>> components;
    std::vector<StageRecord> stages;
    Cycle final;
};

// Stage-by-stage computation with E_0's coefficient rising by one per stage.
// With several components each Y_i^(s) comes from the fundamental cycle of
// {E_0} + Gamma_i^(s); with one component the sequence variant is used.
CentralTrace central_fundamental_cycle(const ResolutionGraph& g, int central);

// Variant: add E_0, then run a computation sequence that never adds E_0.
CentralTrace central_by_sequences(const ResolutionGraph& g, int central);

std::vector<Integer> observed_multiplicity_sequence(const CentralTrace& t, int component);

// Runs exactly `stages` stages with E_0's row ignored (E_0 made arbitrarily
// negative). The m-sequences obtained are intrinsic to each component.
CentralTrace forced_central_stages(const ResolutionGraph& g, int central, int stages);

// Component index containing vertex v, or -1 for the central vertex.
int component_of(const CentralTrace& t, int v);

std::string render_central(const ResolutionGraph& g, const CentralTrace& t);

// Fundamental cycle without the trace; uses the certified fast path when it applies.
Cycle fundamental_cycle_of(const ResolutionGraph& g);

}  // namespace ratsing
