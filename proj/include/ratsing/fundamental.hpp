#pragma once

#include "ratsing/graph.hpp"

#include <map>
#include <optional>
#include <variant>

namespace ratsing {

struct TraceStep {
    int vertex;
    Cycle after;
    Integer trigger;  // Z_k . E_vertex before the addition
};

struct ComputationTrace {
    Cycle start;
    std::vector<TraceStep> steps;
    Cycle result;
    std::optional<std::size_t> rationality_violation;  // first step with trigger > 1
};

enum class RationalityReason { GenusWeight, NotNegativeDefinite, LauferViolation, Passes };

struct RationalityReport {
    bool is_rational = false;
    RationalityReason reason = RationalityReason::Passes;
    std::optional<std::size_t> violation_step;
};

class NotNegativeDefinite : public GraphError {
public:
    using GraphError::GraphError;
};

class NotRational : public GraphError {
public:
    using GraphError::GraphError;
};

class BoxExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::pair<Cycle, ComputationTrace> fundamental_cycle(const ResolutionGraph& g);

// Minimal anti-nef cycle >= start reachable by adding vertices with positive row
// value; only vertices with allowed[i] may be added (empty mask allows all).
ComputationTrace computation_sequence(const ResolutionGraph& g, const Cycle& start,
                                      const std::vector<char>& allowed = {});

Cycle brute_force_fundamental_cycle(const ResolutionGraph& g, int box);

RationalityReport is_rational(const ResolutionGraph& g);
std::string describe(const RationalityReport& r);

Integer degree(const ResolutionGraph& g);

// Fast exact path for large searches: runs the Laufer sequence from E without
// the minor test. Definiteness is certified afterwards (a positive cycle with
// Z.E_i <= 0 everywhere and < 0 somewhere on a connected graph forces it).
// Returns nullopt when the graph is not rational.
std::optional<Cycle> rational_fundamental_cycle(const ResolutionGraph& g);

struct FreePoint {
    int vertex;
};
struct EdgePoint {
    int a;
    int b;
};
using BlowUpSite = std::variant<FreePoint, EdgePoint>;

std::pair<ResolutionGraph, int> blow_up(const ResolutionGraph& g, const BlowUpSite& site);
Cycle pull_back(const ResolutionGraph& old_graph, const ResolutionGraph& new_graph, const BlowUpSite& site,
                const Cycle& a);

ResolutionGraph steepen(const ResolutionGraph& g, const std::map<int, std::int64_t>& deltas);

int complexity(const ResolutionGraph& g);

std::string render_trace(const ComputationTrace& t);

}  // namespace ratsing
