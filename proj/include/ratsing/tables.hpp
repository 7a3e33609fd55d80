#pragma once

#include "ratsing/classify.hpp"

#include <optional>

namespace ratsing {

// C(m1, m2) or C(m1, <= m2): configurations at one vertex realising a
// two-stage multiplicity sequence.
struct SeqClass {
    int m1 = 0;
    int m2 = 0;
    bool at_most = false;

    bool admits(std::pair<int, int> seq) const;
    std::vector<std::pair<int, int>> members() const;
    std::string render() const;
};

struct Combination {
    std::vector<ConfigName> configs;
    std::pair<int, int> seq;  // intrinsic two-stage sequence at the attachment vertex
    std::string render() const;
};

// Multisets of single-attachment configurations with first entry <= max_m1,
// grouped by sequence, at most `reps` per class (fewest and shortest first).
std::map<std::pair<int, int>, std::vector<Combination>> combination_classes(int max_chain, int max_m1, int reps);

std::pair<int, int> combination_sequence(const std::vector<ConfigName>& configs);

// A table row naming a configuration family with an n range; n_max < 0 means unbounded.
struct TableRow {
    Family family = Family::A;
    int k = 0;  // ignored for D families
    int n_min = 0;
    int n_max = 0;
    Role role = Role::None;      // role sitting at E_L, attachment tables only
    std::vector<SeqClass> sides;  // per attachment, or per vertex
    std::optional<std::pair<int, int>> sequence;  // attachment tables: (m_L^(1), m_L^(2))
    bool bad = false;

    bool matches(const ConfigName& c) const;
    std::vector<int> samples(int max_chain) const;  // boundary and boundary + 2
    std::string render() const;
};

struct RowCheck {
    std::string row;
    bool realised = false;
    std::string detail;
    std::optional<ResolutionGraph> witness;
};

struct ExtraCase {
    std::string text;
    std::optional<ResolutionGraph> witness;
};

struct TableReport {
    std::string title;
    std::vector<RowCheck> rows;
    std::vector<ExtraCase> extras;  // realised cases outside the table
    std::size_t graphs = 0;
    std::string caps;

    bool passed() const;
    std::string render(bool witnesses = false) const;
};

std::vector<TableRow> two_threes_rows();
std::vector<TableRow> tjoint_rows();
std::vector<TableRow> attachment_rows();

// Two (-3)'s of multiplicity 2 joined by one configuration.
TableReport verify_degree6_two_threes(const EnumerationCaps& caps);
// One (-3) of multiplicity 4 with single-attachment configurations.
TableReport verify_degree6_single_mult4(const EnumerationCaps& caps);

struct Degree8Report {
    TableReport tjoint;
    TableReport chain;        // multiplicity sequences with E_M central
    TableReport attachments;  // configurations at E_L, bad or not
    TableReport examples;     // three fixed example graphs

    bool passed() const;
};

Degree8Report verify_degree8_triple(const EnumerationCaps& caps);

struct AttachmentBound {
    ConfigName name;
    Integer max_l = 0;  // highest multiplicity of the vertex at role L
    // When swapping L and R leaves the configuration unchanged the vertices
    // are labelled so that L is the smaller one.
    bool symmetric = false;
    std::size_t graphs = 0;
    std::size_t rational = 0;
    std::optional<ResolutionGraph> witness;
};

// Two-attachment configuration between a (-b_L) and a (-b_R), each carrying
// A^1_n / A^2_{2l} configurations; 3 <= b <= min(max_weight, 5).
AttachmentBound max_l_multiplicity(const ConfigName& c, const EnumerationCaps& caps);

// Chain of three (-3)'s with leaf (-2)'s: counts of leaves at L, M, R.
ResolutionGraph three_chain_example(int index);

}  // namespace ratsing
