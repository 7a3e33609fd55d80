#pragma once

#include "ratsing/central.hpp"
#include "ratsing/rdp.hpp"

namespace ratsing {

// A subgraph hung from a central vertex by a single edge (or, for a
// configuration, by its designated role; the other roles go to big leaves).
struct Piece {
    enum class Kind { Config, Chain, Leaf, Bridge, Tree };
    Kind kind = Kind::Chain;
    ConfigName name;                    // Config
    int n = 0;                          // Chain / Bridge length, Leaf weight
    std::vector<std::int64_t> weights;  // Tree: vertex 0 is joined to the centre
    std::vector<int> parent;            // Tree: parent[i] < i for i > 0

    static Piece config(const ConfigName& c) { return Piece{Kind::Config, c, 0, {}, {}}; }
    static Piece chain(int n) { return Piece{Kind::Chain, {}, n, {}, {}}; }
    static Piece leaf(int b) { return Piece{Kind::Leaf, {}, b, {}, {}}; }
    static Piece bridge(int n) { return Piece{Kind::Bridge, {}, n, {}, {}}; }
    static Piece tree(std::vector<std::int64_t> w, std::vector<int> p) {
        return Piece{Kind::Tree, {}, 0, std::move(w), std::move(p)};
    }
    // Equivalence-table entries: A^1_n chains and bridges L A^{1,1}_n.
    static Piece from_equivalent(const ConfigName& c);

    std::string describe() const;
    // Returns the new vertices; `big` is the weight of the far vertices.
    // For configurations, `outer` receives (role, far vertex) for the other roles.
    std::vector<int> attach(GraphBuilder& gb, int centre, std::int64_t big,
                            std::vector<std::pair<Role, int>>* outer = nullptr) const;
};

// m^(1..stages) of the piece with the centre made arbitrarily negative.
std::vector<int> intrinsic_sequence(const Piece& p, int stages);

struct SequenceWitness {
    ResolutionGraph graph;
    int central = 0;
    std::vector<Piece> pieces;  // pieces[0] is the piece under test
    std::vector<int> first_vertex;  // a vertex of each piece
    CentralTrace trace;
    std::vector<int> observed;  // m-sequence of pieces[0]
    std::vector<std::pair<Role, int>> outer;  // far vertices of pieces[0]
};

// Coefficient of the configuration vertex next to each far vertex after stage s.
std::map<Role, Integer> other_multiplicity(const ResolutionGraph& g, const std::vector<std::pair<Role, int>>& outer,
                                           const Cycle& z);

// Same, read off a forced computation of the configuration alone.
std::map<Role, Integer> intrinsic_other_multiplicity(const ConfigName& c, int s);

struct WitnessOptions {
    std::int64_t big = 1000;
    int max_covers = 200;
    bool generic_trees = true;
};

// Central vertex with `test` plus auxiliary pieces whose dips make the stage
// sums continue for target.size() stages (and stop there if the last entry
// terminates). Verified by a full computation; nullopt if no cover works.
std::optional<SequenceWitness> build_sequence_witness(const Piece& test, const std::vector<int>& target,
                                                      const WitnessOptions& opt = {});

// Same centre and auxiliaries with pieces[0] swapped for `replacement`.
SequenceWitness rebuild_with(const SequenceWitness& w, const std::vector<Piece>& replacement, std::int64_t big = 1000);

// Stage sums S_s over all components.
std::vector<Integer> stage_sums(const CentralTrace& t);

// Centre with the given pieces; the centre weight is chosen as S_1 - 1.
ResolutionGraph assemble(const std::vector<Piece>& pieces, std::int64_t centre_weight, std::int64_t big,
                         std::vector<int>* first_vertex = nullptr,
                         std::vector<std::pair<Role, int>>* outer = nullptr);

}  // namespace ratsing
