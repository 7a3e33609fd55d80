#pragma once

#include "ratsing/builders.hpp"
#include "ratsing/graph.hpp"

#include <compare>
#include <map>
#include <optional>

namespace ratsing {

enum class DynkinType { A, D, E6, E7, E8 };

struct RdpComponent {
    std::vector<int> vertices;  // sorted
    DynkinType type = DynkinType::A;
    int rank = 0;
    std::vector<std::pair<int, int>> attachments;  // (external, internal), sorted
};

std::string dynkin_name(const RdpComponent& c);  // "A3", "D5", "E6"

std::vector<RdpComponent> find_rdp_components(const ResolutionGraph& g);

enum class Family { A, ID, IID, E6, E7, A11, IA, IIA, DOdd, DEven, A2k2 };
enum class Role { None, L, M, R };

char role_letter(Role r);

// n is the lower index; k the parameter named in the family:
//   A^k_n, ID^2_n, IID^k_n (n = 2k or 2k+1), E^2_6, E^3_7, A^{1,1}_n,
//   IA^{2,k}_n, IIA^{k,2}_n, D^{k+1,2}_n (n = 2k+1), D^{k,2}_n (n = 2k), A^{2,k,2}_n.
struct ConfigName {
    Family family = Family::A;
    int n = 1;
    int k = 1;
    Role role = Role::None;  // designated non-reduced vertex, if any

    std::string render() const;
    bool valid() const;
    auto operator<=>(const ConfigName&) const = default;
};

ConfigName config(Family f, int n, int k = 0, Role role = Role::None);
ConfigName parse_config_name(const std::string& text);

// Roles in attachment order for the family: {None}, {L,R}, {L,M}, {M,R} or {L,M,R}.
std::vector<Role> family_roles(Family f);

struct Classification {
    std::optional<ConfigName> name;
    std::string rejection;
    std::vector<std::pair<Role, int>> roles;  // role -> external vertex
    Cycle extended;                           // Z_Delta with squares at 1, zero outside Delta
    explicit operator bool() const { return name.has_value(); }
};

Classification classify_component(const ResolutionGraph& g, const RdpComponent& comp);

// Adds the configuration to gb, joined to `targets` (one per family role, in
// family_roles order). Returns the new (-2) vertices.
std::vector<int> build_configuration(GraphBuilder& gb, const ConfigName& name, const std::vector<int>& targets);

struct MultiplicitySequence {
    std::vector<int> head;
    std::vector<int> period;  // repeating section; empty for finite sequences

    bool infinite() const { return !period.empty(); }
    std::vector<int> prefix(std::size_t len) const;
    std::size_t check_length() const { return head.size() + period.size(); }
    std::string render() const;
    bool operator==(const MultiplicitySequence&) const = default;
};

class RoleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

MultiplicitySequence predicted_multiplicity_sequence(const ConfigName& name, Role role);
MultiplicitySequence predicted_multiplicity_sequence(const ConfigName& name);

// Coefficient of the configuration vertex next to each other attached vertex,
// after stage s (infinite sequences) or at the end (finite ones).
std::map<Role, Integer> predicted_other_multiplicity(const ConfigName& name, Role role, int s);

// nullopt means the table leaves the entry blank.
std::optional<std::vector<ConfigName>> equivalent_configuration(const ConfigName& name);

struct AttachmentProfile {
    std::map<Role, std::int64_t> n_delta;
    std::map<Role, std::vector<std::int64_t>> n_outer;  // n_a^(1), n_a^(2), ...
    // b_a + 1 - n_delta - n_a^(1), then b_a - n_a^(s) for s >= 2
    std::map<Role, std::vector<std::int64_t>> deficiency_sequences;
};

AttachmentProfile attachment_profile(const ResolutionGraph& g, const RdpComponent& comp, const Classification& cls,
                                     int stages = 2);

bool is_bad_vertex(const AttachmentProfile& p, Role role, std::int64_t b);

struct ConstraintResult {
    bool satisfied = false;
    std::string reason;
};

ConstraintResult multiplicity_two_constraints(const ConfigName& name, const AttachmentProfile& p,
                                              const std::map<Role, std::int64_t>& weights);

std::optional<int> max_attachment_multiplicity_bound(const ConfigName& name);

}  // namespace ratsing
