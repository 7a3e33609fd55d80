#include "ratsing/cli.hpp"

#include "ratsing/central.hpp"
#include "ratsing/classify.hpp"
#include "ratsing/fundamental.hpp"
#include "ratsing/lattice.hpp"
#include "ratsing/model.hpp"
#include "ratsing/rdp.hpp"
#include "ratsing/verify.hpp"

#include "CLI11.hpp"

#include <ostream>

namespace ratsing {

namespace {

struct Options {
    std::string input;
    bool trace = false;
    int central = -1;
    bool dot = false;
    int degree = 0;
    bool minimal = false;
    bool almost_reduced = false;
    bool single_nonreduced = false;
    bool count_only = false;
    EnumerationCaps caps;
    int section = 0;
    bool verbose = false;
};

int cmd_check(const Options& o, std::ostream& out) {
    auto g = load_graph(o.input);
    out << g.size() << " vertices, " << g.edges().size() << " edges" << (g.is_tree() ? ", tree" : "") << '\n';
    auto d = check_negative_definite(g);
    if (d.is_negative_definite)
        out << "negative definite\n";
    else
        out << "not negative definite (leading minor " << d.failing_minor.value_or(0) << ")\n";
    auto rep = is_rational(g);
    out << describe(rep) << '\n';
    if (rep.is_rational) {
        auto z = fundamental_cycle(g).first;
        out << "degree " << -intersect(g, z, z) << ", canonical degree " << canonical_degree(g, z) << ", complexity "
            << complexity(g) << '\n';
    }
    return rep.is_rational ? 0 : 1;
}

int cmd_fc(const Options& o, std::ostream& out) {
    auto g = load_graph(o.input);
    if (o.central >= 0) {
        if (o.central >= g.size()) throw GraphError("no vertex " + std::to_string(o.central));
        auto t = central_fundamental_cycle(g, o.central);
        out << render_central(g, t);
        out << "Z = " << format_cycle(t.final) << '\n';
        return 0;
    }
    auto [z, t] = fundamental_cycle(g);
    if (o.trace) out << render_trace(t);
    for (int i = 0; i < g.size(); ++i) {
        out << i << ' ' << z[i];
        if (!g.vertex(i).label.empty()) out << " @" << g.vertex(i).label;
        out << '\n';
    }
    auto rep = is_rational(g);
    out << "Z^2 = " << intersect(g, z, z) << ", p_a(Z) = " << genus(g, z) << '\n';
    if (rep.is_rational)
        out << "degree " << -intersect(g, z, z) << '\n';
    else
        out << describe(rep) << '\n';
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
    auto g = load_graph(o.input);
    auto comps = find_rdp_components(g);
    if (comps.empty()) out << "no RDP components\n";
    for (const auto& c : comps) {
        out << dynkin_name(c) << " {";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? " " : "") << c.vertices[i];
        out << "}";
        auto cls = classify_component(g, c);
        if (!cls) {
            out << ": not an almost reduced configuration (" << cls.rejection << ")\n";
            continue;
        }
        out << ": " << cls.name->render();
        for (auto [role, v] : cls.roles) {
            if (role == Role::None)
                out << " at " << v;
            else
                out << ' ' << role_letter(role) << "->" << v;
        }
        out << '\n';
        for (Role role : family_roles(cls.name->family)) {
            ConfigName named = *cls.name;
            named.role = role;
            try {
                auto seq = predicted_multiplicity_sequence(named, role);
                out << "  sequence";
                if (role != Role::None) out << " at " << role_letter(role);
                out << ' ' << seq.render() << '\n';
            } catch (const RoleError&) {
            }
        }
        if (auto eq = equivalent_configuration(*cls.name)) {
            out << "  equivalent to";
            for (std::size_t i = 0; i < eq->size(); ++i) out << (i ? " + " : " ") << (*eq)[i].render();
            out << '\n';
        }
    }
    return 0;
}

int cmd_canonical_model(const Options& o, std::ostream& out) {
    auto m = canonical_model(load_graph(o.input));
    out << (o.dot ? model_dot(m) : render_model(m));
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    std::size_t count = 0;
    auto sink = [&](const ResolutionGraph& g) {
        ++count;
        if (!o.count_only) out << "# graph " << count << '\n' << render_graph(g) << '\n';
    };
    if (o.minimal) {
        for (const auto& g : enumerate_minimal_representatives(o.degree)) sink(g);
    } else if (o.almost_reduced) {
        enumerate_almost_reduced(o.degree, o.caps, sink);
    } else {
        enumerate_single_nonreduced(o.degree, o.caps, sink);
    }
    out << count << " graphs\n";
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<int> ids;
    if (o.section) {
        ids = criteria_in_group(o.section);
    } else {
        for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
    }
    int failed = 0;
    for (const auto& r : run_criteria(ids, true)) {
        failed += !r.passed;
        out << render_result(r, o.verbose);
    }
    out << (ids.size() - failed) << "/" << ids.size() << " checks pass\n";
    return failed ? 1 : 0;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
    out << graph_dot(load_graph(o.input));
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Rational surface singularity graphs"};
    app.require_subcommand(1, 1);

    auto input = [&](CLI::App* sub) { sub->add_option("graph", o.input, "graph file")->required(); };

    auto* check = app.add_subcommand("check", "definiteness and rationality report");
    input(check);

    auto* fc = app.add_subcommand("fc", "fundamental cycle");
    input(fc);
    auto* trace_flag = fc->add_flag("--trace", o.trace, "print the computation sequence");
    fc->add_option("--central", o.central, "stage-by-stage computation around this vertex")
        ->check(CLI::NonNegativeNumber)
        ->excludes(trace_flag);

    auto* classify = app.add_subcommand("classify", "RDP components, configuration names and sequences");
    input(classify);

    auto* model = app.add_subcommand("canonical-model", "dual hypergraph of the canonical model");
    input(model);
    model->add_flag("--dot", o.dot, "DOT output");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate graphs of a given degree");
    enumerate->add_option("--degree", o.degree, "degree m")->required()->check(CLI::Range(3, 12));
    auto* kind = enumerate->add_option_group("kind");
    kind->add_flag("--minimal", o.minimal, "minimal representatives of the hypertrees");
    kind->add_flag("--almost-reduced", o.almost_reduced, "almost reduced fundamental cycle");
    kind->add_flag("--single-nonreduced", o.single_nonreduced, "one non-reduced non-(-2)");
    kind->require_option(1);
    enumerate->add_option("--max-chain", o.caps.max_chain, "longest (-2) chain in a configuration")
        ->capture_default_str();
    enumerate->add_option("--max-components", o.caps.max_components_per_vertex, "configurations per vertex")
        ->capture_default_str();
    enumerate->add_option("--max-weight", o.caps.max_weight, "largest b")->capture_default_str();
    enumerate->add_option("--max-vertices", o.caps.max_vertices, "non-(-2) vertices")->capture_default_str();
    enumerate->add_flag("--count-only", o.count_only, "print only the count");

    auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
    verify->add_option("--section", o.section, "run one group of checks")
        ->check(CLI::IsMember(known_groups()));
    verify->add_flag("--verbose", o.verbose, "details for passing checks too");

    auto* dot = app.add_subcommand("export-dot", "DOT drawing of the graph");
    input(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*fc) return cmd_fc(o, out);
        if (*classify) return cmd_classify(o, out);
        if (*model) return cmd_canonical_model(o, out);
        if (*enumerate) {
            o.caps.validate();
            return cmd_enumerate(o, out);
        }
        if (*verify) return cmd_verify(o, out);
        if (*dot) return cmd_export_dot(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace ratsing
