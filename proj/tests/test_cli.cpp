#include "doctest.h"
#include "helpers.hpp"

#include "ratsing/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing_support;

namespace {

struct Run {
    int status = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ratsing");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int status = ratsing::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string temp_graph(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("ratsing_cli_" + name + ".graph");
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("fc on the degree-37 example") {
    auto r = run({"fc", data_path("karras.graph")});
    CHECK(r.status == 0);
    CHECK(r.out.find("8 10\n") != std::string::npos);
    CHECK(r.out.find("degree 37") != std::string::npos);
    auto t = run({"fc", "--trace", data_path("karras.graph")});
    CHECK(t.out.rfind("start -> ", 0) == 0);
    CHECK(t.out.find("\n+") != std::string::npos);
}

TEST_CASE("fc with a central vertex") {
    auto r = run({"fc", "--central", "0", data_path("e6_witness.graph")});
    CHECK(r.status == 0);
    CHECK(r.out.find("stage 3") != std::string::npos);
    CHECK(r.out.find("Z = 3 ") != std::string::npos);
    CHECK(run({"fc", "--central", "40", data_path("e6_witness.graph")}).status == 2);
    CHECK(run({"fc", "--central", "0", "--trace", data_path("e6_witness.graph")}).status == 2);
}

TEST_CASE("check") {
    auto genus = run({"check", temp_graph("genus", "v 0 2 1\n")});
    CHECK(genus.status == 1);
    CHECK(genus.out.find("not rational: genus weight") != std::string::npos);
    auto star = run({"check", temp_graph("star", "v 0 2\nv 1 3\nv 2 3\nv 3 3\nv 4 3\ne 0 1\ne 0 2\ne 0 3\ne 0 4\n")});
    CHECK(star.status == 1);
    CHECK(star.out.find("Laufer violation") != std::string::npos);
    auto k = run({"check", data_path("karras.graph")});
    CHECK(k.status == 0);
    CHECK(k.out.find("degree 37, canonical degree 35, complexity 6") != std::string::npos);
}

TEST_CASE("input errors") {
    auto bad = run({"check", temp_graph("dangling", "v 0 3\ne 0 4\n")});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"check", "/nonexistent/file.graph"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
}

TEST_CASE("enumerate") {
    auto r = run({"enumerate", "--degree", "4", "--minimal"});
    CHECK(r.status == 0);
    CHECK(r.out.find("2 graphs") != std::string::npos);
    CHECK(r.out.find("# graph 2") != std::string::npos);
    auto c = run({"enumerate", "--degree", "3", "--almost-reduced", "--max-chain", "3", "--max-components", "2",
                  "--count-only"});
    CHECK(c.status == 0);
    CHECK(c.out.find("# graph") == std::string::npos);
    CHECK(c.out.find(" graphs") != std::string::npos);
    CHECK(run({"enumerate", "--degree", "4"}).status == 2);
    CHECK(run({"enumerate", "--degree", "4", "--minimal", "--almost-reduced"}).status == 2);
    CHECK(run({"enumerate", "--degree", "4", "--single-nonreduced", "--max-chain", "0"}).status == 2);
}

TEST_CASE("classify and canonical model") {
    auto r = run({"classify", data_path("e6_witness.graph")});
    CHECK(r.status == 0);
    CHECK(r.out.find("E[6]^{2} at 0") != std::string::npos);
    CHECK(r.out.find("sequence (2,2,0)") != std::string::npos);
    auto m = run({"canonical-model", data_path("karras.graph")});
    CHECK(m.out.find("b=3 z=10") != std::string::npos);
    auto d = run({"canonical-model", "--dot", data_path("karras.graph")});
    CHECK(d.out.rfind("graph model {", 0) == 0);
}

TEST_CASE("export-dot") {
    auto r = run({"export-dot", data_path("minimal/m5_tjoint333.graph")});
    CHECK(r.status == 0);
    CHECK(r.out.find("shape=circle") != std::string::npos);
    CHECK(r.out.find("shape=box, style=filled") != std::string::npos);
}

TEST_CASE("verify-paper groups") {
    auto r = run({"verify-paper", "--section", "5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS criterion 2") != std::string::npos);
    CHECK(run({"verify-paper", "--section", "4"}).status == 2);
}
