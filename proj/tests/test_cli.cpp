#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wheelcheck/cli.hpp"
#include "wheelcheck/enumerate.hpp"
#include "wheelcheck/graph.hpp"
#include "wheelcheck/poly.hpp"
#include "wheelcheck/wheels.hpp"

using namespace wheelcheck;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    auto dir = fs::temp_directory_path() / "wheelcheck_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_wheel_file(const std::string& spec, const std::string& name) {
    auto built = build_wheel(WheelSpec::parse(spec));
    auto path = temp_file(name);
    std::ofstream f(path);
    write_ptri(f, built.graph);
    return path.string();
}

}  // namespace

TEST_CASE("check-extend verdicts and json schema") {
    auto w5 = write_wheel_file("O5", "w5.ptri");
    auto r = run_cli({"check-extend", "--graph", w5, "--path", "4", "0", "1", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["graph"] == w5);
    CHECK(j["path"] == std::vector<int>{4, 0, 1});
    CHECK(j["outcome"] == "blocked");
    CHECK(j["witness"].is_null());
    CHECK(j["wheel"]["components"].size() == 1);

    auto w4 = write_wheel_file("O4", "w4.ptri");
    auto r2 = run_cli({"check-extend", "--graph", w4, "--path", "3", "0", "1", "--json"});
    CHECK(r2.code == 0);
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["outcome"] == "extendable");
    CHECK(j2["wheel"].is_null());
    CHECK(j2["witness"]["coefficient"].is_string());

    // bad path -> precondition exit code
    auto r3 = run_cli({"check-extend", "--graph", w5, "--path", "3", "0", "1"});
    CHECK(r3.code == 1);
}

TEST_CASE("gen-wheel round trip preserves the canonical code") {
    for (const std::string spec : {"B5", "O6", "B4+O5", "B3+O5+B4"}) {
        auto r = run_cli({"gen-wheel", spec});
        REQUIRE(r.code == 0);
        std::istringstream is(r.out);
        auto parsed = read_ptri(is);
        auto built = build_wheel(WheelSpec::parse(spec));
        CHECK(canonical_code(parsed) == canonical_code(built.graph));
    }
}

TEST_CASE("enumerate stream reparses") {
    auto r = run_cli({"enumerate", "--outer", "4", "--labeled"});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    auto graphs = read_ptri_stream(is);
    CHECK(graphs.size() == 2);
    CHECK(r.err.find("2 instance(s)") != std::string::npos);
    // reparsed stream carries the same canonical codes
    EnumerateOptions opts;
    opts.max_interior = 0;
    opts.dedup = false;
    auto direct = enumerate_near_triangulations(4, opts);
    REQUIRE(direct.size() == graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i)
        CHECK(canonical_code(graphs[i]) == canonical_code(direct[i]));

    auto rd = run_cli({"enumerate", "--outer", "6"});
    std::istringstream isd(rd.out);
    CHECK(read_ptri_stream(isd).size() == 3);

    // budget applies
    auto rb = run_cli({"--budget", "3", "enumerate", "--outer", "6", "--labeled"});
    CHECK(rb.code == 1);
}

TEST_CASE("at-number and expand") {
    auto k4 = write_wheel_file("O3", "k4.ptri");
    auto r = run_cli({"at-number", "--graph", k4});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");

    auto t = write_wheel_file("B3", "triangle.ptri");
    auto e = run_cli({"expand", "--graph", t});
    CHECK(e.code == 0);
    // six monomials, lexicographically sorted dump
    std::istringstream is(e.out);
    auto terms = parse_polynomial_dump(is, 3);
    CHECK(terms.size() == 6);

    auto ec = run_cli({"expand", "--graph", t, "--caps", "1,1,1"});
    std::istringstream isc(ec.out);
    CHECK(parse_polynomial_dump(isc, 3).empty());
}

TEST_CASE("verify-lemma and exit codes") {
    auto good = run_cli({"verify-lemma", "broken5"});
    CHECK(good.code == 0);
    CHECK(good.out.find("all pass") != std::string::npos);

    auto unknown = run_cli({"verify-lemma", "nonsense"});
    CHECK(unknown.code == 1);

    // sharded run merges deterministically
    auto sharded = run_cli({"--jobs", "3", "verify-lemma", "signsymmetry", "--k", "1..4", "--json"});
    CHECK(sharded.code == 0);
    auto j = nlohmann::json::parse(sharded.out);
    CHECK(j["pass"] == true);
    CHECK(j["instances"].size() == 4);
}

TEST_CASE("short-cycle and error codes") {
    auto k4 = write_wheel_file("O3", "k4b.ptri");
    auto ok = run_cli({"short-cycle", "--graph", k4, "--json"});
    CHECK(ok.code == 0);

    // universal interior vertex on a 5-cycle: precondition violation
    auto w5 = write_wheel_file("O5", "w5b.ptri");
    auto bad = run_cli({"short-cycle", "--graph", w5});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("PreconditionViolated") != std::string::npos);
}

TEST_CASE("cn-check") {
    auto t = write_wheel_file("B3", "tri2.ptri");
    auto r = run_cli({"--seed", "7", "cn-check", "--graph", t, "--term", "2,1,0", "--trials", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failure(s)") != std::string::npos);
}

TEST_CASE("check-2path via cli") {
    auto b5 = write_wheel_file("B5", "b5.ptri");
    auto r = run_cli({"check-2path", "--graph", b5, "--edge", "0", "1", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["witness"]["exponents"].size() == 5);
}

TEST_CASE("WHEELCHECK_BUDGET env var caps enumeration") {
    setenv("WHEELCHECK_BUDGET", "3", 1);
    auto r = run_cli({"enumerate", "--outer", "6", "--labeled"});
    unsetenv("WHEELCHECK_BUDGET");
    CHECK(r.code == 1);
    CHECK(r.err.find("BoundsExceeded") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"check-extend"}).code == 1);
    CHECK(run_cli({"at-number", "--graph", "/nonexistent/x.ptri"}).code == 1);
}

TEST_CASE("dot export via cli") {
    auto w4 = write_wheel_file("O4", "w4dot.ptri");
    auto dot = temp_file("w4.dot").string();
    auto r = run_cli({"check-extend", "--graph", w4, "--path", "3", "0", "1", "--dot", dot});
    CHECK(r.code == 0);
    std::ifstream f(dot);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("color=red") != std::string::npos);
}
