#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circdiam/certificate.hpp"
#include "circdiam/cli.hpp"
#include "circdiam/walks.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace circdiam;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("report JSON for u4") {
    const auto r = run({"report", "@u4", "--json"});
    REQUIRE(r.code == exit_code::ok);
    const auto doc = json::parse(r.out);
    CHECK(doc["dim"] == 4);
    CHECK(doc["facets"] == 8);
    CHECK(doc["vertices"] == 15);
    CHECK(doc["edges"] == 24);
    CHECK(doc["bounded"] == false);
    CHECK(doc["graph_diameter"] == 5);
    CHECK(doc["circuit_diameter"] == 4);
    CHECK(doc["hirsch_bound"] == 4);
    CHECK(doc["graph_hirsch_satisfied"] == false);
    CHECK(doc["circuit_hirsch_satisfied"] == true);
}

TEST_CASE("report text for the cube") {
    const auto r = run({"report", "@cube(3)"});
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out.find("vertices          8") != std::string::npos);
    CHECK(r.out.find("circuit diameter  3") != std::string::npos);
    CHECK(r.out.find("circuit hirsch    yes") != std::string::npos);
}

TEST_CASE("unresolved circuit diameter is reported, not guessed") {
    const auto r = run({"report", "@u4", "--json", "--max-depth", "2"});
    REQUIRE(r.code == exit_code::ok);
    const auto doc = json::parse(r.out);
    CHECK(doc["circuit_diameter"].is_null());
    CHECK(doc["circuit_hirsch_satisfied"].is_null());
    CHECK(run({"diameter", "@u4", "--max-depth", "2"}).out.rfind("> 2", 0) == 0);
}

TEST_CASE("listing commands") {
    const auto v = run({"vertices", "@cube(2)"});
    CHECK(v.code == exit_code::ok);
    CHECK(v.out.find("V12 (0,0)") != std::string::npos);

    const auto c = run({"circuits", "@simplex(2)"});
    CHECK(c.out.rfind("3 circuits (6 signed)", 0) == 0);
    CHECK(c.out.find("(1,-1)") != std::string::npos);

    const auto cj = json::parse(run({"circuits", "@q4_sym", "--json"}).out);
    CHECK(cj.size() == 84);

    const auto s = run({"skeleton", "@simplex(3)"});
    CHECK(s.out.rfind("4 vertices, 6 edges", 0) == 0);
}

TEST_CASE("distance and certificate verification") {
    CHECK(run({"distance", "@u4", "--from", "V5678", "--to", "V1234", "--mode", "graph"}).out == "5\n");
    const auto path = temp_path("circdiam_cli_cert.json");
    const auto r = run({"distance", "@u4", "--from", "V5678", "--to", "V1234", "--emit-cert", path});
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out == "4\n");

    const auto ok = run({"verify-walk", path});
    CHECK(ok.code == exit_code::ok);
    CHECK(ok.out == "ok: 4-step circuit walk verified\n");

    auto cert = read_certificate(path);
    cert.steps[0].length /= 2;
    write_certificate(cert, path);
    const auto bad = run({"verify-walk", path, "--json"});
    CHECK(bad.code == exit_code::check_failed);
    CHECK(json::parse(bad.out)["violation"]["kind"] == to_string(Violation::non_maximal_step));
    std::filesystem::remove(path);
}

TEST_CASE("diameter JSON names a witness pair") {
    const auto doc = json::parse(run({"diameter", "@q4_sym", "--json"}).out);
    CHECK(doc["diameter"] == 3);
    CHECK(doc["witness"]["from"].is_string());
    CHECK(json::parse(run({"diameter", "@q4_sym", "--json", "--mode", "graph"}).out)["diameter"] == 5);
}

TEST_CASE("perturb-check") {
    const auto same = run({"perturb-check", "@q4_sym", "@q4_pert", "--json"});
    CHECK(same.code == exit_code::ok);
    const auto doc = json::parse(same.out);
    CHECK(doc["equivalent"] == true);
    CHECK(doc["circuit_diameters"] == json::array({3, 4}));

    CHECK(run({"perturb-check", "@q4_sym", "@u4"}).code == exit_code::input_error);
    CHECK(run({"perturb-check", "@cube(2)", "@simplex(2)"}).code == exit_code::input_error);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run({"report", "@nonsense"}).code == exit_code::input_error);
    CHECK(run({"report", "/no/such/file.ine"}).code == exit_code::input_error);
    CHECK(run({"distance", "@u4", "--from", "V9999", "--to", "V1234"}).code == exit_code::input_error);
    CHECK(run({"distance", "@u4", "--from", "V5678", "--to", "V1234", "--mode", "taxicab"}).code ==
          exit_code::input_error);
    CHECK(run({"verify-walk", "/no/such/cert.json"}).code == exit_code::input_error);
    CHECK(run({"frobnicate"}).code != exit_code::ok);

    const auto path = temp_path("circdiam_cli_bad.ine");
    {
        std::ofstream f(path);
        f << "dim 2\nineq 1\n1 2\n";
    }
    const auto r = run({"vertices", path});
    CHECK(r.code == exit_code::input_error);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == exit_code::ok); }
