// End-to-end checks of the CLI binary: exit codes, error JSON, lseries output.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

#ifndef FROBRES_CLI_PATH
#define FROBRES_CLI_PATH "frobres"
#endif

const fs::path g_dir = [] {
    fs::path d = fs::temp_directory_path() / "frobres_cli_tests";
    fs::create_directories(d);
    return d;
}();

int run(const std::string& args, const std::string& tag) {
    std::string cmd = std::string(FROBRES_CLI_PATH) + " " + args + " >" +
                      (g_dir / (tag + ".out")).string() + " 2>" + (g_dir / (tag + ".err")).string();
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("exit codes and machine-readable errors") {
    // non-squarefree polynomial: bad input, code 2
    CHECK(run("analyze --poly 1,2,1 --group \"(1,2)\"", "sq") == 2);
    auto err = nlohmann::json::parse(slurp(g_dir / "sq.err"));
    CHECK(err["error"]["code"] == 2);

    // wrong group for the canonical root order: math inconsistency, code 3
    CHECK(run("analyze --poly 1,0,0,-3,2,1 --group \"(1,2,3,4,5);(2,5)(3,4)\" --h 0,1", "wg") == 3);
    err = nlohmann::json::parse(slurp(g_dir / "wg.err"));
    CHECK(err["error"]["code"] == 3);
    CHECK(std::string(err["error"]["message"]).find("inconsistent") != std::string::npos);

    // group cap exceeded: code 4
    CHECK(run("analyze --poly 1,0,0,-3,2,1 --group \"(1,2,4,5,3);(2,3)(4,5)\" --group-cap 5", "cap") == 4);

    // corrupt table: code 2
    std::ofstream(g_dir / "bad.json") << "{\"format_version\":1}";
    CHECK(run("frob " + (g_dir / "bad.json").string() + " --primes 2..10", "corrupt") == 2);

    // malformed prime range
    CHECK(run("frob " + (g_dir / "bad.json").string() + " --primes x..y", "range") == 2);
}

TEST_CASE("analyze + frob + lseries end to end") {
    fs::path table = g_dir / "s3.json";
    CHECK(run("analyze --poly -1,-1,0,1 --group \"(1,2);(1,2,3)\" --h 0,1 --out " + table.string(),
              "analyze") == 0);

    CHECK(run("frob " + table.string() + " --primes 2..100", "frob") == 0);
    std::istringstream lines(slurp(g_dir / "frob.out"));
    std::string line;
    int classified = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("p"));
        if (j["status"] == "good") ++classified;
    }
    CHECK(classified == 24); // 25 primes below 100, p = 23 ramified

    CHECK(run("verify " + table.string() + " --primes 2..3000", "verify") == 0);

    std::ofstream(g_dir / "chi.json")
        << R"x({"dimension": 2, "values": {"()": ["2","0"], "(2,3)": ["0","0"], "(1,2,3)": ["-1","0"]}})x";
    CHECK(run("lseries " + table.string() + " --character " + (g_dir / "chi.json").string() +
                  " --N 50",
              "lseries") == 0);
    auto a = nlohmann::json::parse(slurp(g_dir / "lseries.out"));
    REQUIRE(a.size() == 50);
    CHECK(a[0] == "1");
    CHECK(a[1] == "-1"); // a_2: x^3-x-1 is irreducible mod 2, a 3-cycle
    CHECK(a[45] == "0"); // a_46 = a_2 a_23, and the factor at 23 is omitted

    // user-supplied factor at the ramified prime 23 (the level-23 form has a_23 = 1)
    std::ofstream(g_dir / "ram.json") << R"x({"23": ["1","-1"]})x";
    CHECK(run("lseries " + table.string() + " --character " + (g_dir / "chi.json").string() +
                  " --N 50 --ramified-factors " + (g_dir / "ram.json").string(),
              "lseries2") == 0);
    a = nlohmann::json::parse(slurp(g_dir / "lseries2.out"));
    CHECK(a[22] == "1");
    CHECK(a[45] == "-1"); // a_46 = a_2 a_23 = -1
}

TEST_CASE("non-monic input is rescaled with a notice") {
    CHECK(run("analyze --poly -2,0,3 --group \"(1,2)\" --h 0,1,1 --out " + (g_dir / "nm.json").string(),
              "nonmonic") == 0);
    CHECK(slurp(g_dir / "nonmonic.err").find("monic rescaling") != std::string::npos);
    auto j = nlohmann::json::parse(slurp(g_dir / "nm.json"));
    // 3x^2 - 2 becomes x^2 - 6
    CHECK(j["f"] == nlohmann::json::array({"-6", "0", "1"}));
}
