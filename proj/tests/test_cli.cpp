#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPCLASS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/spclass_cli_") + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("validate subcommand and exit codes") {
    std::string good = write_temp("good.json",
                                  R"({"d":[1,2],"weights":[[0,-1],[1,-2]]})");
    auto res = run_cli("validate " + good);
    CHECK(res.exit_code == 0);
    std::string bad = write_temp("bad.json", R"({"d":[2,2,2],"weights":[[1,-1,-1]]})");
    CHECK(run_cli("validate " + bad).exit_code == 2);
    CHECK(run_cli("validate /nonexistent.json").exit_code == 2);
}

TEST_CASE("hull subcommand") {
    std::string f = write_temp("fano3.json",
                               R"({"d":[1,2,2],"weights":[[0,-1,0],[0,0,-1],[1,-2,0],[1,0,-2]]})");
    auto res = run_cli("--format json hull " + f);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"dim\": 2") != std::string::npos);
}

TEST_CASE("classify fano and standing assumption exit code") {
    std::string f = write_temp("fano2.json", R"({"d":[1,2],"weights":[[0,-1],[1,-2]]})");
    auto res = run_cli("classify " + f);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("FANO_CASE") != std::string::npos);
    std::string flat = write_temp("flat.json",
                                  R"({"d":[2,2,2],"weights":[[-1,0,0],[0,-1,0]]})");
    CHECK(run_cli("classify " + flat).exit_code == 3);
}

TEST_CASE("solve and verify round-trip through files") {
    std::string f = write_temp(
        "fano2a.json",
        R"({"d":[1,2],"weights":[[0,-1],[1,-2]],"A":{"0,-1":"1","1,-2":"-0.5"}})");
    auto solved = run_cli("--format json solve " + f);
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("SOLVED") != std::string::npos);
    std::string sol = write_temp("sol.json", solved.out);
    auto verified = run_cli("--format json verify " + f + " --solution " + sol);
    CHECK(verified.exit_code == 0);
    CHECK(verified.out.find("true") != std::string::npos);
}

TEST_CASE("catalog filter and round-trip") {
    auto res = run_cli("catalog --filter Tr*");
    CHECK(res.exit_code == 0);
    int rows = 0;
    std::istringstream is(res.out);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("Tr", 0) == 0) ++rows;
    CHECK(rows == 28);
    auto js = run_cli("--format json catalog --filter H1");
    CHECK(js.out.find("\"tag\": \"H1\"") != std::string::npos);
}

TEST_CASE("regress subcommand filters and succeeds") {
    auto res = run_cli("regress --scenario fano-r2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("identical runs produce identical bytes") {
    std::string f = write_temp("fano3b.json",
                               R"({"d":[1,2,2],"weights":[[0,-1,0],[0,0,-1],[1,-2,0],[1,0,-2]]})");
    auto a = run_cli("--format json --seed 7 classify " + f);
    auto b = run_cli("--format json --seed 7 classify " + f);
    CHECK(a.out == b.out);
}
