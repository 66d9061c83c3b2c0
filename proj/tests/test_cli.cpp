// Drives the installed binary end to end; the path arrives via QPDUAL_CLI.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "qpd/fixtures.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("QPDUAL_CLI");
    return env ? env : "";
}

CliResult run(const std::string& args) {
    CliResult result;
    std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
        result.output.append(buffer, n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture_file(const std::string& name) {
    std::string path = "cli_" + name + ".qp";
    std::ofstream out(path);
    out << qpd::fixture_text(name);
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("fixture piped into check round-trips") {
    CliResult result = run("fixture dp1 | " + cli_path() + " check --cycle-cover -");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("valid") != std::string::npos);
    CHECK(result.output.find("good potential: yes") != std::string::npos);
}

TEST_CASE("exit codes follow the documented table") {
    std::string dp1 = fixture_file("dp1");
    std::string triangle = fixture_file("triangle");

    CHECK(run("verify -k 1 " + dp1).exit_code == 0);          // agreement
    CHECK(run("verify -k 3 " + dp1).exit_code == 3);          // related arrows
    CHECK(run("dual -k 2 " + triangle).exit_code == 3);       // not good
    CHECK(run("mutate -k 9 " + dp1).exit_code == 2);          // no such vertex
    CHECK(run("member " + triangle + " --elem \"1 b\" --max-len 3").exit_code == 1);
    CHECK(run("member " + triangle + " --elem \"1 b a\" --max-len 3").exit_code == 0);
    CHECK(run("delta --mode bounded --max-len 3 " + triangle).exit_code == 1); // obstruction
    CHECK(run("delta " + dp1).exit_code == 0);
    CHECK(run("frobnicate").exit_code == 2); // usage

    std::ofstream bad("cli_bad.qp");
    bad << "quiver broken\nvertices 2\narrow a 1\n";
    bad.close();
    CHECK(run("check cli_bad.qp").exit_code == 2);
}

TEST_CASE("json output is byte-deterministic") {
    std::string dp1 = fixture_file("dp1");
    for (const std::string& args :
         {"--format json mutate -k 1 " + dp1, "--format json verify -k 1 " + dp1,
          "--format json delta --mode bounded --max-len 4 " + dp1,
          "--format json relations " + dp1}) {
        CliResult first = run(args);
        CliResult second = run(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
}

TEST_CASE("mutate on the triangle reflects and empties the potential") {
    std::string triangle = fixture_file("triangle");
    CliResult result = run("mutate -k 2 " + triangle);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("arrow a* 2 1") != std::string::npos);
    CHECK(result.output.find("arrow b* 3 2") != std::string::npos);
    CHECK(result.output.find("potential\nend") != std::string::npos);
}

TEST_CASE("dot export goes to stdout") {
    std::string triangle = fixture_file("triangle");
    CliResult result = run("dot " + triangle);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("digraph \"triangle\"") != std::string::npos);
    CHECK(result.output.find("1 -> 2 [label=\"a\"];") != std::string::npos);
}

} // TEST_SUITE
