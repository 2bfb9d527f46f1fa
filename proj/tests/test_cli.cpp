#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(SGDS_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.output.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) {
    return std::string(SGDS_DATA_DIR) + "/" + name;
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze reports the dynamics table") {
    RunResult r = run("analyze " + data("tail3.sgds"));
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "orbit classes: 1"));
    CHECK(has(r.output, "Per: {a b c}"));
    CHECK(has(r.output, "aperiodic irreducible sets: 0"));
    CHECK(has(r.output, "invariant sets: 2"));

    r = run("analyze " + data("line.sgds"));
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "essentially free: yes"));
}

TEST_CASE("analyze rejects malformed input") {
    RunResult r = run("analyze /dev/null");
    CHECK(r.exit_code == 2);
    r = run("analyze " + data("no_such_file.sgds"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("primes lists the catalog") {
    RunResult r = run("primes " + data("tail3.sgds") + " --max-denominator 6");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "turn 0/1"));
    CHECK(has(r.output, "turn 1/6"));
    CHECK(has(r.output, "turn 1/5"));
    CHECK(has(r.output, "turn 1/4"));
    CHECK(has(r.output, "total: 4"));

    r = run("primes " + data("line.sgds"));
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "gauge prime"));
    CHECK(has(r.output, "total: 1"));

    r = run("primes " + data("fix.sgds") + " --max-denominator 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "\"schema\": 1"));
    CHECK(has(r.output, "\"turn\": \"1/2\""));
}

TEST_CASE("admissible verdicts and exit codes") {
    RunResult r = run("admissible " + data("tail3.sgds") + " " + data("tail3_coset.fibers"));
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "admissible"));

    // a non-admissible file: proper fiber not closed under zeta_3
    std::string bad = "/tmp/bad_fibers_test.fibers";
    FILE* f = fopen(bad.c_str(), "w");
    fputs("class a points 0/1\n", f);
    fclose(f);
    r = run("admissible " + data("tail3.sgds") + " " + bad);
    CHECK(r.exit_code == 1);
    CHECK(has(r.output, "clause 3"));
}

TEST_CASE("witness command emits a verified program") {
    RunResult r = run("witness " + data("tail3.sgds") + " " + data("tail3_coset.fibers") +
                      " --point a --gamma 1/6 --json");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "\"mode\": \"exact_coset\""));
    CHECK(has(r.output, "\"pass\": true"));
    CHECK(has(r.output, "\"schema\": 1"));

    // floats are rejected with a pointer to exact arithmetic
    r = run("witness " + data("tail3.sgds") + " " + data("tail3_coset.fibers") +
            " --point a --gamma 0.5");
    CHECK(r.exit_code == 2);
    CHECK(has(r.output, "exact"));

    // separating an interior parameter fails loudly
    r = run("witness " + data("tail3.sgds") + " " + data("tail3_coset.fibers") +
            " --point a --gamma 1/3");
    CHECK(r.exit_code != 0);
}

TEST_CASE("verify runs the fuzz suite") {
    RunResult r = run("verify --fuzz --seed 7 --trials 100");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "pass: 100 trials, 0 disagreements"));
    r = run("verify --seed 3 --trials 20 --json");
    CHECK(r.exit_code == 0);
    CHECK(has(r.output, "\"pass\": true"));
}
