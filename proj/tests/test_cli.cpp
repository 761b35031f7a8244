#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "gal/groups.hpp"
#include "gal/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI under GAL_BIN with the given arguments; captures stdout.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("GAL_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env_prefix + " \"" + std::string(bin) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("verification subcommands exit 0 and report pass", "[cli]") {
    for (const std::string& args : {
             std::string("nonhopf --p 2 --radius 2"),
             std::string("lef --p 2 --radius 2"),
             std::string("sofic --p 2 --radius 1 --eps 0"),
             std::string("microstates-g --p 2 --n 3 --eps 0"),
             std::string("microstates-k --p 2 --n 2 --eps 0.1"),
             std::string("char-approx --p 2 --k 1 --eps 0.5"),
             std::string("cocycle-check --p 2 --group g0 --trials 300"),
             std::string("cocycle-check --p 2 --group k0 --ring zmod:13 --trials 200"),
             std::string("cocycle-check --p 3 --group heis --ring zmod:3 --trials 200"),
             std::string("marked-dist --pair z-vs-z2 --kmax 3"),
             std::string("marked-dist --pair g-vs-lef --p 2 --kmax 2"),
         }) {
        INFO(args);
        RunResult r = run_cli(args);
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == 1);
        CHECK(j["report"]["pass"] == true);
    }
}

TEST_CASE("char-approx report carries the frozen solution", "[cli]") {
    RunResult r = run_cli("char-approx --p 2 --k 1 --eps 0.5");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["q"] == 13);
    CHECK(j["report"]["residues"] == nlohmann::json::array({1, 0}));
}

TEST_CASE("negative controls exit 1", "[cli]") {
    CHECK(run_cli("lef --p 2 --radius 1 --sabotage small-n").exit_code == 1);
    CHECK(run_cli("microstates-k --p 2 --n 2 --eps 0.1 --sabotage trivial-chars").exit_code == 1);
}

TEST_CASE("usage and budget errors exit 2", "[cli]") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("lef --no-such-flag 1").exit_code == 2);
    CHECK(run_cli("microstates-g --p 2 --n 6 --eps 0 --budget 100").exit_code == 2);
    CHECK(run_cli("microstates-g --p 2 --n 6 --eps 0", "GAL_BUDGET=100").exit_code == 2);
    CHECK(run_cli("char-approx --p 2 --k 1 --eps 0", "").exit_code == 2);  // eps out of range
}

TEST_CASE("reports are byte-identical for the same config and seed", "[cli]") {
    for (const std::string& args : {
             std::string("microstates-k --p 2 --n 2 --eps 0.1"),
             std::string("cocycle-check --p 2 --group g0 --trials 100 --seed 7"),
             std::string("char-approx --p 2 --k 2 --eps 0.1"),
         }) {
        INFO(args);
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("marked-set files", "[cli]") {
    const char* data = std::getenv("GAL_DATA");
    REQUIRE(data != nullptr);

    SECTION("the shipped defaults match the built-ins") {
        auto g_lines = gal::read_literal_lines(std::string(data) + "/marked_g_default.txt");
        CHECK(g_lines == gal::g_default_marked_literals());
        auto k_lines = gal::read_literal_lines(std::string(data) + "/marked_k_default.txt");
        CHECK(k_lines == gal::k_default_marked_literals(2));
    }

    SECTION("a custom marked set drives the pipeline") {
        std::string path = "cli_test_marked_set.txt";
        {
            std::ofstream f(path);
            f << "# two-element set\ne[1,5](t^-1)\ne[1,2](1)\n";
        }
        RunResult r = run_cli("lef --p 2 --radius 2 --marked-set " + path);
        CHECK(r.exit_code == 0);
        std::remove(path.c_str());
    }

    SECTION("unparsable marked set exits 2") {
        std::string path = "cli_test_bad_set.txt";
        {
            std::ofstream f(path);
            f << "e[5,1](t)\n";
        }
        CHECK(run_cli("lef --p 2 --radius 1 --marked-set " + path).exit_code == 2);
        std::remove(path.c_str());
    }
}

TEST_CASE("--out writes the same report to a file", "[cli]") {
    std::string path = "cli_test_report.json";
    RunResult direct = run_cli("char-approx --p 2 --k 1 --eps 0.5");
    RunResult filed = run_cli("char-approx --p 2 --k 1 --eps 0.5 --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content == direct.out);
    std::remove(path.c_str());
}
