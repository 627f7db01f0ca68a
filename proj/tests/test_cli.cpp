// Exercises the installed command surface end to end through the real
// binary: exit codes, report files, manifest replay determinism.

#define DOCTEST_CONFIG_IMPLEMENT

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

std::string g_cli;

int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + g_cli + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::vector<Json> read_jsonl(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    std::vector<Json> out;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

// Reports with volatile fields (runtimes, timestamps) removed.
Json scrub(Json j) {
    j.erase("runtime_ms");
    return j;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: verify-pde subset, object count and exit code") {
    const fs::path dir = fs::temp_directory_path() / "itl_cli_pde";
    fs::remove_all(dir);
    CHECK(run("--out " + dir.string() + " verify-pde --tags a,f,l") == 0);
    const auto lines = read_jsonl(dir / "pde_report.jsonl");
    REQUIRE(lines.size() == 3);
    for (const auto& l : lines) CHECK(l.at("verdict") == "pass");
    CHECK(fs::exists(dir / "pde_residuals.csv"));
    CHECK(fs::exists(dir / "manifest.json"));
    // loosened budget still passes
    CHECK(run("--out " + dir.string() + " verify-pde --tags l --tol 1e-3") == 0);
}

TEST_CASE("cli: usage errors exit 64") {
    CHECK(run("verify-pde --tags q") == 64);
    CHECK(run("verify-identities --samples 100") == 64);
    CHECK(run("density --t 1") == 64);       // --model required
    CHECK(run("unknown-subcommand") == 64);
}

TEST_CASE("cli: density curve with singular markers") {
    const fs::path dir = fs::temp_directory_path() / "itl_cli_density";
    fs::remove_all(dir);
    CHECK(run("--out " + dir.string() + " density --model cc --t 1 --x -3:3:0.5") == 0);
    const std::string csv = slurp(dir / "density.csv");
    CHECK(csv.find("x,t,density,err_estimate,singular") != std::string::npos);
    CHECK(csv.find(",,,1") != std::string::npos);  // x = 0 row marked singular
    // fbm at x=0: 1/sqrt(2pi)
    CHECK(run("--out " + dir.string() + " density --model fbm:H=0.5 --t 1 --x 0") == 0);
    const std::string point = slurp(dir / "density.csv");
    CHECK(point.find("0.3989422804014327") != std::string::npos);
}

TEST_CASE("cli: sample reproducibility") {
    const fs::path d1 = fs::temp_directory_path() / "itl_cli_s1";
    const fs::path d2 = fs::temp_directory_path() / "itl_cli_s2";
    fs::remove_all(d1);
    fs::remove_all(d2);
    CHECK(run("--out " + d1.string() + " sample --model prodfbm:n=2,H=0.8 --t 1 --n 1000 --seed 7") == 0);
    CHECK(run("--out " + d2.string() + " sample --model prodfbm:n=2,H=0.8 --t 1 --n 1000 --seed 7") == 0);
    CHECK(slurp(d1 / "samples.csv") == slurp(d2 / "samples.csv"));
}

TEST_CASE("cli: moments table with log-space large order") {
    const fs::path dir = fs::temp_directory_path() / "itl_cli_m";
    fs::remove_all(dir);
    CHECK(run("--out " + dir.string() + " moments --chain 0.5,0.5 --k 1,2,3 --t 1 --samples 200000") == 0);
    const std::string csv = slurp(dir / "moments.csv");
    CHECK(csv.find("k,closed_form,mc_estimate,std_error,verdict") != std::string::npos);
    // no overflow at k = 50 (closed form in log space; MC columns irrelevant)
    CHECK(run("--out " + dir.string() + " moments --chain 0.9,0.9 --k 50 --t 1 --samples 10000") == 0);
    const std::string big = slurp(dir / "moments.csv");
    CHECK(big.find("inf") == std::string::npos);
}

TEST_CASE("cli: manifest rerun reproduces reports bit-exactly across thread counts") {
    const fs::path d1 = fs::temp_directory_path() / "itl_cli_r1";
    const fs::path d2 = fs::temp_directory_path() / "itl_cli_r2";
    const fs::path d3 = fs::temp_directory_path() / "itl_cli_r3";
    for (const auto& d : {d1, d2, d3}) fs::remove_all(d);
    CHECK(run("--out " + d1.string() + " verify-identities --tags CC_PRODUCT,J1_PAIR --samples 20000 --seed 42",
              "ITERLAB_THREADS=1") == 0);
    CHECK(run("--out " + d2.string() + " rerun --manifest " + (d1 / "manifest.json").string(),
              "ITERLAB_THREADS=4") == 0);
    CHECK(run("--out " + d3.string() + " rerun --manifest " + (d1 / "manifest.json").string(),
              "ITERLAB_THREADS=1") == 0);
    const auto a = read_jsonl(d1 / "identity_report.jsonl");
    const auto b = read_jsonl(d2 / "identity_report.jsonl");
    const auto c = read_jsonl(d3 / "identity_report.jsonl");
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(scrub(a[i]) == scrub(b[i]));
        CHECK(scrub(a[i]) == scrub(c[i]));
    }
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-iterlab-binary>\n");
        return 2;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    return ctx.run();
}
