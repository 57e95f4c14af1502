#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with stdout+stderr captured to a file.
RunResult run_cli(const std::string& args, const fs::path& dir) {
    const fs::path log = dir / "out.log";
    const std::string cmd = "cd '" + dir.string() + "' && '" + RHOLAB_CLI_PATH + "' " + args +
                            " > out.log 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult res;
#ifdef WIFEXITED
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    res.exit_code = status;
#endif
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    res.output = ss.str();
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("rholab_cli_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("--help lists every subcommand") {
    const fs::path dir = fresh_dir("help");
    const RunResult res = run_cli("--help", dir);
    CHECK(res.exit_code == 0);
    for (const char* name : {"dlog", "collide-stats", "spectrum", "qform", "mixing", "suite"})
        CHECK(res.output.find(name) != std::string::npos);
}

TEST_CASE("dlog recovers a planted exponent") {
    const fs::path dir = fresh_dir("dlog");
    const RunResult res = run_cli("dlog --n 1009 --y 123 --seed 1", dir);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("recovered y = 123") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(dir / "rholab_dlog.json"));
    CHECK(j["recovered_y"] == 123);
    CHECK(j["planted_y"] == 123);
}

TEST_CASE("invalid configuration exits with code 2") {
    const fs::path dir = fresh_dir("badcfg");
    CHECK(run_cli("spectrum --n 101 --y 1", dir).exit_code == 2);          // degenerate multiplier
    CHECK(run_cli("spectrum --n 100 --y 7", dir).exit_code == 2);          // composite n
    CHECK(run_cli("qform --n 10", dir).exit_code == 2);                    // even n
    CHECK(run_cli("dlog", dir).exit_code == 2);                            // missing required flag
    CHECK(run_cli("mixing tv --n 101 --variant nope", dir).exit_code == 2);
}

TEST_CASE("budget exhaustion exits with code 3") {
    const fs::path dir = fresh_dir("budget");
    const RunResult res = run_cli("collide-stats --n 1009 --trials 10 --budget-mult 0.00001", dir);
    CHECK(res.exit_code == 3);
}

TEST_CASE("spectrum emits the documented csv columns") {
    const fs::path dir = fresh_dir("spectrum");
    const RunResult res = run_cli("spectrum --n 101 --y 7 --dense-check", dir);
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(dir / "rholab_spectrum.csv");
    CHECK(csv.rfind("n,y,mu,gap,fitted_c,iterations,residual\n", 0) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "rholab_spectrum.json"));
    CHECK(j["rows"].size() == 1);
    CHECK(j["min_fitted_c"].get<double>() > 0.0);
}

TEST_CASE("mixing lemma writes an audit trail and a summary") {
    const fs::path dir = fresh_dir("lemma");
    const RunResult res = run_cli("mixing lemma --n 101 --y 7 --subsets 10", dir);
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(dir / "rholab_mixing_lemma.csv");
    CHECK(csv.rfind("start,subset_id,count,expected,ratio\n", 0) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "rholab_mixing_lemma.json"));
    CHECK(j["ok"] == true);
    CHECK(j["violations"] == 0);
}

TEST_CASE("identical seeds give byte-identical artifacts") {
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    const std::string args = "collide-stats --n 1009 --trials 25 --seed 9";
    CHECK(run_cli(args, a).exit_code == 0);
    CHECK(run_cli(args, b).exit_code == 0);
    CHECK(slurp(a / "rholab_collide-stats.csv") == slurp(b / "rholab_collide-stats.csv"));
    CHECK(slurp(a / "rholab_collide-stats.json") == slurp(b / "rholab_collide-stats.json"));
}

TEST_CASE("config files round-trip losslessly and override flags") {
    const fs::path dir = fresh_dir("roundtrip");
    CHECK(run_cli("collide-stats --n 1009 --trials 5 --seed 3 --dump-config cfg1.json", dir).exit_code == 0);
    // reload the dumped config; the flag values here are deliberately different
    CHECK(run_cli("collide-stats --n 4999 --trials 99 --seed 8 --config cfg1.json --dump-config cfg2.json",
                  dir).exit_code == 0);
    CHECK(slurp(dir / "cfg1.json") == slurp(dir / "cfg2.json"));

    const auto j = nlohmann::json::parse(slurp(dir / "rholab_collide-stats.json"));
    CHECK(j["n"] == 1009);     // from the config file, not the flags
    CHECK(j["trials"] == 5);
    CHECK(j["seed"] == 3);
}

TEST_CASE("qform subcommand writes certificate audits per n") {
    const fs::path dir = fresh_dir("qform");
    const RunResult res = run_cli("qform --n 21 --n 101", dir);
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(dir / "rholab_qform_certificate_n21.csv"));
    CHECK(fs::exists(dir / "rholab_qform_certificate_n101.csv"));
    const auto j = nlohmann::json::parse(slurp(dir / "rholab_qform.json"));
    CHECK(j["all_ok"] == true);
    CHECK(j["rows"].size() == 2);
}

TEST_CASE("format flag narrows the artifacts") {
    const fs::path dir = fresh_dir("format");
    CHECK(run_cli("collide-stats --n 1009 --trials 5 --format csv", dir).exit_code == 0);
    CHECK(fs::exists(dir / "rholab_collide-stats.csv"));
    CHECK_FALSE(fs::exists(dir / "rholab_collide-stats.json"));
}

TEST_CASE("suite summary is byte-identical across reruns") {
    const fs::path dir = fresh_dir("suite");
    REQUIRE(run_cli("suite --seed 1 --out-prefix first", dir).exit_code == 0);
    REQUIRE(run_cli("suite --seed 1 --out-prefix second", dir).exit_code == 0);
    CHECK(slurp(dir / "first.json") == slurp(dir / "second.json"));

    const auto j = nlohmann::json::parse(slurp(dir / "first.json"));
    CHECK(j["all_pass"] == true);
    CHECK(j["criteria"].size() == 8);  // one entry per criterion
}
