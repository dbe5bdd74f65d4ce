#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dbo/initial_data.hpp"
#include "dbo/labcli/config.hpp"
#include "dbo/labcli/manifest.hpp"
#include "dbo/labcli/report.hpp"
#include "dbo/labcli/scenarios.hpp"
#include "dbo/labcli/snapshot.hpp"

using namespace dbo;
using namespace dbo::labcli;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("dbolab_test_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("config parsing: defaults and validation") {
    const RunConfig cfg = parse_config_text(R"({"scenario":"kernel-bounds","a":0.5})");
    CHECK(cfg.scenario == "kernel-bounds");
    CHECK(cfg.a == 0.5);
    CHECK(cfg.grid.n_points == 4096);
    CHECK(cfg.stepper.dt == 1e-3);
    CHECK(cfg.seed == 1);

    CHECK_THROWS_AS(parse_config_text("not json"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"kernel-bounds"})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"a":0.5})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"no-such","a":0.5})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"conservation","a":1.5})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"conservation","a":0.5,
        "stepper":{"dt":1.5}})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"conservation","a":0.5,
        "stepper":{"T":-1.0}})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"conservation","a":0.5,
        "grid":{"n_points":7}})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"conservation","a":0.5,
        "data":{"preset":"unknown"}})"), SchemaError);
    CHECK_THROWS_AS(parse_config_text(R"({"scenario":"conservation","a":0.5,
        "data":{"preset":"custom"}})"), SchemaError);
}

TEST_CASE("snapshot round trip is bit-exact and validates its header") {
    const fs::path dir = temp_dir("snapshot");
    auto g = make_grid(64, 8.0);
    auto f = make_gaussian(g, 1.25, 0.7);
    const std::string path = (dir / "f.bin").string();
    write_snapshot(path, f);
    const PhysicalField back = read_snapshot(path);
    CHECK(back.grid->n_points == 64);
    CHECK(back.grid->half_length == 8.0);
    for (int j = 0; j < 64; ++j) CHECK(back.samples[j] == f.samples[j]);

    // header starts with the magic bytes
    const std::string raw = slurp(path);
    CHECK(raw.size() == 8 * 4 + 64 * 8);
    CHECK(raw.substr(0, 8) == "DBOSNAP1");

    put(dir / "bad.bin", std::string("XXXXXXXX") + raw.substr(8));
    CHECK_THROWS(read_snapshot((dir / "bad.bin").string()));
    put(dir / "trunc.bin", raw.substr(0, 40));
    CHECK_THROWS(read_snapshot((dir / "trunc.bin").string()));
}

TEST_CASE("fmt17 prints value-preserving decimal forms") {
    for (double v : {1.0 / 3.0, M_PI, 1.2533141373155003, -7.25e-19}) {
        const std::string s = fmt17(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("kernel-bounds preset: files, checks, verify round trip") {
    const fs::path dir = temp_dir("kernel");
    RunConfig cfg = parse_config_text(R"({"scenario":"kernel-bounds","a":1.0})");
    cfg.output_dir = dir.string();
    CHECK(run_scenario(cfg) == kPass);

    CHECK(fs::exists(dir / "kernel_sup.csv"));
    CHECK(fs::exists(dir / "kernel_l2.csv"));
    CHECK(fs::exists(dir / "kernel_l2_fits.json"));
    CHECK(fs::exists(dir / "manifest.json"));

    const std::string csv = slurp(dir / "kernel_sup.csv");
    CHECK(csv.rfind("a,lambda,t,measured,closed_form,rel_err\n", 0) == 0);

    CHECK(verify_manifest((dir / "manifest.json").string()) == 0);

    // tampering with a stored measurement flips the verify verdict
    std::string man = slurp(dir / "manifest.json");
    const std::string needle = "\"name\": \"kernel_sup_rel_err\",\n      \"pass\": true,\n      \"measured\": ";
    const size_t at = man.find(needle);
    REQUIRE(at != std::string::npos);
    const size_t val_at = at + needle.size();
    const size_t val_end = man.find(',', val_at);
    man = man.substr(0, val_at) + "0.5" + man.substr(val_end);
    put(dir / "tampered.json", man);
    CHECK(verify_manifest((dir / "tampered.json").string()) == 2);
}

TEST_CASE("conservation preset with zero data passes with all-zero series") {
    const fs::path dir = temp_dir("zero");
    RunConfig cfg = parse_config_text(R"({
        "scenario": "conservation", "a": 0.5,
        "grid": {"n_points": 512, "half_length": 100.53096491487338},
        "stepper": {"dt": 1e-3, "T": 0.05},
        "data": {"preset": "zero"}
    })");
    cfg.output_dir = dir.string();
    CHECK(run_scenario(cfg) == kPass);
    const std::string csv = slurp(dir / "conservation.csv");
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line); // header
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // every column after time is zero
        const size_t comma = line.find(',');
        CHECK(line.substr(comma) == ",0,0,0,0,0,0,0,0");
    }
    CHECK(rows > 10);
}

TEST_CASE("schema violations exit with code 3 and still write a manifest") {
    const fs::path dir = temp_dir("schema");
    const fs::path cfg_path = dir / "bad.json";
    put(cfg_path, R"({"scenario":"conservation","output_dir":")" + (dir / "out").string() +
                      R"("})"); // missing "a"
    CHECK(run_config_file(cfg_path.string()) == kSchemaError);
    CHECK(fs::exists(dir / "out" / "manifest.json"));
    const std::string man = slurp(dir / "out" / "manifest.json");
    CHECK(man.find("schema-error") != std::string::npos);
    CHECK(man.find("missing required field 'a'") != std::string::npos);
}

TEST_CASE("failed checks exit with code 2 and a check-failure manifest") {
    // scanning only barrier-side weights makes the saturating check fail
    const fs::path dir = temp_dir("checkfail");
    RunConfig cfg = parse_config_text(R"({
        "scenario": "mean-barrier", "a": 0.5,
        "grid": {"n_points": 2048, "half_length": 402.1238596594935},
        "diagnostics": {"r_list": [2.25, 2.25, 2.25]}
    })");
    cfg.output_dir = dir.string();
    CHECK(run_scenario(cfg) == kCheckFailure);
    const std::string man = slurp(dir / "manifest.json");
    CHECK(man.find("\"status\": \"check-failure\"") != std::string::npos);
    CHECK(verify_manifest((dir / "manifest.json").string()) == 2);
}

TEST_CASE("runtime guard exits with code 4 and records the abort point") {
    const fs::path dir = temp_dir("guard");
    RunConfig cfg = parse_config_text(R"({
        "scenario": "conservation", "a": 0.5,
        "grid": {"n_points": 256, "half_length": 100.53096491487338},
        "stepper": {"dt": 1e-3, "T": 0.01},
        "data": {"preset": "gaussian", "amplitude": 1e200}
    })");
    cfg.output_dir = dir.string();
    CHECK(run_scenario(cfg) == kRuntimeGuard);
    const std::string man = slurp(dir / "manifest.json");
    CHECK(man.find("runtime-guard") != std::string::npos);
    CHECK(man.find("guard_reason") != std::string::npos);
    CHECK(man.find("last_valid_time") != std::string::npos);
}

TEST_CASE("custom samples preset feeds a stored snapshot back in") {
    const fs::path dir = temp_dir("custom");
    auto g = make_grid(512, 100.53096491487338);
    write_snapshot((dir / "data.bin").string(), make_gaussian(g, 0.5, 1.0));
    RunConfig cfg = parse_config_text(R"({
        "scenario": "conservation", "a": 0.5,
        "grid": {"n_points": 512, "half_length": 100.53096491487338},
        "stepper": {"dt": 1e-3, "T": 0.02},
        "data": {"preset": "custom", "samples_file": ")" +
                                     (dir / "data.bin").string() + R"("}
    })");
    cfg.output_dir = (dir / "out").string();
    CHECK(run_scenario(cfg) == kPass);

    // a mismatched grid is a schema violation
    cfg.grid.n_points = 1024;
    CHECK_THROWS_AS(run_scenario(cfg), SchemaError);
}

TEST_CASE("determinism: identical config and seed give byte-identical outputs") {
    // covers the CSV/JSON/snapshot writers and the seeded audit sampling;
    // the manifest is excluded (it carries wall-clock time)
    auto run_into = [](const std::string& tag) {
        const fs::path dir = temp_dir(tag);
        RunConfig cfg = parse_config_text(R"({
            "scenario": "mean-barrier", "a": 0.5,
            "grid": {"n_points": 2048, "half_length": 402.1238596594935},
            "seed": 42
        })");
        cfg.output_dir = dir.string();
        REQUIRE(run_scenario(cfg) == kPass);
        return dir;
    };
    const fs::path d1 = run_into("det1");
    const fs::path d2 = run_into("det2");
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(d1)) {
        const std::string name = entry.path().filename().string();
        if (name == "manifest.json") continue;
        CHECK(slurp(entry.path()) == slurp(d2 / name));
        ++compared;
    }
    CHECK(compared >= 3);
}

TEST_CASE("unwritable output directory is reported") {
    RunConfig cfg = parse_config_text(R"({"scenario":"kernel-bounds","a":0.5})");
    cfg.output_dir = "/proc/no-such-device/out";
    CHECK_THROWS_AS(run_scenario(cfg), std::runtime_error);
}

TEST_CASE("every shipped preset config runs clean") {
    // the heavyweight configs (conservation, picard-crosscheck) run at full
    // scale in the acceptance suite; this covers the remaining presets with
    // the configs exactly as shipped
    const fs::path configs(DBOLAB_CONFIG_DIR);
    const fs::path work = temp_dir("presets_run");
    const fs::path cwd = fs::current_path();
    fs::current_path(work);
    for (const char* name : {"smoothing-rates", "stein-asymptotics", "moment-barrier",
                             "moment-barrier-nonlinear", "inequality-audits"}) {
        INFO(name);
        CHECK(run_config_file((configs / (std::string(name) + ".json")).string()) == kPass);
    }
    CHECK(fs::exists(work / "out" / "stein-asymptotics" / "stein_eta.csv"));
    CHECK(fs::exists(work / "out" / "inequality-audits" / "audits.json"));
    CHECK(fs::exists(work / "out" / "moment-barrier" / "growth_table.csv"));
    CHECK(fs::exists(work / "out" / "moment-barrier" / "tail_fit.json"));
    fs::current_path(cwd);
}

TEST_CASE("presets listing names every scenario") {
    const auto& names = scenario_names();
    CHECK(names.size() == 8);
    for (const char* expected :
         {"kernel-bounds", "smoothing-rates", "conservation", "mean-barrier", "moment-barrier",
          "stein-asymptotics", "inequality-audits", "picard-crosscheck"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
}
