#include "dbo/labcli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dbo::labcli {

using nlohmann::ordered_json;

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "kernel-bounds",    "smoothing-rates",   "conservation", "mean-barrier",
        "moment-barrier",   "stein-asymptotics", "inequality-audits", "picard-crosscheck"};
    return names;
}

const std::vector<std::string>& data_preset_names() {
    static const std::vector<std::string> names = {"gaussian", "x-gaussian", "x-times-gaussian",
                                                   "hermite2", "spectral-critical", "custom",
                                                   "zero"};
    return names;
}

namespace {

template <typename T>
T field_or(const ordered_json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaError("config field '" + key + "' has the wrong type");
    }
}

std::vector<double> list_or(const ordered_json& j, const std::string& key,
                            std::vector<double> fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<std::vector<double>>();
    } catch (const nlohmann::json::exception&) {
        throw SchemaError("config field '" + key + "' must be a numeric list");
    }
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("config must be a JSON object");

    RunConfig cfg;
    cfg.echo = j;

    if (!j.contains("scenario")) throw SchemaError("config missing required field 'scenario'");
    cfg.scenario = field_or<std::string>(j, "scenario", "");
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), cfg.scenario) == names.end())
        throw SchemaError("unknown scenario '" + cfg.scenario + "'");

    if (!j.contains("a")) throw SchemaError("config missing required field 'a'");
    cfg.a = field_or<double>(j, "a", 0.5);
    if (!(cfg.a > 0.0 && cfg.a <= 1.0)) throw SchemaError("'a' must lie in (0,1]");

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        cfg.grid.n_points = field_or<int>(g, "n_points", cfg.grid.n_points);
        cfg.grid.half_length = field_or<double>(g, "half_length", cfg.grid.half_length);
    }
    if (cfg.grid.n_points < 8 || cfg.grid.n_points % 2 != 0)
        throw SchemaError("grid.n_points must be even and >= 8");
    if (!(cfg.grid.half_length > 0.0)) throw SchemaError("grid.half_length must be positive");

    if (j.contains("stepper")) {
        const auto& s = j.at("stepper");
        cfg.stepper.dt = field_or<double>(s, "dt", cfg.stepper.dt);
        cfg.stepper.T = field_or<double>(s, "T", cfg.stepper.T);
        cfg.stepper.dealias_fraction =
            field_or<double>(s, "dealias_fraction", cfg.stepper.dealias_fraction);
    }
    if (!(cfg.stepper.dt > 0.0 && cfg.stepper.dt < 1.0))
        throw SchemaError("stepper.dt must lie in (0,1)");
    if (!(cfg.stepper.T > 0.0)) throw SchemaError("stepper.T must be positive");
    if (!(cfg.stepper.dealias_fraction > 0.5 && cfg.stepper.dealias_fraction <= 1.0))
        throw SchemaError("stepper.dealias_fraction must lie in (1/2,1]");

    if (j.contains("data")) {
        const auto& d = j.at("data");
        cfg.data.preset = field_or<std::string>(d, "preset", cfg.data.preset);
        cfg.data.amplitude = field_or<double>(d, "amplitude", cfg.data.amplitude);
        cfg.data.width = field_or<double>(d, "width", cfg.data.width);
        cfg.data.s = field_or<double>(d, "s", cfg.data.s);
        cfg.data.eps = field_or<double>(d, "eps", cfg.data.eps);
        cfg.data.samples_file = field_or<std::string>(d, "samples_file", cfg.data.samples_file);
    }
    const auto& presets = data_preset_names();
    if (std::find(presets.begin(), presets.end(), cfg.data.preset) == presets.end())
        throw SchemaError("unknown data preset '" + cfg.data.preset + "'");
    if (cfg.data.preset == "custom" && cfg.data.samples_file.empty())
        throw SchemaError("data preset 'custom' requires 'samples_file'");
    if (!(cfg.data.width > 0.0)) throw SchemaError("data.width must be positive");

    if (j.contains("diagnostics")) {
        const auto& d = j.at("diagnostics");
        cfg.diagnostics.s_list = list_or(d, "s_list", {});
        cfg.diagnostics.r_list = list_or(d, "r_list", {});
        cfg.diagnostics.R_list = list_or(d, "R_list", {});
        cfg.diagnostics.snapshot_times = list_or(d, "snapshot_times", {});
        cfg.diagnostics.lambda_list = list_or(d, "lambda_list", {});
    }

    cfg.gamma = field_or<double>(j, "gamma", cfg.gamma);
    cfg.theta = field_or<double>(j, "theta", cfg.theta);
    if (cfg.scenario == "stein-asymptotics") {
        if (!(cfg.gamma > 0.0)) throw SchemaError("'gamma' must be positive");
        if (!(cfg.theta > 0.0 && cfg.theta < 1.0)) throw SchemaError("'theta' must lie in (0,1)");
    }

    cfg.output_dir = field_or<std::string>(j, "output_dir", cfg.output_dir);
    if (cfg.output_dir.empty()) throw SchemaError("output_dir must be non-empty");
    cfg.seed = field_or<uint64_t>(j, "seed", cfg.seed);

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace dbo::labcli
