#ifndef DBO_LABCLI_CONFIG_HPP
#define DBO_LABCLI_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dbo::labcli {

/// Config violations map to the schema exit code (3).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridConfig {
    int n_points = 4096;
    double half_length = 128.0 * M_PI;
};

struct StepperConfig {
    double dt = 1e-3;
    double T = 1.0;
    double dealias_fraction = 2.0 / 3.0;
};

struct DataConfig {
    std::string preset = "gaussian";
    double amplitude = 1.0;
    double width = 1.0;
    double s = 0.0;       // spectral-critical Sobolev index
    double eps = 0.01;    // spectral-critical excess
    std::string samples_file; // custom preset
};

struct DiagnosticsConfig {
    std::vector<double> s_list;
    std::vector<double> r_list;
    std::vector<double> R_list;
    std::vector<double> snapshot_times;
    std::vector<double> lambda_list; // smoothing-rates sweep
};

struct RunConfig {
    std::string scenario;
    double a = 0.5;
    GridConfig grid;
    StepperConfig stepper;
    DataConfig data;
    DiagnosticsConfig diagnostics;
    double gamma = 0.25; // stein-asymptotics
    double theta = 0.75;
    std::string output_dir = "out";
    uint64_t seed = 1;
    nlohmann::ordered_json echo; // raw parsed config, for the manifest
};

const std::vector<std::string>& scenario_names();
const std::vector<std::string>& data_preset_names();

/// Parses and validates; throws SchemaError on any violation.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

} // namespace dbo::labcli

#endif
