#ifndef DBO_LABCLI_SCENARIOS_HPP
#define DBO_LABCLI_SCENARIOS_HPP

#include <string>

#include "dbo/labcli/config.hpp"

namespace dbo::labcli {

enum ExitCode : int {
    kPass = 0,
    kCheckFailure = 2,
    kSchemaError = 3,
    kRuntimeGuard = 4,
};

/// Executes one preset and writes its CSV/JSON/snapshot outputs plus the
/// manifest under cfg.output_dir. Returns an ExitCode.
int run_scenario(const RunConfig& cfg);

/// Loads, validates and runs a config file; a manifest is written even
/// when validation fails.
int run_config_file(const std::string& path);

/// One line per preset on stdout.
void print_presets();

} // namespace dbo::labcli

#endif
