#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dbo/labcli/manifest.hpp"
#include "dbo/labcli/scenarios.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dbolab - pseudo-spectral laboratory for the dissipative Benjamin-Ono equation"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "execute one scenario from a JSON config");
    run->add_option("config", config_path, "path to the config file")->required();

    auto* presets = app.add_subcommand("presets", "preset utilities");
    auto* presets_list = presets->add_subcommand("list", "list available scenario presets");

    std::string report_path;
    auto* verify = app.add_subcommand("verify", "re-check pass/fail from a stored manifest");
    verify->add_option("report", report_path, "path to manifest.json")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return dbo::labcli::run_config_file(config_path);
        if (*presets_list || *presets) {
            dbo::labcli::print_presets();
            return 0;
        }
        if (*verify) return dbo::labcli::verify_manifest(report_path);
    } catch (const dbo::labcli::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return dbo::labcli::kSchemaError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dbo::labcli::kSchemaError;
    }
    return 0;
}
