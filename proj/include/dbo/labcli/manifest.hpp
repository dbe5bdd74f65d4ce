#ifndef DBO_LABCLI_MANIFEST_HPP
#define DBO_LABCLI_MANIFEST_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace dbo::labcli {

inline constexpr const char* kArtifactVersion = "1.0.0";

/// One recorded check: `measured <comparator> threshold` (or inside
/// [threshold_lo, threshold_hi] for "range"). `verify` re-evaluates the
/// predicate from these stored numbers.
struct CheckEntry {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    std::string comparator; // "<=", ">=", "range"
    double threshold = 0.0;
    double threshold_lo = 0.0;
    double threshold_hi = 0.0;
};

struct RunManifest {
    nlohmann::ordered_json config_echo;
    std::string status = "pass"; // pass | check-failure | schema-error | runtime-guard
    std::string guard_reason;
    double last_valid_time = 0.0;
    double wall_clock_seconds = 0.0;
    std::vector<CheckEntry> checks;

    void add_check(const std::string& name, double measured, const std::string& comparator,
                   double threshold, double lo = 0.0, double hi = 0.0);
    bool all_pass() const;
};

bool evaluate_check(const CheckEntry& c);

void write_manifest(const std::string& path, const RunManifest& m);

/// Re-evaluates the stored checks of a manifest file. Returns 0 when the
/// stored data still implies a clean pass, 2 otherwise; throws on schema
/// problems.
int verify_manifest(const std::string& path);

} // namespace dbo::labcli

#endif
