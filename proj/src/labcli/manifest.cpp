#include "dbo/labcli/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include "dbo/labcli/report.hpp"

namespace dbo::labcli {

bool evaluate_check(const CheckEntry& c) {
    if (c.comparator == "<=") return c.measured <= c.threshold;
    if (c.comparator == ">=") return c.measured >= c.threshold;
    if (c.comparator == "range")
        return c.measured >= c.threshold_lo && c.measured <= c.threshold_hi;
    throw std::runtime_error("unknown comparator '" + c.comparator + "'");
}

void RunManifest::add_check(const std::string& name, double measured,
                            const std::string& comparator, double threshold, double lo,
                            double hi) {
    CheckEntry c;
    c.name = name;
    c.measured = measured;
    c.comparator = comparator;
    c.threshold = threshold;
    c.threshold_lo = lo;
    c.threshold_hi = hi;
    c.pass = evaluate_check(c);
    checks.push_back(c);
}

bool RunManifest::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void write_manifest(const std::string& path, const RunManifest& m) {
    nlohmann::ordered_json j;
    j["artifact_version"] = kArtifactVersion;
    j["status"] = m.status;
    if (!m.guard_reason.empty()) {
        j["guard_reason"] = m.guard_reason;
        j["last_valid_time"] = m.last_valid_time;
    }
    j["wall_clock_seconds"] = m.wall_clock_seconds;
    j["config"] = m.config_echo;
    nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : m.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["measured"] = c.measured;
        cj["comparator"] = c.comparator;
        if (c.comparator == "range") {
            cj["threshold_lo"] = c.threshold_lo;
            cj["threshold_hi"] = c.threshold_hi;
            tolerances[c.name] = {c.threshold_lo, c.threshold_hi};
        } else {
            cj["threshold"] = c.threshold;
            tolerances[c.name] = c.threshold;
        }
        checks.push_back(cj);
    }
    j["tolerances"] = tolerances;
    j["checks"] = checks;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
    out << j.dump(2) << "\n";
}

int verify_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read manifest '" + path + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!j.contains("checks") || !j.at("checks").is_array())
        throw std::runtime_error("manifest has no checks array");

    bool all_ok = true;
    for (const auto& cj : j.at("checks")) {
        CheckEntry c;
        c.name = cj.at("name").get<std::string>();
        c.measured = cj.at("measured").get<double>();
        c.comparator = cj.at("comparator").get<std::string>();
        if (c.comparator == "range") {
            c.threshold_lo = cj.at("threshold_lo").get<double>();
            c.threshold_hi = cj.at("threshold_hi").get<double>();
        } else {
            c.threshold = cj.at("threshold").get<double>();
        }
        if (!evaluate_check(c)) all_ok = false;
    }
    const std::string status = j.contains("status") ? j.at("status").get<std::string>() : "pass";
    if (status != "pass") all_ok = false;
    return all_ok ? 0 : 2;
}

} // namespace dbo::labcli
