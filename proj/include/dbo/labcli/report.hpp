#ifndef DBO_LABCLI_REPORT_HPP
#define DBO_LABCLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace dbo::labcli {

/// Formats a double with 17 significant digits (value-preserving).
std::string fmt17(double v);

/// CSV with a declared header order; numeric cells printed via fmt17 so
/// identical inputs give byte-identical files.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(const std::vector<std::string>& cells);
    /// Convenience: all-numeric row.
    void add_row(const std::vector<double>& cells);

    void write(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Schema-versioned JSON report written with sorted keys and 2-space
/// indentation.
void write_json_report(const std::string& path, nlohmann::ordered_json body,
                       const std::string& schema_name, int schema_version = 1);

} // namespace dbo::labcli

#endif
