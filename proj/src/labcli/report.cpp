#include "dbo/labcli/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dbo::labcli {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("CSV row width does not match header");
    rows_.push_back(cells);
}

void CsvWriter::add_row(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(fmt17(v));
    add_row(s);
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    for (size_t i = 0; i < header_.size(); ++i)
        out << header_[i] << (i + 1 < header_.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows_) {
        for (size_t i = 0; i < row.size(); ++i) out << row[i] << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void write_json_report(const std::string& path, nlohmann::ordered_json body,
                       const std::string& schema_name, int schema_version) {
    nlohmann::ordered_json doc;
    doc["schema"] = schema_name;
    doc["schema_version"] = schema_version;
    doc["body"] = std::move(body);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

} // namespace dbo::labcli
