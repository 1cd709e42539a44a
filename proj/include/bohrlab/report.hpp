#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bohrlab {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

// Tabular report payload. meta carries the echoed run configuration (tool
// version, seed, tolerances, truncation padding) in insertion order so that
// identical configurations serialize to identical bytes.
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_meta(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }
};

// shortest-exact decimal form, deterministic across runs
std::string fmt_double(double v);

// '#' metadata block followed by an RFC-4180 header and rows
std::string to_csv(const Table& table);

// mirrors the CSV content, plus the schema version
std::string to_json(const Table& table);

}  // namespace bohrlab
