#include "bohrlab/report.hpp"

#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace bohrlab {

std::string fmt_double(double v) {
    // shortest decimal form that parses back to the same double
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_field(const std::string& field) {
    if (!needs_quoting(field)) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (const auto& [key, value] : table.meta) {
        out += "# " + key + "=" + value + "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += csv_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json root;
    root["schema_version"] = kReportSchemaVersion;
    nlohmann::ordered_json meta;
    for (const auto& [key, value] : table.meta) {
        meta[key] = value;
    }
    root["meta"] = std::move(meta);
    root["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        rows.push_back(row);
    }
    root["rows"] = std::move(rows);
    return root.dump(2) + "\n";
}

}  // namespace bohrlab
