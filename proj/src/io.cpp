// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include "solxs/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace solxs {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_csv(const Table& t, std::ostream& os) {
    for (const auto& m : t.metadata) os << "# " << m << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

void emit_json(const Table& t, std::ostream& os) {
    os << "[";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << (r ? ",\n " : "\n ") << "{";
        for (size_t i = 0; i < t.rows[r].size(); ++i) {
            os << (i ? "," : "") << "\"" << t.columns[i] << "\":" << format_double(t.rows[r][i]);
        }
        os << "}";
    }
    os << "\n]\n";
}

void emit(const Table& t, const std::string& format, const std::string& path) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!path.empty()) {
        file.open(path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open output file for writing: " + path);
        os = &file;
    }
    if (format == "csv") {
        emit_csv(t, *os);
    } else if (format == "json") {
        emit_json(t, *os);
    } else {
        throw std::invalid_argument("unknown output format: " + format);
    }
    if (!path.empty() && !file)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace solxs
