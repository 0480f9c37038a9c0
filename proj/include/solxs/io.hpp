// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace solxs {

// Flat numeric table with named columns, the shape every command emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> metadata;  // emitted as leading "# ..." lines in CSV
};

// 17 significant digits; identical inputs always serialize to identical bytes.
std::string format_double(double v);

void emit_csv(const Table& t, std::ostream& os);
void emit_json(const Table& t, std::ostream& os);

// format is "csv" or "json"; empty path writes to stdout.
void emit(const Table& t, const std::string& format, const std::string& path);

}  // namespace solxs
