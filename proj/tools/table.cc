// Copyright 2026 The cutrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "table.h"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace cutrank::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("Table::add_row: expected " + std::to_string(columns.size()) + " cells");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    if (auto* i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    if (auto* d = std::get_if<double>(&c)) {
        return format_number(*d);
    }
    return std::get<std::string>(c);
}

namespace {

void write_field(std::ostream& out, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char ch : s) {
        if (ch == '"') {
            out << '"';
        }
        out << ch;
    }
    out << '"';
}

}  // namespace

void write_csv(std::ostream& out, const Table& t) {
    out << "schema";
    for (const auto& c : t.columns) {
        out << ',';
        write_field(out, c);
    }
    out << '\n';
    for (const auto& row : t.rows) {
        write_field(out, t.schema);
        for (const auto& cell : row) {
            out << ',';
            write_field(out, format_cell(cell));
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec;
        rec["schema"] = t.schema;
        for (std::size_t k = 0; k < row.size(); k++) {
            const Cell& c = row[k];
            if (auto* i = std::get_if<std::int64_t>(&c)) {
                rec[t.columns[k]] = *i;
            } else if (auto* d = std::get_if<double>(&c)) {
                rec[t.columns[k]] = std::stod(format_number(*d));
            } else {
                rec[t.columns[k]] = std::get<std::string>(c);
            }
        }
        arr.push_back(std::move(rec));
    }
    out << arr.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& t, bool json) {
    if (json) {
        write_json(out, t);
    } else {
        write_csv(out, t);
    }
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t k = 0; k < text.size(); k++) {
        char ch = text[k];
        if (quoted) {
            if (ch == '"' && k + 1 < text.size() && text[k + 1] == '"') {
                field.push_back('"');
                k++;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"') {
            quoted = true;
            any = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (ch == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else {
            field.push_back(ch);
            any = true;
        }
    }
    if (quoted) {
        throw std::invalid_argument("parse_csv: unterminated quote");
    }
    if (any) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cutrank::cli
