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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace cutrank::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

/// A tidy result table. `schema` is written into the first column of every
/// CSV row (and as a field of every JSON record) so readers can dispatch on it.
struct Table {
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// 6 significant digits, shortest form ("%.6g").
std::string format_number(double v);
std::string format_cell(const Cell& c);

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t, bool json);

/// RFC 4180 style reader: header plus rows, quoted fields allowed.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

template <typename T>
std::string join(const std::vector<T>& items, char sep) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); k++) {
        if (k) {
            out.push_back(sep);
        }
        out += std::to_string(items[k]);
    }
    return out;
}

}  // namespace cutrank::cli
