// SPDX-License-Identifier: Apache-2.0
//
// A typed table with CSV and JSON writers. Doubles are written with 17
// significant digits so values survive a text round trip.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace modslab::cli {

using Cell = std::variant<std::monostate, double, int, bool, std::string>;

struct Table {
  std::string schema;  // e.g. "modslab-sweep/1"; bump on any column change
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Key/value summary, written as trailing comment lines (CSV) or an object (JSON).
  std::vector<std::pair<std::string, Cell>> summary;
};

[[nodiscard]] std::string format_double(double x);

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);

}  // namespace modslab::cli
