// SPDX-License-Identifier: Apache-2.0

#include "cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace modslab::cli {

namespace {

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(int x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(double x) const {
      if (!std::isfinite(x)) return nullptr;
      return x;
    }
    nlohmann::json operator()(int x) const { return x; }
    nlohmann::json operator()(bool x) const { return x; }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const Table& t, std::ostream& out) {
  out << "# " << t.schema << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
  for (const auto& [key, value] : t.summary) out << "# " << key << '=' << csv_cell(value) << '\n';
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = t.schema;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  if (!t.summary.empty()) {
    nlohmann::ordered_json s;
    for (const auto& [key, value] : t.summary) s[key] = json_cell(value);
    doc["summary"] = std::move(s);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace modslab::cli
