#include "report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "version.hpp"

namespace pspin::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::logic_error("table " + name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

void Report::set(std::string key, Cell value) {
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta.emplace_back(std::move(key), std::move(value));
}

Table& Report::add_table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

namespace {

std::string csv_field(const Cell& c) {
  std::string s = format_cell(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

nlohmann::ordered_json to_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (std::isfinite(v)) return v;
      return format_double(v);
    }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& os, const Report& r) {
  os << "# tool: pspin\n# version: " << kVersion << "\n# command: " << r.command << '\n';
  for (const auto& [k, v] : r.meta) os << "# " << k << ": " << format_cell(v) << '\n';
  for (std::size_t t = 0; t < r.tables.size(); ++t) {
    const auto& table = r.tables[t];
    if (t > 0) os << "\n# table: " << table.name << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << '\n';
    }
  }
}

void write_json(std::ostream& os, const Report& r) {
  nlohmann::ordered_json j;
  j["tool"] = "pspin";
  j["version"] = kVersion;
  j["command"] = r.command;
  auto& meta = j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.meta) meta[k] = to_json(v);
  auto& tables = j["tables"] = nlohmann::ordered_json::object();
  for (const auto& table : r.tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json jr = nlohmann::ordered_json::array();
      for (const auto& c : row) jr.push_back(to_json(c));
      rows.push_back(std::move(jr));
    }
    tables[table.name] = {{"columns", table.columns}, {"rows", std::move(rows)}};
  }
  os << j.dump(2) << '\n';
}

void write_report(std::ostream& os, const Report& r, Format f) {
  if (f == Format::json)
    write_json(os, r);
  else
    write_csv(os, r);
}

}  // namespace pspin::cli
