#pragma once

#include <cstdint>
#include <deque>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pspin::cli {

/// One table cell; monostate prints as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::deque<Table> tables;

  void set(std::string key, Cell value);
  Table& add_table(std::string name, std::vector<std::string> columns);
};

enum class Format { csv, json };

/// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double x);
std::string format_cell(const Cell& c);

/// CSV: '#'-prefixed metadata lines (tool, version, command, then meta in
/// insertion order), then each table as a header and rows. Tables after the
/// first are preceded by a blank line and a "# table: <name>" line.
void write_csv(std::ostream& os, const Report& r);

/// JSON object {tool, version, command, meta{}, tables{name: {columns, rows}}}.
void write_json(std::ostream& os, const Report& r);

void write_report(std::ostream& os, const Report& r, Format f);

}  // namespace pspin::cli
