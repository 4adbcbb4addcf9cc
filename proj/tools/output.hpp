#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace covosc::cli {

/// One rendered cell. Numbers are preformatted so CSV and JSON emit the same
/// digits: reals as %.16e (17 significant digits, lowercase exponent),
/// integers in plain decimal.
struct Cell {
  enum class Kind { integer, real, text };
  Kind kind = Kind::text;
  std::string text;
};

Cell integer_cell(long long value);
Cell real_cell(double value);
Cell text_cell(std::string value);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// One command's output: a data table plus an optional single-row summary.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, Cell>> parameters;
  Table data;
  std::optional<Table> summary;
};

/// Header row, comma separators, "\n" line endings. A summary table follows
/// the data table after one blank line, with its own header row.
void write_csv(std::ostream& out, const Document& doc);

/// Single object {"meta": {command, parameters, version}, "data": [records],
/// "summary": {record}} with the same digit rendering as the CSV writer.
void write_json(std::ostream& out, const Document& doc);

}  // namespace covosc::cli
