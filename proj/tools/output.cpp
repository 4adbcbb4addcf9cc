#include "output.hpp"

#include <cstdio>

#include "covosc/version.hpp"

namespace covosc::cli {

namespace {

void write_json_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (const char c : s) {
    switch (c) {
      case '"':
        out << "\\\"";
        break;
      case '\\':
        out << "\\\\";
        break;
      case '\n':
        out << "\\n";
        break;
      case '\t':
        out << "\\t";
        break;
      default:
        out << c;
    }
  }
  out << '"';
}

void write_json_cell(std::ostream& out, const Cell& cell) {
  if (cell.kind == Cell::Kind::text) {
    write_json_string(out, cell.text);
  } else if (cell.kind == Cell::Kind::real &&
             cell.text.find_first_of("in") != std::string::npos) {
    out << "null";  // inf/nan have no JSON number form
  } else {
    out << cell.text;
  }
}

void write_csv_table(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i == 0 ? "" : ",") << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i == 0 ? "" : ",") << row[i].text;
    }
    out << "\n";
  }
}

}  // namespace

Cell integer_cell(long long value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld", value);
  return {Cell::Kind::integer, buf};
}

Cell real_cell(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return {Cell::Kind::real, buf};
}

Cell text_cell(std::string value) { return {Cell::Kind::text, std::move(value)}; }

void write_csv(std::ostream& out, const Document& doc) {
  write_csv_table(out, doc.data);
  if (doc.summary) {
    out << "\n";
    write_csv_table(out, *doc.summary);
  }
}

void write_json(std::ostream& out, const Document& doc) {
  out << "{\n  \"meta\": {\n    \"command\": ";
  write_json_string(out, doc.command);
  out << ",\n    \"parameters\": {";
  for (std::size_t i = 0; i < doc.parameters.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "      ";
    write_json_string(out, doc.parameters[i].first);
    out << ": ";
    write_json_cell(out, doc.parameters[i].second);
  }
  out << (doc.parameters.empty() ? "" : "\n    ") << "},\n    \"version\": ";
  write_json_string(out, covosc::version);
  out << "\n  },\n  \"data\": [";
  for (std::size_t r = 0; r < doc.data.rows.size(); ++r) {
    out << (r == 0 ? "\n" : ",\n") << "    {";
    for (std::size_t i = 0; i < doc.data.columns.size(); ++i) {
      out << (i == 0 ? "" : ", ");
      write_json_string(out, doc.data.columns[i]);
      out << ": ";
      write_json_cell(out, doc.data.rows[r][i]);
    }
    out << "}";
  }
  out << (doc.data.rows.empty() ? "" : "\n  ") << "]";
  if (doc.summary && !doc.summary->rows.empty()) {
    out << ",\n  \"summary\": {";
    const auto& row = doc.summary->rows.front();
    for (std::size_t i = 0; i < doc.summary->columns.size(); ++i) {
      out << (i == 0 ? "\n" : ",\n") << "    ";
      write_json_string(out, doc.summary->columns[i]);
      out << ": ";
      write_json_cell(out, row[i]);
    }
    out << "\n  }";
  }
  out << "\n}\n";
}

}  // namespace covosc::cli
