#pragma once

// Tabular output for the kgrotor tool: csv, json or an aligned human table.
//
// Machine formats print every real with 17 significant digits so that a
// value read back from csv or json is the same double. Energy columns are
// stored in J; the human renderer shows them in eV.

#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kgrotor/units.hpp"

namespace kgrotor::cli {

enum class Format { Csv, Json, Human };

enum class ColumnKind { Integer, Real, Energy, Text };

struct Column {
  std::string name;  // machine name; energy columns get a _J / _eV suffix
  ColumnKind kind = ColumnKind::Real;
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Document {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string format_real(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  return fmt::format("{:.17g}", v);
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (ch < 0x20) out += fmt::format("\\u{:04x}", ch);
        else out += static_cast<char>(ch);
    }
  }
  out += '"';
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

namespace detail {

inline std::string machine_name(const Column& c) { return c.kind == ColumnKind::Energy ? c.name + "_J" : c.name; }

inline std::string human_name(const Column& c) { return c.kind == ColumnKind::Energy ? c.name + "_eV" : c.name; }

inline std::string machine_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  return std::get<std::string>(cell);
}

inline std::string json_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return std::isfinite(*d) ? format_real(*d) : "null";
  if (const auto* s = std::get_if<std::string>(&cell)) return json_escape(*s);
  return machine_cell(cell);
}

inline std::string human_cell(const Cell& cell, ColumnKind kind) {
  if (const auto* d = std::get_if<double>(&cell)) {
    const double v = kind == ColumnKind::Energy ? joule_to_ev(*d) : *d;
    return fmt::format("{:.10g}", v);
  }
  return machine_cell(cell);
}

}  // namespace detail

inline std::string render_csv(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(detail::machine_name(doc.columns[i]));
  }
  out += '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(detail::machine_cell(row[i]));
    }
    out += '\n';
  }
  return out;
}

inline std::string render_json(const Document& doc) {
  std::string out = "{\n  \"command\": " + json_escape(doc.command) + ",\n  \"meta\": {";
  for (std::size_t i = 0; i < doc.meta.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += json_escape(doc.meta[i].first) + ": " + detail::json_cell(doc.meta[i].second);
  }
  out += doc.meta.empty() ? "},\n" : "\n  },\n";
  out += "  \"rows\": [";
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    out += r ? ",\n    {" : "\n    {";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      if (i) out += ", ";
      out += json_escape(detail::machine_name(doc.columns[i])) + ": " + detail::json_cell(doc.rows[r][i]);
    }
    out += '}';
  }
  out += doc.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline std::string render_human(const Document& doc) {
  std::string out;
  for (const auto& [key, value] : doc.meta) {
    out += fmt::format("{}: {}\n", key, detail::human_cell(value, ColumnKind::Real));
  }
  if (!doc.meta.empty()) out += '\n';

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(doc.columns.size());
  cells.emplace_back();
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    cells.back().push_back(detail::human_name(doc.columns[i]));
    width[i] = cells.back().back().size();
  }
  for (const auto& row : doc.rows) {
    cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      cells.back().push_back(detail::human_cell(row[i], doc.columns[i].kind));
      width[i] = std::max(width[i], cells.back().back().size());
    }
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += fmt::format("{:>{}}", line[i], width[i]);
    }
    out += text + '\n';
  }
  return out;
}

inline std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::Csv: return render_csv(doc);
    case Format::Json: return render_json(doc);
    case Format::Human: return render_human(doc);
  }
  return {};
}

}  // namespace kgrotor::cli
