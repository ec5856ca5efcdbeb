#pragma once

// Isotope mass tables and named molecule presets.
//
// Mass table:  symbol,mass_amu
// Presets:     name,iso1,iso2,bond_length_angstrom
//
// LF or CRLF line endings, '#' comment lines and blank lines are accepted.
// A header line matching the column names is skipped wherever the first
// data line would be. Symbols are case-sensitive; whitespace around fields
// is ignored.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "kgrotor/default_data.hpp"
#include "kgrotor/rotor.hpp"
#include "kgrotor/units.hpp"

namespace kgrotor {

class DatabaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DatabaseError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DatabaseError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateSymbolError : public DatabaseError {
 public:
  using DatabaseError::DatabaseError;
};

class NonPositiveMassError : public DatabaseError {
 public:
  using DatabaseError::DatabaseError;
};

/// Unknown symbol or preset, or an incomplete system spec.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IsotopeRecord {
  std::string symbol;
  double mass_amu;

  friend bool operator==(const IsotopeRecord&, const IsotopeRecord&) = default;
};

struct MoleculePreset {
  std::string name;
  std::string isotope1;
  std::string isotope2;
  double bond_length_angstrom;

  friend bool operator==(const MoleculePreset&, const MoleculePreset&) = default;
};

class MassTable {
 public:
  MassTable() = default;

  void add(IsotopeRecord rec) {
    if (!(rec.mass_amu > 0.0)) throw NonPositiveMassError("non-positive mass for '" + rec.symbol + "'");
    if (find(rec.symbol)) throw DuplicateSymbolError("duplicate symbol '" + rec.symbol + "'");
    records_.push_back(std::move(rec));
  }

  std::optional<double> find(std::string_view symbol) const {
    auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.symbol == symbol; });
    if (it == records_.end()) return std::nullopt;
    return it->mass_amu;
  }

  double mass_amu(std::string_view symbol) const {
    if (auto m = find(symbol)) return *m;
    throw ResolutionError("unknown isotope symbol '" + std::string(symbol) + "'");
  }

  const std::vector<IsotopeRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

 private:
  std::vector<IsotopeRecord> records_;
};

class PresetTable {
 public:
  void add(MoleculePreset p) {
    if (!(p.bond_length_angstrom > 0.0)) throw DatabaseError("non-positive bond length for preset '" + p.name + "'");
    if (find(p.name)) throw DuplicateSymbolError("duplicate preset '" + p.name + "'");
    presets_.push_back(std::move(p));
  }

  const MoleculePreset* find(std::string_view name) const {
    auto it = std::find_if(presets_.begin(), presets_.end(), [&](const auto& p) { return p.name == name; });
    return it == presets_.end() ? nullptr : &*it;
  }

  const std::vector<MoleculePreset>& presets() const noexcept { return presets_; }

 private:
  std::vector<MoleculePreset> presets_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

inline std::optional<long> parse_integer(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

/// Calls fn(line_number, fields) for every data row of a CSV text with
/// `columns` columns, skipping comments, blank lines and a leading header.
template <class Fn>
void for_each_row(std::string_view text, std::string_view header, std::size_t columns, Fn&& fn) {
  std::size_t line_no = 0;
  bool first_data = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = split(body, ',');
    if (first_data) {
      first_data = false;
      if (fields == split(header, ',')) continue;
    }
    if (fields.size() != columns) {
      throw ParseError(line_no, "expected " + std::to_string(columns) + " fields, got " + std::to_string(fields.size()));
    }
    fn(line_no, fields);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatabaseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

inline MassTable parse_mass_table(std::string_view text) {
  MassTable table;
  detail::for_each_row(text, "symbol,mass_amu", 2, [&](std::size_t line, const auto& f) {
    if (f[0].empty()) throw ParseError(line, "empty isotope symbol");
    const auto mass = detail::parse_double(f[1]);
    if (!mass) throw ParseError(line, "invalid mass '" + std::string(f[1]) + "'");
    if (!(*mass > 0.0)) {
      throw NonPositiveMassError("line " + std::to_string(line) + ": non-positive mass for '" + std::string(f[0]) + "'");
    }
    if (table.find(f[0])) {
      throw DuplicateSymbolError("line " + std::to_string(line) + ": duplicate symbol '" + std::string(f[0]) + "'");
    }
    table.add({std::string(f[0]), *mass});
  });
  return table;
}

inline MassTable load_mass_table(const std::string& path) { return parse_mass_table(detail::read_file(path)); }

inline std::string serialize_mass_table(const MassTable& table) {
  std::string out = "symbol,mass_amu\n";
  for (const auto& r : table.records()) out += r.symbol + "," + detail::format_double(r.mass_amu) + "\n";
  return out;
}

inline PresetTable parse_presets(std::string_view text) {
  PresetTable presets;
  detail::for_each_row(text, "name,iso1,iso2,bond_length_angstrom", 4, [&](std::size_t line, const auto& f) {
    if (f[0].empty() || f[1].empty() || f[2].empty()) throw ParseError(line, "empty field");
    const auto a = detail::parse_double(f[3]);
    if (!a) throw ParseError(line, "invalid bond length '" + std::string(f[3]) + "'");
    if (!(*a > 0.0)) throw ParseError(line, "non-positive bond length");
    if (presets.find(f[0])) throw DuplicateSymbolError("line " + std::to_string(line) + ": duplicate preset '" + std::string(f[0]) + "'");
    presets.add({std::string(f[0]), std::string(f[1]), std::string(f[2]), *a});
  });
  return presets;
}

inline PresetTable load_presets(const std::string& path) { return parse_presets(detail::read_file(path)); }

inline const MassTable& default_mass_table() {
  static const MassTable table = parse_mass_table(kDefaultMassTable);
  return table;
}

inline const PresetTable& default_presets() {
  static const PresetTable presets = parse_presets(kDefaultPresets);
  return presets;
}

/// Flag beats environment beats bundled table (nullopt).
inline std::optional<std::string> select_db_path(const std::optional<std::string>& flag, const char* env_var) {
  if (flag && !flag->empty()) return flag;
  if (const char* env = std::getenv(env_var); env != nullptr && *env != '\0') return std::string(env);
  return std::nullopt;
}

struct MassPair {
  double m1_amu;
  double m2_amu;
};

struct ResolvedSpec {
  MassPair masses;
  std::optional<double> bond_length_angstrom;
};

/// Parses "iso1:iso2[:a]" or "Preset[:a]" without requiring a bond length.
inline ResolvedSpec resolve_spec(std::string_view spec, const MassTable& table, const PresetTable& presets) {
  const auto parts = detail::split(spec, ':');
  auto bond = [](std::string_view s) {
    const auto a = detail::parse_double(s);
    if (!a || !(*a > 0.0)) throw ResolutionError("invalid bond length '" + std::string(s) + "'");
    return *a;
  };
  if (parts.size() == 3) {
    return {{table.mass_amu(parts[0]), table.mass_amu(parts[1])}, bond(parts[2])};
  }
  if (parts.size() == 1 || parts.size() == 2) {
    if (const auto* p = presets.find(parts[0])) {
      const double a = parts.size() == 2 ? bond(parts[1]) : p->bond_length_angstrom;
      return {{table.mass_amu(p->isotope1), table.mass_amu(p->isotope2)}, a};
    }
    if (parts.size() == 2) return {{table.mass_amu(parts[0]), table.mass_amu(parts[1])}, std::nullopt};
    throw ResolutionError("unknown preset '" + std::string(parts[0]) + "'");
  }
  throw ResolutionError("cannot parse system spec '" + std::string(spec) + "'");
}

/// "1H:35Cl:1.2746" or "HCl" / "HCl:1.30" to an SI rotor.
inline RotorSystem resolve_system(std::string_view spec, const MassTable& table, const PresetTable& presets) {
  const auto r = resolve_spec(spec, table, presets);
  if (!r.bond_length_angstrom) throw ResolutionError("system spec '" + std::string(spec) + "' has no bond length");
  return RotorSystem::from_amu_angstrom(r.masses.m1_amu, r.masses.m2_amu, *r.bond_length_angstrom);
}

}  // namespace kgrotor
