// kgrotor: rotational levels and lines of a Klein-Gordon diatomic rotor.
//
//   kgrotor spectrum  SYSTEM [--lmax N] [--model M]
//   kgrotor constants SYSTEM [--l N | --lmax N]
//   kgrotor fit       [SYSTEM | --m1 X --m2 Y] (--nu0 V | --lines-file F) [--model M]
//   kgrotor compare   SYSTEM [--lmax N] [--absolute]
//
// Common options: --format csv|json|human, --out FILE, --mass-db FILE,
// --presets-db FILE. SYSTEM is "iso1:iso2:a_angstrom" or a preset name with
// an optional ":a_angstrom".
//
// Exit codes: 0 ok, 2 bad arguments, 3 system could not be resolved,
// 4 fit failed.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgrotor/kgrotor.hpp"
#include "output.hpp"

namespace {

using namespace kgrotor;
using cli::Cell;
using cli::Column;
using cli::ColumnKind;
using cli::Document;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResolution = 3;
constexpr int kExitFit = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "human";
  std::string out;
  std::optional<std::string> mass_db;
  std::optional<std::string> presets_db;

  std::string system;
  int lmax = 10;
  std::optional<int> l;
  std::string model = "kg-exact";
  bool absolute = false;

  std::string m1;
  std::string m2;
  std::optional<double> nu0;
  std::string lines_file;
};

struct Databases {
  MassTable masses;
  PresetTable presets;
};

Databases load_databases(const Options& o) {
  Databases db;
  const auto mass_path = select_db_path(o.mass_db, "KGROTOR_MASS_DB");
  db.masses = mass_path ? load_mass_table(*mass_path) : default_mass_table();
  const auto preset_path = select_db_path(o.presets_db, "KGROTOR_PRESETS_DB");
  db.presets = preset_path ? load_presets(*preset_path) : default_presets();
  return db;
}

ModelKind model_option(const std::string& name) {
  try {
    const auto m = parse_model(name);
    if (m == ModelKind::SingleParticle) throw std::invalid_argument("single-particle model needs one mass");
    return m;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_lmax(int lmax) {
  if (lmax < 0) throw UsageError("--lmax must be non-negative");
  if (lmax > kMaxAngularMomentum - 2) throw UsageError("--lmax is too large");
}

Cell real(double v) { return v; }
Cell integer(int v) { return static_cast<std::int64_t>(v); }

void add_system_meta(Document& doc, const std::string& spec, const RotorSystem& sys) {
  const auto d = derived_quantities(sys);
  doc.meta.emplace_back("system", spec);
  doc.meta.emplace_back("m1_amu", sys.m1() / constants::amu);
  doc.meta.emplace_back("m2_amu", sys.m2() / constants::amu);
  doc.meta.emplace_back("a_angstrom", sys.bond_length() * 1e10);
  doc.meta.emplace_back("chi", d.chi);
}

Document cmd_spectrum(const Options& o, const Databases& db) {
  check_lmax(o.lmax);
  const auto model = model_option(o.model);
  const auto sys = resolve_system(o.system, db.masses, db.presets);
  const auto sp = spectrum(sys, o.lmax, model);

  Document doc;
  doc.command = "spectrum";
  add_system_meta(doc, o.system, sys);
  doc.meta.emplace_back("model", std::string(model_name(model)));
  doc.meta.emplace_back("B_cm1", sp.B);
  doc.columns = {{"l", ColumnKind::Integer},      {"nu_bar_cm1"}, {"T1_cm1"},      {"T2_cm1"}, {"T3_cm1"},
                 {"T4_cm1"},                      {"T5_cm1"},     {"spacing_cm1"}, {"deviation_cm1"}};
  for (std::size_t i = 0; i < sp.lines.size(); ++i) {
    const auto& ln = sp.lines[i];
    doc.rows.push_back({integer(ln.l_lower), real(ln.nu_bar), real(ln.terms.T1), real(ln.terms.T2), real(ln.terms.T3),
                        real(ln.terms.T4), real(ln.terms.T5), real(sp.spacing[i]), real(sp.deviation[i])});
  }
  return doc;
}

Document cmd_constants(const Options& o, const Databases& db) {
  int l_first = 0;
  int l_last = 0;
  if (o.l) {
    if (*o.l < 0 || *o.l > kMaxAngularMomentum) throw UsageError("--l must be in [0, 1e6]");
    l_first = l_last = *o.l;
  } else {
    check_lmax(o.lmax);
    l_last = o.lmax;
  }
  const auto sys = resolve_system(o.system, db.masses, db.presets);
  const auto d = derived_quantities(sys);
  const double B_textbook = textbook_rotational_constant(sys);

  Document doc;
  doc.command = "constants";
  add_system_meta(doc, o.system, sys);
  doc.meta.emplace_back("epsilon_J", d.rest_energy);
  doc.meta.emplace_back("mu_kg", d.reduced_mass);
  doc.meta.emplace_back("M_kg", d.total_mass);
  doc.meta.emplace_back("I_kg_m2", d.inertia);
  doc.meta.emplace_back("B_textbook_cm1", B_textbook);
  doc.columns = {{"l", ColumnKind::Integer}, {"epsilon", ColumnKind::Energy}, {"mu_kg"}, {"M_kg"},
                 {"I_kg_m2"}, {"chi"}, {"B_cm1"}, {"B_l_cm1"}, {"B_rel_cm1"}, {"B_textbook_cm1"},
                 {"B", ColumnKind::Energy}, {"B_l", ColumnKind::Energy}, {"B_rel", ColumnKind::Energy}};
  for (int l = l_first; l <= l_last; ++l) {
    const auto rc = rotational_constants(sys, l);
    const double Eb = rotational_constant_energy(sys);
    const double El = rotational_correction_energy(sys, l);
    doc.rows.push_back({integer(l), real(d.rest_energy), real(d.reduced_mass), real(d.total_mass), real(d.inertia),
                        real(d.chi), real(rc.B), real(rc.B_l), real(rc.B_rel), real(B_textbook), real(Eb), real(El),
                        real(Eb + El)});
  }
  return doc;
}

double mass_option(const std::string& text, const MassTable& table) {
  if (const auto v = kgrotor::detail::parse_double(kgrotor::detail::trim(text))) {
    if (!(*v > 0.0)) throw UsageError("masses must be positive");
    return *v;
  }
  return table.mass_amu(kgrotor::detail::trim(text));
}

std::vector<ObservedLine> read_lines_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open lines file '" + path + "'");
  std::vector<ObservedLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto text = kgrotor::detail::trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = kgrotor::detail::split(text, ',');
    if (fields.size() == 2 && lines.empty() && kgrotor::detail::trim(fields[0]) == "l") continue;
    const auto l = fields.size() == 2 ? kgrotor::detail::parse_integer(fields[0]) : std::nullopt;
    const auto nu = fields.size() == 2 ? kgrotor::detail::parse_double(fields[1]) : std::nullopt;
    if (!l || !nu) throw UsageError(fmt::format("{}:{}: expected 'l,nu_bar_cm1'", path, number));
    if (*l < 0 || *l > kMaxAngularMomentum) throw UsageError(fmt::format("{}:{}: l out of range", path, number));
    lines.push_back({static_cast<int>(*l), *nu});
  }
  if (lines.empty()) throw UsageError("lines file '" + path + "' holds no lines");
  return lines;
}

Document cmd_fit(const Options& o, const Databases& db) {
  const auto model = model_option(o.model);
  const bool have_spec = !o.system.empty();
  const bool have_masses = !o.m1.empty() || !o.m2.empty();
  if (have_spec == have_masses) throw UsageError("give either SYSTEM or both --m1 and --m2");
  if (have_masses && (o.m1.empty() || o.m2.empty())) throw UsageError("--m1 and --m2 go together");
  if (o.nu0.has_value() == !o.lines_file.empty()) throw UsageError("give exactly one of --nu0 and --lines-file");

  MassPair masses{};
  if (have_spec) {
    masses = resolve_spec(o.system, db.masses, db.presets).masses;
  } else {
    masses = {mass_option(o.m1, db.masses), mass_option(o.m2, db.masses)};
  }
  const double m1 = masses.m1_amu * constants::amu;
  const double m2 = masses.m2_amu * constants::amu;

  FitResult fit{};
  std::size_t n_lines = 1;
  try {
    if (o.nu0) {
      fit = fit_bond_length_first_line(m1, m2, *o.nu0, model);
    } else {
      const auto lines = read_lines_file(o.lines_file);
      n_lines = lines.size();
      fit = fit_bond_length_multi_line(m1, m2, lines, model);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const BracketError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Document doc;
  doc.command = "fit";
  doc.meta.emplace_back("m1_amu", masses.m1_amu);
  doc.meta.emplace_back("m2_amu", masses.m2_amu);
  doc.meta.emplace_back("lines", static_cast<std::int64_t>(n_lines));
  doc.columns = {{"model", ColumnKind::Text}, {"a_angstrom"}, {"a_m"}, {"I_kg_m2"}, {"residual_cm1"},
                 {"iterations", ColumnKind::Integer}};
  doc.rows.push_back({std::string(model_name(fit.model)), real(fit.a * 1e10), real(fit.a), real(fit.I),
                      real(fit.residual), integer(fit.iterations)});
  return doc;
}

double relative_to(double value, double reference) {
  if (reference == 0.0) return value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (value - reference) / reference;
}

Document cmd_compare(const Options& o, const Databases& db) {
  check_lmax(o.lmax);
  const auto sys = resolve_system(o.system, db.masses, db.presets);
  const double eps = derived_quantities(sys).rest_energy;
  const double B = rotational_constant_B(sys);
  const double B_textbook = textbook_rotational_constant(sys);

  Document doc;
  doc.command = "compare";
  add_system_meta(doc, o.system, sys);
  doc.meta.emplace_back("energies", std::string(o.absolute ? "total" : "excitation"));
  doc.meta.emplace_back("B_cm1", B);
  doc.meta.emplace_back("B_textbook_cm1", B_textbook);
  doc.columns = {{"l", ColumnKind::Integer},
                 {"E_nr_weighted", ColumnKind::Energy},
                 {"E_nr_textbook", ColumnKind::Energy},
                 {"E_taylor1", ColumnKind::Energy},
                 {"E_taylor2", ColumnKind::Energy},
                 {"E_kg_exact", ColumnKind::Energy},
                 {"rel_nr_weighted"},
                 {"rel_nr_textbook"},
                 {"rel_taylor1"},
                 {"rel_taylor2"},
                 {"nu_nr_weighted_cm1"},
                 {"nu_nr_textbook_cm1"},
                 {"nu_taylor1_cm1"},
                 {"nu_taylor2_cm1"},
                 {"nu_kg_exact_cm1"}};

  const double shift = o.absolute ? eps : 0.0;
  for (int l = 0; l <= o.lmax; ++l) {
    const double nr_weighted = level_nonrel(sys, l, NrForm::MassWeighted);
    const double nr_textbook = level_nonrel(sys, l, NrForm::Textbook);
    const double t1 = level_taylor(sys, l, TaylorOrder::First).excitation;
    const double t2 = level_taylor(sys, l, TaylorOrder::Second).excitation;
    const double exact = level_closed_form(sys, l).excitation;
    // Line l+1 -> l of the textbook rotor, same evaluation order as the nonrel line.
    const double nu_textbook = wavenumber_from_energy(2.0 * (l + 1) * textbook_rotational_constant_energy(sys));
    doc.rows.push_back({integer(l), real(shift + nr_weighted), real(shift + nr_textbook), real(shift + t1),
                        real(shift + t2), real(shift + exact), real(relative_to(nr_weighted, exact)),
                        real(relative_to(nr_textbook, exact)), real(relative_to(t1, exact)),
                        real(relative_to(t2, exact)), real(line(sys, l, ModelKind::NonRelativistic).nu_bar),
                        real(nu_textbook), real(line(sys, l, ModelKind::KGTaylor1).nu_bar),
                        real(line(sys, l, ModelKind::KGTaylor2).nu_bar),
                        real(line(sys, l, ModelKind::HeteronuclearKGExact).nu_bar)});
  }
  return doc;
}

void emit(const Options& o, const Document& doc) {
  static const std::map<std::string, cli::Format> formats{
      {"csv", cli::Format::Csv}, {"json", cli::Format::Json}, {"human", cli::Format::Human}};
  const std::string text = cli::render(doc, formats.at(o.format));
  if (o.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + o.out + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Rotational levels and lines of a Klein-Gordon diatomic rotor", "kgrotor"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "human"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write output to this file instead of standard output");
  app.add_option("--mass-db", o.mass_db, "Isotope mass table (CSV symbol,mass_amu); env KGROTOR_MASS_DB");
  app.add_option("--presets-db", o.presets_db,
                 "Molecule presets (CSV name,iso1,iso2,bond_length_angstrom); env KGROTOR_PRESETS_DB");

  const std::string system_help = "iso1:iso2:a_angstrom, or a preset name with optional :a_angstrom";

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Line positions, T-terms and spacings for l = 0..lmax");
  spectrum_cmd->add_option("system", o.system, system_help)->required();
  spectrum_cmd->add_option("--lmax", o.lmax, "Highest lower-level l")->capture_default_str();
  spectrum_cmd->add_option("--model", o.model, "kg-exact, kg-quartic, kg-homonuclear, kg-taylor1, kg-taylor2, nonrel")
      ->capture_default_str();

  auto* constants_cmd = app.add_subcommand("constants", "Rotational constants B, B_l, B_rel per l");
  constants_cmd->add_option("system", o.system, system_help)->required();
  auto* l_opt = constants_cmd->add_option("--l", o.l, "A single l");
  constants_cmd->add_option("--lmax", o.lmax, "Rows for l = 0..lmax")->excludes(l_opt);

  auto* fit_cmd = app.add_subcommand("fit", "Bond length from observed line positions");
  fit_cmd->add_option("system", o.system, "iso1:iso2 or a preset name (bond length ignored)");
  fit_cmd->add_option("--m1", o.m1, "First mass, amu or isotope symbol");
  fit_cmd->add_option("--m2", o.m2, "Second mass, amu or isotope symbol");
  auto* nu0_opt = fit_cmd->add_option("--nu0", o.nu0, "First line (1 -> 0) in cm^-1");
  fit_cmd->add_option("--lines-file", o.lines_file, "CSV of l,nu_bar_cm1 with # comments")->excludes(nu0_opt);
  fit_cmd->add_option("--model", o.model, "Line model")->capture_default_str();

  auto* compare_cmd = app.add_subcommand("compare", "Levels and lines of every model side by side");
  compare_cmd->add_option("system", o.system, system_help)->required();
  compare_cmd->add_option("--lmax", o.lmax, "Highest l")->capture_default_str();
  compare_cmd->add_flag("--absolute", o.absolute, "Report total energies W instead of W - epsilon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kgrotor: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    const auto db = load_databases(o);
    Document doc;
    if (*spectrum_cmd) doc = cmd_spectrum(o, db);
    else if (*constants_cmd) doc = cmd_constants(o, db);
    else if (*fit_cmd) doc = cmd_fit(o, db);
    else doc = cmd_compare(o, db);
    emit(o, doc);
  } catch (const UsageError& e) {
    std::cerr << "kgrotor: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResolutionError& e) {
    std::cerr << "kgrotor: " << e.what() << '\n';
    return kExitResolution;
  } catch (const DatabaseError& e) {
    std::cerr << "kgrotor: " << e.what() << '\n';
    return kExitResolution;
  } catch (const BracketError& e) {
    std::cerr << "kgrotor: fit failed: " << e.what()
              << "; the observed wavenumbers imply a bond length outside 1e-13 .. 1e-7 m\n";
    return kExitFit;
  } catch (const std::invalid_argument& e) {
    // Model/system mismatches such as kg-homonuclear on unequal masses.
    std::cerr << "kgrotor: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "kgrotor: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
