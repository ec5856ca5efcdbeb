#pragma once

// Physical constants and the small set of unit conversions the rotor code
// needs. Everything inside the library is SI (kg, m, s, J); amu, Angstrom,
// eV and cm^-1 only appear at the boundaries.

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kgrotor {

/// CODATA 2018. c and h are exact by SI definition.
struct PhysicalConstants {
  static constexpr double c = 299792458.0;                   // m/s
  static constexpr double h = 6.62607015e-34;                // J s
  static constexpr double hbar = h / (2.0 * std::numbers::pi);  // J s
  static constexpr double amu = 1.66053906660e-27;           // kg
  static constexpr double elementary_charge = 1.602176634e-19;  // C (exact)

  /// Energy of one reciprocal centimetre, h*c*(100 m^-1), in J.
  static constexpr double hc_per_cm = h * c * 100.0;
};

namespace constants {
inline constexpr double c = PhysicalConstants::c;
inline constexpr double h = PhysicalConstants::h;
inline constexpr double hbar = PhysicalConstants::hbar;
inline constexpr double amu = PhysicalConstants::amu;
inline constexpr double eV = PhysicalConstants::elementary_charge;
inline constexpr double hc_per_cm = PhysicalConstants::hc_per_cm;
}  // namespace constants

enum class Unit { J, eV, Wavenumber, kg, amu, m, Angstrom };

enum class Dimension { Energy, Mass, Length };

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr Dimension dimension_of(Unit u) noexcept {
  switch (u) {
    case Unit::J:
    case Unit::eV:
    case Unit::Wavenumber:
      return Dimension::Energy;
    case Unit::kg:
    case Unit::amu:
      return Dimension::Mass;
    case Unit::m:
    case Unit::Angstrom:
      return Dimension::Length;
  }
  return Dimension::Energy;
}

/// Size of one `u` in the SI base unit of its dimension.
constexpr double si_factor(Unit u) noexcept {
  switch (u) {
    case Unit::J: return 1.0;
    case Unit::eV: return constants::eV;
    case Unit::Wavenumber: return constants::hc_per_cm;
    case Unit::kg: return 1.0;
    case Unit::amu: return constants::amu;
    case Unit::m: return 1.0;
    case Unit::Angstrom: return 1e-10;
  }
  return 1.0;
}

constexpr std::string_view unit_name(Unit u) noexcept {
  switch (u) {
    case Unit::J: return "J";
    case Unit::eV: return "eV";
    case Unit::Wavenumber: return "cm^-1";
    case Unit::kg: return "kg";
    case Unit::amu: return "amu";
    case Unit::m: return "m";
    case Unit::Angstrom: return "Angstrom";
  }
  return "?";
}

struct Quantity {
  double value = 0.0;
  Unit unit = Unit::J;

  friend constexpr bool operator==(const Quantity&, const Quantity&) = default;
};

/// Re-expresses `q` in `target`. cm^-1 is treated as the energy h*c*nu.
inline Quantity convert(Quantity q, Unit target) {
  if (dimension_of(q.unit) != dimension_of(target)) {
    throw DimensionError("cannot convert " + std::string(unit_name(q.unit)) + " to " +
                         std::string(unit_name(target)));
  }
  if (q.unit == target) return q;
  return {q.value * si_factor(q.unit) / si_factor(target), target};
}

/// E / (h c), per centimetre.
constexpr double wavenumber_from_energy(double joules) noexcept {
  return joules / constants::hc_per_cm;
}

constexpr double energy_from_wavenumber(double per_cm) noexcept {
  return per_cm * constants::hc_per_cm;
}

constexpr double joule_to_ev(double joules) noexcept { return joules / constants::eV; }

}  // namespace kgrotor
