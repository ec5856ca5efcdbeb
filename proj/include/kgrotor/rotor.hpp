#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kgrotor/units.hpp"

namespace kgrotor {

/// Two point masses at a fixed separation. Stored in SI; use from_amu_angstrom
/// for the spectroscopic inputs most callers have.
class RotorSystem {
 public:
  RotorSystem(double m1_kg, double m2_kg, double bond_length_m) : m1_(m1_kg), m2_(m2_kg), a_(bond_length_m) {
    // Negated comparisons so NaN is rejected too.
    if (!(m1_ > 0.0) || !(m2_ > 0.0)) throw std::invalid_argument("rotor masses must be positive");
    if (!(a_ > 0.0)) throw std::invalid_argument("bond length must be positive");
    if (!std::isfinite(m1_) || !std::isfinite(m2_) || !std::isfinite(a_)) {
      throw std::invalid_argument("rotor parameters must be finite");
    }
  }

  static RotorSystem from_amu_angstrom(double m1_amu, double m2_amu, double a_angstrom) {
    return {m1_amu * constants::amu, m2_amu * constants::amu, a_angstrom * 1e-10};
  }

  double m1() const noexcept { return m1_; }
  double m2() const noexcept { return m2_; }
  double bond_length() const noexcept { return a_; }

  /// Same masses, different separation.
  RotorSystem with_bond_length(double a) const { return {m1_, m2_, a}; }

  friend bool operator==(const RotorSystem&, const RotorSystem&) = default;

 private:
  double m1_;
  double m2_;
  double a_;
};

enum class ModelKind {
  SingleParticle,
  HomonuclearKG,
  HeteronuclearKGExact,
  HeteronuclearKGQuartic,
  KGTaylor1,
  KGTaylor2,
  NonRelativistic,
};

constexpr std::string_view model_name(ModelKind m) noexcept {
  switch (m) {
    case ModelKind::SingleParticle: return "single-particle";
    case ModelKind::HomonuclearKG: return "kg-homonuclear";
    case ModelKind::HeteronuclearKGExact: return "kg-exact";
    case ModelKind::HeteronuclearKGQuartic: return "kg-quartic";
    case ModelKind::KGTaylor1: return "kg-taylor1";
    case ModelKind::KGTaylor2: return "kg-taylor2";
    case ModelKind::NonRelativistic: return "nonrel";
  }
  return "?";
}

inline ModelKind parse_model(std::string_view name) {
  for (auto m : {ModelKind::SingleParticle, ModelKind::HomonuclearKG, ModelKind::HeteronuclearKGExact,
                 ModelKind::HeteronuclearKGQuartic, ModelKind::KGTaylor1, ModelKind::KGTaylor2,
                 ModelKind::NonRelativistic}) {
    if (name == model_name(m)) return m;
  }
  if (name == "approx") return ModelKind::KGTaylor1;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

constexpr bool is_relativistic(ModelKind m) noexcept { return m != ModelKind::NonRelativistic; }

struct EnergyLevel {
  int l = 0;
  double W = 0.0;           // total energy, J
  double excitation = 0.0;  // W - rest energy, J, evaluated without cancellation
  ModelKind model = ModelKind::HeteronuclearKGExact;
};

struct DerivedQuantities {
  double total_mass;        // M, kg
  double reduced_mass;      // mu, kg
  double inertia;           // I = mu a^2, kg m^2
  double rest_energy;       // epsilon = M c^2, J
  double chi;               // hbar / (mu c a)
  double a_tilde;           // a / (hbar / M c)
  double a_tilde_reduced;   // a / (hbar / mu c)
};

inline DerivedQuantities derived_quantities(const RotorSystem& sys) noexcept {
  using constants::c;
  using constants::hbar;
  const double M = sys.m1() + sys.m2();
  const double mu = sys.m1() * sys.m2() / M;
  const double a = sys.bond_length();
  return {
      .total_mass = M,
      .reduced_mass = mu,
      .inertia = mu * a * a,
      .rest_energy = M * c * c,
      .chi = hbar / (mu * c * a),
      .a_tilde = a * M * c / hbar,
      .a_tilde_reduced = a * mu * c / hbar,
  };
}

/// Bond length at which hbar / (mu c a) equals `chi`.
inline double bond_length_for_chi(double m1, double m2, double chi) noexcept {
  const double mu = m1 * m2 / (m1 + m2);
  return constants::hbar / (mu * constants::c * chi);
}

inline constexpr double kHomonuclearMassTolerance = 1e-12;

inline bool is_homonuclear(const RotorSystem& sys) noexcept {
  return std::abs(sys.m1() - sys.m2()) / (sys.m1() + sys.m2()) < kHomonuclearMassTolerance;
}

}  // namespace kgrotor
