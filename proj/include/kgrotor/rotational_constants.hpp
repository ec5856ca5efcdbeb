#pragma once

// Rotational constant B, its l-dependent correction B_l and their sum B_Rel.
//
// The *_energy functions return h*c*B style energies in J and are what the
// level and line code uses internally. The plain functions return cm^-1.
//
// The correction is written with alpha = m1 c^2 and beta = m2 c^2 so that
// numerator and denominator are both energy^2 * length^2:
//
//   B_l = B (alpha - beta)^2 a^2 / (4 (alpha beta a^2 + l(l+1) (hbar c)^2))
//
// (alpha - beta) is formed from (m1 - m2) before anything else, so every
// unequal-mass correction is exactly zero when the masses are equal.

#include <stdexcept>

#include "kgrotor/rotor.hpp"
#include "kgrotor/units.hpp"

namespace kgrotor {

inline constexpr int kMaxAngularMomentum = 1'000'000;

inline void check_angular_momentum(int l) {
  if (l < 0) throw std::invalid_argument("angular momentum quantum number must be non-negative");
  if (l > kMaxAngularMomentum) throw std::invalid_argument("angular momentum quantum number exceeds 1e6");
}

/// l(l+1) as a double; exact for every admissible l.
constexpr double angular_eigenvalue(int l) noexcept {
  return static_cast<double>(l) * static_cast<double>(l + 1);
}

struct RotationalConstants {
  double B;      // cm^-1
  double B_l;    // cm^-1
  double B_rel;  // cm^-1, B + B_l
  int l;
};

namespace detail {

struct MassEnergies {
  double alpha;       // m1 c^2
  double beta;        // m2 c^2
  double difference;  // (m1 - m2) c^2
  double hbar_c;      // J m
};

inline MassEnergies mass_energies(const RotorSystem& sys) noexcept {
  constexpr double c2 = constants::c * constants::c;
  return {sys.m1() * c2, sys.m2() * c2, (sys.m1() - sys.m2()) * c2, constants::hbar * constants::c};
}

/// alpha beta a^2 + l(l+1) (hbar c)^2, the denominator shared by B_l and the
/// closed-form line terms.
inline double correction_denominator(const RotorSystem& sys, int l) noexcept {
  const auto e = mass_energies(sys);
  const double a = sys.bond_length();
  return e.alpha * e.beta * a * a + angular_eigenvalue(l) * e.hbar_c * e.hbar_c;
}

}  // namespace detail

/// 4 mu / M = 4 m1 m2 / M^2; exactly 1 for equal masses.
inline double mass_asymmetry_factor(const RotorSystem& sys) noexcept {
  const double M = sys.m1() + sys.m2();
  return 4.0 * sys.m1() * sys.m2() / (M * M);
}

/// The rigid-rotor constant h / (8 pi^2 I c) without the 4 mu / M factor, J.
inline double textbook_rotational_constant_energy(const RotorSystem& sys) noexcept {
  const auto d = derived_quantities(sys);
  return constants::hbar * constants::hbar / (2.0 * d.inertia);
}

/// h c B = (h^2 / 4 pi^2 I) (2 mu / M), in J, evaluated as
/// (hbar^2 / 2I) (4 mu / M).
inline double rotational_constant_energy(const RotorSystem& sys) noexcept {
  return textbook_rotational_constant_energy(sys) * mass_asymmetry_factor(sys);
}

/// B = (h / 4 pi^2 I c) (2 mu / M), in cm^-1. For equal masses this is
/// h / (8 pi^2 I c).
inline double rotational_constant_B(const RotorSystem& sys) noexcept {
  return wavenumber_from_energy(rotational_constant_energy(sys));
}

inline double textbook_rotational_constant(const RotorSystem& sys) noexcept {
  return wavenumber_from_energy(textbook_rotational_constant_energy(sys));
}

/// Dimensionless ratio B_l / B.
inline double correction_ratio(const RotorSystem& sys, int l) {
  check_angular_momentum(l);
  const auto e = detail::mass_energies(sys);
  const double a = sys.bond_length();
  return e.difference * e.difference * a * a / (4.0 * detail::correction_denominator(sys, l));
}

inline double rotational_correction_energy(const RotorSystem& sys, int l) {
  return rotational_constant_energy(sys) * correction_ratio(sys, l);
}

/// B_l in cm^-1.
inline double rotational_correction_Bl(const RotorSystem& sys, int l) {
  return wavenumber_from_energy(rotational_correction_energy(sys, l));
}

inline double relativistic_coefficient_energy(const RotorSystem& sys, int l) {
  return rotational_constant_energy(sys) + rotational_correction_energy(sys, l);
}

/// B_Rel = B + B_l in cm^-1.
inline double relativistic_rotational_coefficient(const RotorSystem& sys, int l) {
  return rotational_constant_B(sys) + rotational_correction_Bl(sys, l);
}

inline RotationalConstants rotational_constants(const RotorSystem& sys, int l) {
  const double B = rotational_constant_B(sys);
  const double Bl = rotational_correction_Bl(sys, l);
  return {B, Bl, B + Bl, l};
}

}  // namespace kgrotor
