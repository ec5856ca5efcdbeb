#pragma once

// Pure-rotation lines l+1 -> l.
//
// Expanding the second-order level W_l = eps + L hc(B+B_l) - L^2 (hc)^2 (B+B_l)^2 / 2eps
// and differencing adjacent levels splits each line into five terms:
//
//   T1 = 2(l+1) B
//   T2 = -(2hc/eps) B^2 (l+1)^3
//   T3 = (l+1) [(l+2) B_{l+1} - l B_l]
//   T4 = -((l+1)^2 hc / 2eps) [(l+2)^2 B_{l+1}^2 - l^2 B_l^2]
//   T5 = -((l+1)^2 hc / 2eps) 2B [(l+2)^2 B_{l+1} - l^2 B_l]
//
// All terms are evaluated as energies and converted to cm^-1 once.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kgrotor/energy.hpp"
#include "kgrotor/rotational_constants.hpp"
#include "kgrotor/rotor.hpp"
#include "kgrotor/units.hpp"

namespace kgrotor {

struct LineTerms {
  double T1 = 0.0;
  double T2 = 0.0;
  double T3 = 0.0;
  double T4 = 0.0;
  double T5 = 0.0;

  double sum() const noexcept { return T1 + T2 + T3 + T4 + T5; }
};

struct SpectralLine {
  int l_lower = 0;
  double nu_bar = 0.0;  // cm^-1
  LineTerms terms;      // cm^-1; only the terms the model keeps are non-zero
  ModelKind model = ModelKind::KGTaylor2;
};

struct DecomposedLevel {
  double W_l;            // eps + L hc(B+B_l) - L^2 (hc)^2 (B+B_l)^2 / 2eps
  double W_l_regrouped;  // W_0 + L hc B_l - L^2 (hc)^2 (B_l^2 + 2 B B_l) / 2eps
  double W_0;            // eps + L hcB - L^2 (hcB)^2 / 2eps
  double shift;          // W_l - W_0, formed without subtraction
};

inline DecomposedLevel level_decomposed(const RotorSystem& sys, int l) {
  check_angular_momentum(l);
  const double eps = derived_quantities(sys).rest_energy;
  const double L = angular_eigenvalue(l);
  const double Eb = rotational_constant_energy(sys);
  const double El = rotational_correction_energy(sys, l);
  const double Erel = Eb + El;

  const double W0 = eps + L * Eb - L * L * Eb * Eb / (2.0 * eps);
  const double shift = L * El - L * L * (El * El + 2.0 * Eb * El) / (2.0 * eps);
  const double Wl = eps + L * Erel - L * L * Erel * Erel / (2.0 * eps);
  return {Wl, W0 + shift, W0, shift};
}

namespace detail {

inline LineTerms to_wavenumber(const LineTerms& e) noexcept {
  return {wavenumber_from_energy(e.T1), wavenumber_from_energy(e.T2), wavenumber_from_energy(e.T3),
          wavenumber_from_energy(e.T4), wavenumber_from_energy(e.T5)};
}

/// The five terms in J, from B_l and B_{l+1}.
inline LineTerms line_term_energies(const RotorSystem& sys, int l) {
  check_angular_momentum(l);
  if (l == kMaxAngularMomentum) throw std::invalid_argument("upper level exceeds the angular momentum cap");
  const double eps = derived_quantities(sys).rest_energy;
  const double Eb = rotational_constant_energy(sys);
  const double El = rotational_correction_energy(sys, l);
  const double En = rotational_correction_energy(sys, l + 1);
  const double n = l;
  const double n1 = n + 1.0;
  const double n2 = n + 2.0;
  return {
      .T1 = 2.0 * n1 * Eb,
      .T2 = -(2.0 / eps) * Eb * Eb * n1 * n1 * n1,
      .T3 = n1 * (n2 * En - n * El),
      // Sign folded into the bracket so equal masses give +0, not -0.
      .T4 = (n1 * n1 / (2.0 * eps)) * (n * n * El * El - n2 * n2 * En * En),
      .T5 = (n1 * n1 / (2.0 * eps)) * 2.0 * Eb * (n * n * El - n2 * n2 * En),
  };
}

}  // namespace detail

/// Line l+1 -> l from the full five-term expansion.
inline SpectralLine line_wavenumber_full(const RotorSystem& sys, int l) {
  const auto e = detail::line_term_energies(sys, l);
  return {l, wavenumber_from_energy(e.sum()), detail::to_wavenumber(e), ModelKind::KGTaylor2};
}

/// Closed forms of T3, T4, T5 with the B_l differences carried out. With
/// D_n = alpha beta a^2 + n(n+1) k^2 and Delta = (alpha - beta)^2 a^2:
///
///   T3 = B (l+1) alpha beta a^2 Delta / (2 D_l D_{l+1})
///   T4 = -(hc B^2 / 8 eps) (l+1)^3 Delta^2 alpha beta a^2 (alpha beta a^2 + l(l+2) k^2) / (D_l^2 D_{l+1}^2)
///   T5 = -(hc B^2 / 2 eps) (l+1)^3 Delta (2 alpha beta a^2 + l(l+2) k^2) / (D_l D_{l+1})
///
/// The reductions use (l+2) D_l - l D_{l+1} = 2 alpha beta a^2,
/// (l+2) D_l + l D_{l+1} = 2(l+1)(alpha beta a^2 + l(l+2) k^2) and
/// (l+2)^2 D_l - l^2 D_{l+1} = 2(l+1)(2 alpha beta a^2 + l(l+2) k^2).
/// Factors are grouped as dimensionless ratios to keep intermediates in range.
/// T1 and T2 are copied from the generic expansion.
inline LineTerms line_terms_closed_form(const RotorSystem& sys, int l) {
  auto e = detail::line_term_energies(sys, l);
  const auto m = detail::mass_energies(sys);
  const double eps = m.alpha + m.beta;
  const double a2 = sys.bond_length() * sys.bond_length();
  const double k2 = m.hbar_c * m.hbar_c;
  const double Eb = rotational_constant_energy(sys);
  const double n = l;
  const double n1 = n + 1.0;

  const double ab = m.alpha * m.beta * a2;
  const double delta = m.difference * m.difference * a2;
  const double Dl = detail::correction_denominator(sys, l);
  const double Dn = detail::correction_denominator(sys, l + 1);
  const double mid = n * (n + 2.0) * k2;

  e.T3 = 0.5 * Eb * n1 * (delta / Dn) * (ab / Dl);
  e.T4 = -(Eb * Eb / (8.0 * eps)) * n1 * n1 * n1 * (delta / Dl) * (delta / Dn) * (ab / Dl) * ((ab + mid) / Dn);
  e.T5 = -(Eb * Eb / (2.0 * eps)) * n1 * n1 * n1 * (delta / Dl) * ((2.0 * ab + mid) / Dn);
  return detail::to_wavenumber(e);
}

/// Leading-order line: T1 + T3 = 2(l+1)B + (l+1)[(l+2)B_{l+1} - l B_l].
inline double line_wavenumber_approx(const RotorSystem& sys, int l) {
  const auto e = detail::line_term_energies(sys, l);
  return wavenumber_from_energy(e.T1 + e.T3);
}

/// Line l+1 -> l under `model`.
inline SpectralLine line(const RotorSystem& sys, int l, ModelKind model) {
  const auto e = detail::line_term_energies(sys, l);
  switch (model) {
    case ModelKind::NonRelativistic:
      return {l, wavenumber_from_energy(e.T1), {.T1 = wavenumber_from_energy(e.T1)}, model};
    case ModelKind::KGTaylor1:
      return {l, wavenumber_from_energy(e.T1 + e.T3),
              {.T1 = wavenumber_from_energy(e.T1), .T3 = wavenumber_from_energy(e.T3)}, model};
    case ModelKind::KGTaylor2:
      return {l, wavenumber_from_energy(e.sum()), detail::to_wavenumber(e), model};
    case ModelKind::HeteronuclearKGExact:
    case ModelKind::HeteronuclearKGQuartic:
    case ModelKind::HomonuclearKG: {
      const double lower = level(sys, l, model).excitation;
      const double upper = level(sys, l + 1, model).excitation;
      return {l, wavenumber_from_energy(upper - lower), detail::to_wavenumber(e), model};
    }
    case ModelKind::SingleParticle: break;
  }
  throw std::invalid_argument("single-particle model has no two-body line spectrum");
}

struct FirstLine {
  double nu0;            // 2B + 2B_1
  double nu0_mass_form;  // (B/2) (M^2 c^2 a^2 + 8 hbar^2) / (mu M c^2 a^2 + 2 hbar^2)
  double compton_form;   // (B/2) (a~^2 + 8) / (a~ a~0 + 2)
  double a_tilde;        // a / (hbar / M c)
  double a_tilde0;       // a / (hbar / mu c)
};

/// The 1 -> 0 line in three algebraically equivalent forms.
inline FirstLine first_line(const RotorSystem& sys) {
  const auto d = derived_quantities(sys);
  const double B = rotational_constant_B(sys);
  const double B1 = rotational_correction_Bl(sys, 1);
  const double a = sys.bond_length();
  constexpr double c2 = constants::c * constants::c;
  constexpr double hbar2 = constants::hbar * constants::hbar;
  const double M = d.total_mass;
  const double mass_form =
      0.5 * B * (M * M * c2 * a * a + 8.0 * hbar2) / (d.reduced_mass * M * c2 * a * a + 2.0 * hbar2);
  const double compton =
      0.5 * B * (d.a_tilde * d.a_tilde + 8.0) / (d.a_tilde * d.a_tilde_reduced + 2.0);
  return {2.0 * B + 2.0 * B1, mass_form, compton, d.a_tilde, d.a_tilde_reduced};
}

struct Spectrum {
  ModelKind model;
  double B;                      // cm^-1
  std::vector<SpectralLine> lines;  // l = 0..l_max
  std::vector<double> spacing;      // nu(l+1) - nu(l)
  std::vector<double> deviation;    // spacing - 2B
};

/// Lines for l = 0..l_max with their spacings. Expansion-based models get the
/// spacing as 2B plus the differences of T2..T5 (T1 differences to exactly 2B),
/// so a model without those terms is exactly equidistant.
inline Spectrum spectrum(const RotorSystem& sys, int l_max, ModelKind model) {
  if (l_max < 0) throw std::invalid_argument("l_max must be non-negative");
  check_angular_momentum(l_max + 2);
  Spectrum out{model, rotational_constant_B(sys), {}, {}, {}};
  const auto n = static_cast<std::size_t>(l_max) + 1;
  out.lines.reserve(n + 1);
  for (int l = 0; l <= l_max + 1; ++l) out.lines.push_back(line(sys, l, model));

  const bool expansion = model == ModelKind::NonRelativistic || model == ModelKind::KGTaylor1 ||
                         model == ModelKind::KGTaylor2;
  out.spacing.reserve(n);
  out.deviation.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lo = out.lines[i];
    const auto& hi = out.lines[i + 1];
    if (expansion) {
      const double dev = (hi.terms.T2 - lo.terms.T2) + (hi.terms.T3 - lo.terms.T3) +
                         (hi.terms.T4 - lo.terms.T4) + (hi.terms.T5 - lo.terms.T5);
      out.spacing.push_back(2.0 * out.B + dev);
      out.deviation.push_back(dev);
    } else {
      const double d = hi.nu_bar - lo.nu_bar;
      out.spacing.push_back(d);
      out.deviation.push_back(d - 2.0 * out.B);
    }
  }
  out.lines.pop_back();
  return out;
}

}  // namespace kgrotor
