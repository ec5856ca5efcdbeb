#pragma once

// Energy eigenvalues of the Klein-Gordon rotor.
//
// Notation used below: alpha = m1 c^2, beta = m2 c^2, eps = alpha + beta,
// L = l(l+1), k = hbar c. With the angular operator replaced by its
// eigenvalue the reduced wave equation becomes
//
//   a^2 (W^2 - 2(alpha^2 + beta^2)) / 4k^2 + a^2 (alpha^2 - beta^2)^2 / (4 W^2 k^2) = L
//
// i.e. the quartic a^2 W^4 - (A + B) W^2 + C = 0. Two independent routes to
// the physical root are provided: the closed form (level_closed_form) and a
// quadratic solve plus residual bisection (solve_level_quartic).
//
// Rotational excitations are ~1e-12 of the rest energy for real molecules,
// so W - eps is never formed by subtraction. Each route carries its own
// cancellation-free expression for the excitation.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kgrotor/rotational_constants.hpp"
#include "kgrotor/rotor.hpp"
#include "kgrotor/units.hpp"

namespace kgrotor {

/// Coefficients of a^2 W^4 - (A + B) W^2 + C = 0.
struct QuarticCoefficients {
  double leading;         // a^2
  double mass_term;       // A = 2 a^2 (alpha^2 + beta^2)
  double angular_term;    // B = 4 l(l+1) c^2 hbar^2
  double splitting_term;  // C = a^2 (alpha^2 - beta^2)^2

  /// (A + B)^2 - 4 a^2 C. Non-negative for every physical input.
  double discriminant() const noexcept {
    const double s = mass_term + angular_term;
    return s * s - 4.0 * leading * splitting_term;
  }
};

enum class TaylorOrder { First, Second };

enum class NrForm {
  MassWeighted,  // 2 l(l+1) hbar^2 mu / (I M)
  Textbook,      // l(l+1) hbar^2 / (2 I)
};

inline QuarticCoefficients quartic_coefficients(const RotorSystem& sys, int l) {
  check_angular_momentum(l);
  const auto e = detail::mass_energies(sys);
  const double a2 = sys.bond_length() * sys.bond_length();
  // alpha^2 - beta^2 = (alpha - beta)(alpha + beta), zero for equal masses.
  const double split = e.difference * (e.alpha + e.beta);
  return {
      .leading = a2,
      .mass_term = 2.0 * a2 * (e.alpha * e.alpha + e.beta * e.beta),
      .angular_term = 4.0 * angular_eigenvalue(l) * e.hbar_c * e.hbar_c,
      .splitting_term = a2 * split * split,
  };
}

/// Left-hand side of the reduced wave equation minus l(l+1), evaluated
/// exactly as written. Loses digits when chi is small; see
/// shifted_equation_residual for the well-conditioned form.
inline double level_equation_residual(const RotorSystem& sys, int l, double W) {
  check_angular_momentum(l);
  const auto e = detail::mass_energies(sys);
  const double a2 = sys.bond_length() * sys.bond_length();
  const double k2 = e.hbar_c * e.hbar_c;
  const double split = e.difference * (e.alpha + e.beta);
  return a2 * (W * W - 2.0 * (e.alpha * e.alpha + e.beta * e.beta)) / (4.0 * k2) +
         a2 * split * split / (4.0 * W * W * k2) - angular_eigenvalue(l);
}

/// The same residual written in u = W^2 - eps^2:
///   u (u + 4 alpha beta) / (4 (k^2/a^2) (eps^2 + u)) - l(l+1).
/// Every term is positive, so it is accurate to a few ulps of l(l+1) for any chi.
inline double shifted_equation_residual(const RotorSystem& sys, int l, double u) {
  const auto e = detail::mass_energies(sys);
  const double a = sys.bond_length();
  const double g = (e.hbar_c / a) * (e.hbar_c / a);
  const double eps = e.alpha + e.beta;
  return u * (u + 4.0 * e.alpha * e.beta) / (4.0 * g * (eps * eps + u)) - angular_eigenvalue(l);
}

struct QuarticSolution {
  EnergyLevel level;
  double residual;  // shifted_equation_residual at the returned root
  int iterations;   // bisection steps used by the refinement
};

/// Physical root of the quartic: the + branch of the quadratic in W^2, then
/// the positive square root. The other W^2 root is negative (product of the
/// roots of the shifted quadratic is -4 y eps^2 < 0) and the negative W
/// branches are discarded.
///
/// The quadratic is solved in u = W^2 - eps^2. Substituting W^2 = eps^2 + u
/// into the quartic and using 2 a^2 eps^2 - A = 4 a^2 alpha beta and
/// a^2 eps^4 - A eps^2 + C = 0 leaves
///   u^2 + 4 (alpha beta - y) u - 4 y eps^2 = 0,   y = l(l+1) k^2 / a^2.
/// The root is then polished by bisection on shifted_equation_residual until
/// |residual| <= 1e-12 l(l+1) (1e-12 absolute at l = 0).
inline QuarticSolution solve_level_quartic_detailed(const RotorSystem& sys, int l) {
  const auto q = quartic_coefficients(sys, l);
  const auto e = detail::mass_energies(sys);
  const double eps = e.alpha + e.beta;
  const double y = q.angular_term / (4.0 * q.leading);
  const double p = 2.0 * (e.alpha * e.beta - y);
  const double root = std::sqrt(p * p + 4.0 * y * eps * eps);
  double u = p > 0.0 ? 4.0 * y * eps * eps / (p + root) : root - p;

  const double L = angular_eigenvalue(l);
  const double tol = l == 0 ? 1e-12 : 1e-12 * L;
  auto residual = [&](double v) { return shifted_equation_residual(sys, l, v); };

  double r = residual(u);
  int iterations = 0;
  if (std::abs(r) > tol) {
    // The residual is increasing in u on u >= 0; widen a bracket around the
    // estimate geometrically, then bisect.
    double lo = u;
    double hi = u;
    double step = std::max(u, 1e-300) * 1e-12;
    while (residual(lo) > 0.0 && lo > 0.0) {
      lo = std::max(0.0, lo - step);
      step *= 2.0;
    }
    step = std::max(u, 1e-300) * 1e-12;
    while (residual(hi) < 0.0) {
      hi += step;
      step *= 2.0;
    }
    constexpr int kMaxIterations = 200;
    while (iterations < kMaxIterations) {
      ++iterations;
      u = 0.5 * (lo + hi);
      r = residual(u);
      if (std::abs(r) <= tol || u == lo || u == hi) break;
      (r < 0.0 ? lo : hi) = u;
    }
  }

  const double W = std::sqrt(eps * eps + u);
  return {{l, W, u / (W + eps), ModelKind::HeteronuclearKGQuartic}, r, iterations};
}

inline EnergyLevel solve_level_quartic(const RotorSystem& sys, int l) {
  return solve_level_quartic_detailed(sys, l).level;
}

/// Closed-form eigenvalue
///   W^2 = (alpha^2 + beta^2) + (2/a^2) l(l+1) k^2
///         + (2/a^2) sqrt((alpha^2 a^2 + l(l+1) k^2)(beta^2 a^2 + l(l+1) k^2)).
/// The excitation uses the rationalised difference
///   W^2 - eps^2 = (2 y) [1 + (alpha^2 a^2 + beta^2 a^2 + L k^2) / (S + alpha beta a^2)]
/// with S the square root above.
inline EnergyLevel level_closed_form(const RotorSystem& sys, int l) {
  check_angular_momentum(l);
  const auto e = detail::mass_energies(sys);
  const double a = sys.bond_length();
  const double a2 = a * a;
  const double Lk2 = angular_eigenvalue(l) * e.hbar_c * e.hbar_c;
  const double p1 = e.alpha * e.alpha * a2 + Lk2;
  const double p2 = e.beta * e.beta * a2 + Lk2;
  const double S = std::sqrt(p1 * p2);

  const double W2 = (e.alpha * e.alpha + e.beta * e.beta) + 2.0 / a2 * Lk2 + 2.0 / a2 * S;
  const double W = std::sqrt(W2);

  const double ab_a2 = e.alpha * e.beta * a2;
  const double excess = 2.0 * Lk2 / a2 * (1.0 + (e.alpha * e.alpha * a2 + e.beta * e.beta * a2 + Lk2) / (S + ab_a2));
  const double eps = e.alpha + e.beta;
  return {l, W, excess / (W + eps), ModelKind::HeteronuclearKGExact};
}

/// W = eps sqrt(1 + l(l+1) hbar^2 / (I eps)) with eps = m0 c^2, I = m0 a^2.
inline EnergyLevel level_single_particle(double m0, double a, int l) {
  check_angular_momentum(l);
  if (!(m0 > 0.0) || !(a > 0.0)) throw std::invalid_argument("mass and radius must be positive");
  const double eps = m0 * constants::c * constants::c;
  const double I = m0 * a * a;
  const double z = angular_eigenvalue(l) * constants::hbar * constants::hbar / (I * eps);
  const double root = std::sqrt(1.0 + z);
  return {l, eps * root, eps * z / (root + 1.0), ModelKind::SingleParticle};
}

/// Equal-mass rotor: the single-particle eigenvalue with eps = 2 m c^2 and
/// I = m a^2 / 2. Rejects systems whose masses differ.
inline EnergyLevel level_homonuclear(const RotorSystem& sys, int l) {
  check_angular_momentum(l);
  if (!is_homonuclear(sys)) throw std::invalid_argument("homonuclear model requires equal masses");
  const double m = sys.m1();
  const double a = sys.bond_length();
  const double eps = 2.0 * m * constants::c * constants::c;
  const double I = m * a * a / 2.0;
  const double z = angular_eigenvalue(l) * constants::hbar * constants::hbar / (I * eps);
  const double root = std::sqrt(1.0 + z);
  return {l, eps * root, eps * z / (root + 1.0), ModelKind::HomonuclearKG};
}

/// Non-relativistic excitation (rest energy excluded).
///
/// NrForm::MassWeighted is 2 l(l+1) hbar^2 mu / (I M). It equals the textbook rigid
/// rotor only for equal masses; for unequal masses the small-chi limit of the
/// exact eigenvalue is the textbook value, which is larger by M / (4 mu).
inline double level_nonrel(const RotorSystem& sys, int l, NrForm form = NrForm::MassWeighted) {
  check_angular_momentum(l);
  const double L = angular_eigenvalue(l);
  const double textbook = L * textbook_rotational_constant_energy(sys);
  if (form == NrForm::Textbook) return textbook;
  return textbook * mass_asymmetry_factor(sys);
}

/// Expansions of the exact eigenvalue in powers of hbar^2.
///
/// First:  eps + 2 L k^2 / (a^2 eps) + (alpha - beta)^2 L k^2 / (2 eps (alpha beta a^2 + L k^2))
/// Second: eps + L hcB_Rel - L^2 (hcB_Rel)^2 / (2 eps)
inline EnergyLevel level_taylor(const RotorSystem& sys, int l, TaylorOrder order) {
  check_angular_momentum(l);
  const auto e = detail::mass_energies(sys);
  const double eps = e.alpha + e.beta;
  const double L = angular_eigenvalue(l);
  if (order == TaylorOrder::First) {
    const double a = sys.bond_length();
    const double Lk2 = L * e.hbar_c * e.hbar_c;
    const double nr = 2.0 * Lk2 / (a * a * eps);
    const double corr = 0.5 * e.difference * e.difference * Lk2 / (eps * (e.alpha * e.beta * a * a + Lk2));
    const double x = nr + corr;
    return {l, eps + x, x, ModelKind::KGTaylor1};
  }
  const double Erel = relativistic_coefficient_energy(sys, l);
  const double x = L * Erel - L * L * Erel * Erel / (2.0 * eps);
  return {l, eps + x, x, ModelKind::KGTaylor2};
}

/// Level under any two-body model.
inline EnergyLevel level(const RotorSystem& sys, int l, ModelKind model) {
  switch (model) {
    case ModelKind::HeteronuclearKGExact: return level_closed_form(sys, l);
    case ModelKind::HeteronuclearKGQuartic: return solve_level_quartic(sys, l);
    case ModelKind::HomonuclearKG: return level_homonuclear(sys, l);
    case ModelKind::KGTaylor1: return level_taylor(sys, l, TaylorOrder::First);
    case ModelKind::KGTaylor2: return level_taylor(sys, l, TaylorOrder::Second);
    case ModelKind::NonRelativistic: {
      const double x = level_nonrel(sys, l);
      return {l, derived_quantities(sys).rest_energy + x, x, ModelKind::NonRelativistic};
    }
    case ModelKind::SingleParticle: break;
  }
  throw std::invalid_argument("single-particle model takes one mass; use level_single_particle");
}

}  // namespace kgrotor
