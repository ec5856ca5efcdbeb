#pragma once

// Bond-length inversion from observed line positions.
//
// Every supported line model gives nu(a) strictly decreasing in a (leading
// behaviour 1/a^2), so the search runs on t = ln a over a fixed bracket and
// the first-line equation has at most one root there.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgrotor/lines.hpp"
#include "kgrotor/rotor.hpp"

namespace kgrotor {

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FitOptions {
  double a_min = 1e-13;             // m
  double a_max = 1e-7;              // m
  double relative_tolerance = 1e-10;  // on the observable
  int max_iterations = 200;
};

struct FitResult {
  double a;          // m
  double I;          // kg m^2
  ModelKind model;
  double residual;   // cm^-1; |nu - nu_obs| for one line, RMS over lines otherwise
  int iterations;
};

struct ObservedLine {
  int l;
  double nu_bar;  // cm^-1
};

namespace detail {

inline double model_line(double m1, double m2, double a, int l, ModelKind model) {
  return line(RotorSystem(m1, m2, a), l, model).nu_bar;
}

inline void check_fit_model(double m1, double m2, ModelKind model) {
  if (model == ModelKind::SingleParticle) throw std::invalid_argument("single-particle model cannot be fitted");
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw std::invalid_argument("masses must be positive");
  if (model == ModelKind::HomonuclearKG && !is_homonuclear(RotorSystem(m1, m2, 1.0))) {
    throw std::invalid_argument("homonuclear model requires equal masses");
  }
}

inline FitResult make_result(double m1, double m2, double a, ModelKind model, double residual, int iterations) {
  const double mu = m1 * m2 / (m1 + m2);
  return {a, mu * a * a, model, residual, iterations};
}

}  // namespace detail

/// Solves nu(a; l) = nu_obs for one line. Illinois-modified regula falsi on
/// ln(nu(a) / nu_obs) versus ln a, which is close to linear, with a
/// bisection step whenever the secant step stalls.
inline FitResult fit_bond_length_line(double m1, double m2, int l, double nu_obs, ModelKind model,
                                      const FitOptions& opt = {}) {
  detail::check_fit_model(m1, m2, model);
  if (!(nu_obs > 0.0) || !std::isfinite(nu_obs)) throw std::invalid_argument("observed wavenumber must be positive");

  auto nu = [&](double t) { return detail::model_line(m1, m2, std::exp(t), l, model); };
  auto g = [&](double t) {
    const double v = nu(t);
    if (!(v > 0.0)) throw BracketError("model line is non-positive inside the search bracket");
    return std::log(v / nu_obs);
  };

  double t0 = std::log(opt.a_min);
  double t1 = std::log(opt.a_max);
  double g0 = g(t0);
  double g1 = g(t1);
  if (g0 < 0.0 || g1 > 0.0) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "observed line %.6g cm^-1 lies outside [%.6g, %.6g] cm^-1 spanned by the bond-length bracket",
                  nu_obs, nu(t1), nu(t0));
    throw BracketError(msg);
  }

  int side = 0;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    double t = t1 - g1 * (t1 - t0) / (g1 - g0);
    if (!(t > std::min(t0, t1) && t < std::max(t0, t1))) t = 0.5 * (t0 + t1);
    const double v = nu(t);
    const double gt = std::log(v / nu_obs);
    if (std::abs(v - nu_obs) <= opt.relative_tolerance * nu_obs || gt == 0.0) {
      return detail::make_result(m1, m2, std::exp(t), model, std::abs(v - nu_obs), it);
    }
    if ((gt > 0.0) == (g0 > 0.0)) {
      t0 = t;
      g0 = gt;
      if (side == -1) g1 *= 0.5;
      side = -1;
    } else {
      t1 = t;
      g1 = gt;
      if (side == +1) g0 *= 0.5;
      side = +1;
    }
    if (t0 == t1) break;
  }
  throw BracketError("bond-length search did not converge within the iteration cap");
}

/// The l = 0 line (first rotational line).
inline FitResult fit_bond_length_first_line(double m1, double m2, double nu0_obs,
                                            ModelKind model = ModelKind::HeteronuclearKGExact,
                                            const FitOptions& opt = {}) {
  return fit_bond_length_line(m1, m2, 0, nu0_obs, model, opt);
}

/// Least-squares bond length from several lines: golden-section search on
/// the summed squared residual over ln a, then the stationary point is
/// polished by bisection on the gradient. Golden-section alone only pins the
/// minimiser to about sqrt(machine epsilon).
inline FitResult fit_bond_length_multi_line(double m1, double m2, const std::vector<ObservedLine>& lines,
                                            ModelKind model = ModelKind::HeteronuclearKGExact,
                                            const FitOptions& opt = {}) {
  detail::check_fit_model(m1, m2, model);
  if (lines.empty()) throw std::invalid_argument("no observed lines given");
  std::set<int> seen;
  for (const auto& ln : lines) {
    check_angular_momentum(ln.l);
    if (!seen.insert(ln.l).second) throw std::invalid_argument("duplicate l in observed lines");
    if (!(ln.nu_bar > 0.0) || !std::isfinite(ln.nu_bar)) throw std::invalid_argument("observed wavenumbers must be positive");
  }

  auto sse = [&](double t) {
    const double a = std::exp(t);
    double s = 0.0;
    for (const auto& ln : lines) {
      const double r = detail::model_line(m1, m2, a, ln.l, model) - ln.nu_bar;
      s += r * r;
    }
    return s;
  };
  // d(SSE)/dt up to a factor 2, with d nu / dt by central difference.
  auto gradient = [&](double t) {
    constexpr double h = 1e-6;
    const double a = std::exp(t);
    const double ap = std::exp(t + h);
    const double am = std::exp(t - h);
    double s = 0.0;
    for (const auto& ln : lines) {
      const double r = detail::model_line(m1, m2, a, ln.l, model) - ln.nu_bar;
      const double dnu = (detail::model_line(m1, m2, ap, ln.l, model) - detail::model_line(m1, m2, am, ln.l, model)) / (2.0 * h);
      s += r * dnu;
    }
    return s;
  };

  const double t_lo = std::log(opt.a_min);
  const double t_hi = std::log(opt.a_max);
  constexpr double inv_phi = 0.6180339887498948482;
  double lo = t_lo;
  double hi = t_hi;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = sse(x1);
  double f2 = sse(x2);
  int iterations = 0;
  while (hi - lo > 1e-4 && iterations < opt.max_iterations) {
    ++iterations;
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = sse(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = sse(x2);
    }
  }

  // The gradient must change sign inside the bracket; if it does not, the
  // minimum sits on the bracket edge and the data are out of range.
  lo = std::max(t_lo, lo - 1e-4);
  hi = std::min(t_hi, hi + 1e-4);
  double glo = gradient(lo);
  double ghi = gradient(hi);
  if (glo > 0.0 || ghi < 0.0) {
    throw BracketError("least-squares minimum lies on the edge of the bond-length bracket");
  }
  double t = 0.5 * (lo + hi);
  while (iterations < opt.max_iterations) {
    ++iterations;
    t = 0.5 * (lo + hi);
    if (t == lo || t == hi) break;
    const double gt = gradient(t);
    if (gt == 0.0) break;
    (gt < 0.0 ? lo : hi) = t;
  }
  const double rms = std::sqrt(sse(t) / static_cast<double>(lines.size()));
  return detail::make_result(m1, m2, std::exp(t), model, rms, iterations);
}

}  // namespace kgrotor
