// Recover a bond length from a first-line position and from a set of lines.

#include <cstdio>
#include <vector>

#include "kgrotor/kgrotor.hpp"

int main() {
  using namespace kgrotor;
  const auto& masses = default_mass_table();
  const double m1 = masses.mass_amu("1H") * constants::amu;
  const double m2 = masses.mass_amu("35Cl") * constants::amu;

  const RotorSystem truth(m1, m2, 1.2746e-10);
  const double nu0 = line(truth, 0, ModelKind::HeteronuclearKGExact).nu_bar;
  const auto one = fit_bond_length_first_line(m1, m2, nu0);
  std::printf("nu0 = %.12f cm^-1 -> a = %.12f A after %d iterations\n", nu0, one.a * 1e10, one.iterations);

  std::vector<ObservedLine> lines;
  for (int l = 0; l < 6; ++l) lines.push_back({l, line(truth, l, ModelKind::HeteronuclearKGExact).nu_bar});
  const auto many = fit_bond_length_multi_line(m1, m2, lines);
  std::printf("6 lines -> a = %.12f A, rms residual %.3e cm^-1\n", many.a * 1e10, many.residual);

  try {
    fit_bond_length_first_line(m1, m2, 1e30);
  } catch (const BracketError& e) {
    std::printf("absurd input: %s\n", e.what());
  }
}
