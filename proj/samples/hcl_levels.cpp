// Rotational levels of H-35Cl under the exact and expanded models.

#include <cstdio>

#include "kgrotor/kgrotor.hpp"

int main() {
  using namespace kgrotor;
  const auto& masses = default_mass_table();
  const auto hcl = resolve_system("HCl", masses, default_presets());
  const auto d = derived_quantities(hcl);

  std::printf("HCl: mu = %.6f amu, I = %.6e kg m^2, chi = %.3e\n", d.reduced_mass / constants::amu, d.inertia, d.chi);
  std::printf("B = %.6f cm^-1 (textbook %.6f cm^-1)\n\n", rotational_constant_B(hcl), textbook_rotational_constant(hcl));

  std::printf("%3s  %22s  %22s  %22s\n", "l", "exact W-eps [cm^-1]", "taylor2 W-eps [cm^-1]", "B_l [cm^-1]");
  for (int l = 0; l <= 5; ++l) {
    const double exact = wavenumber_from_energy(level(hcl, l, ModelKind::HeteronuclearKGExact).excitation);
    const double taylor = wavenumber_from_energy(level(hcl, l, ModelKind::KGTaylor2).excitation);
    std::printf("%3d  %22.15g  %22.15g  %22.15g\n", l, exact, taylor, rotational_correction_Bl(hcl, l));
  }
}
