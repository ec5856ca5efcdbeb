#include <gtest/gtest.h>

#include "kgrotor/rotor.hpp"
#include "support/test_support.hpp"

using namespace kgrotor;
using kgrotor::testing::rel_diff;

TEST(RotorSystem, RejectsNonPhysicalInput) {
  EXPECT_THROW(RotorSystem(0.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(RotorSystem(1.0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(RotorSystem(1.0, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(RotorSystem(1.0, 1.0, std::nan("")), std::invalid_argument);
  EXPECT_THROW(RotorSystem(1.0, std::numeric_limits<double>::infinity(), 1.0), std::invalid_argument);
}

TEST(DerivedQuantities, EqualMasses) {
  const double m = 3.0e-27, a = 1.1e-10;
  const auto d = derived_quantities(RotorSystem(m, m, a));
  EXPECT_EQ(d.reduced_mass, m / 2);
  EXPECT_EQ(d.total_mass, 2 * m);
  EXPECT_DOUBLE_EQ(d.inertia, m * a * a / 2);
  EXPECT_DOUBLE_EQ(d.rest_energy, 2 * m * constants::c * constants::c);
}

TEST(DerivedQuantities, TwoToOneMasses) {
  const double m = 3.0e-27, a = 1.1e-10;
  const auto d = derived_quantities(RotorSystem(2 * m, m, a));
  EXPECT_LE(rel_diff(d.reduced_mass, 2 * m / 3), 1e-15);
  EXPECT_EQ(d.total_mass, 3 * m);
  EXPECT_LE(rel_diff(d.inertia, 2 * m / 3 * a * a), 1e-15);
  EXPECT_LE(rel_diff(d.rest_energy, 3 * m * constants::c * constants::c), 1e-15);
}

TEST(DerivedQuantities, HydrogenChloride) {
  // mpmath: mu = 0.97959253909644707565 amu, I = 2.6426667136947132964e-47 kg m^2
  const auto sys = RotorSystem::from_amu_angstrom(1.007825031898, 34.968852694, 1.2746);
  const auto d = derived_quantities(sys);
  EXPECT_LE(rel_diff(d.reduced_mass / constants::amu, 0.97959253909644707565), 1e-14);
  EXPECT_LE(rel_diff(d.inertia, 2.6426667136947132964e-47), 1e-14);
  EXPECT_NEAR(d.reduced_mass / constants::amu, 0.979593, 1e-6);
}

TEST(DerivedQuantities, PropertiesOverRandomSystems) {
  kgrotor::testing::SystemGenerator gen(11);
  for (int i = 0; i < 2000; ++i) {
    const auto s = gen.next().sys;
    const auto d = derived_quantities(s);
    const auto swapped = derived_quantities(RotorSystem(s.m2(), s.m1(), s.bond_length()));
    ASSERT_LE(d.reduced_mass, std::min(s.m1(), s.m2()));
    ASSERT_EQ(d.total_mass, swapped.total_mass);
    ASSERT_LE(rel_diff(d.reduced_mass, swapped.reduced_mass), 1e-15);
    ASSERT_LE(rel_diff(d.inertia, swapped.inertia), 1e-15);
    const double a = s.bond_length();
    const double expect = a * a * d.reduced_mass * d.total_mass * constants::c * constants::c /
                          (constants::hbar * constants::hbar);
    ASSERT_LE(rel_diff(d.a_tilde * d.a_tilde_reduced, expect), 1e-14);
    ASSERT_LE(rel_diff(d.chi * d.a_tilde_reduced, 1.0), 1e-15);
  }
}

TEST(ModelKind, NamesRoundTrip) {
  for (auto m : {ModelKind::SingleParticle, ModelKind::HomonuclearKG, ModelKind::HeteronuclearKGExact,
                 ModelKind::HeteronuclearKGQuartic, ModelKind::KGTaylor1, ModelKind::KGTaylor2,
                 ModelKind::NonRelativistic}) {
    EXPECT_EQ(parse_model(model_name(m)), m);
  }
  EXPECT_EQ(parse_model("approx"), ModelKind::KGTaylor1);
  EXPECT_THROW(parse_model("dirac"), std::invalid_argument);
}
