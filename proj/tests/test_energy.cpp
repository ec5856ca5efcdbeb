#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kgrotor/energy.hpp"
#include "support/test_support.hpp"

using namespace kgrotor;
using kgrotor::testing::rel_diff;

namespace {

constexpr double c2 = constants::c * constants::c;

// Mass and bond length with hbar / (m c a) = 1.
struct UnitChi {
  double m = 1.0e-27;
  double a = constants::hbar / (1.0e-27 * constants::c);
  double mc2 = 1.0e-27 * c2;
};

const ModelKind kTwoBodyModels[] = {ModelKind::HeteronuclearKGExact, ModelKind::HeteronuclearKGQuartic,
                                    ModelKind::KGTaylor1, ModelKind::KGTaylor2, ModelKind::NonRelativistic};

}  // namespace

TEST(QuarticCoefficients, TwoToOneAtUnitChi) {
  const UnitChi u;
  const auto q = quartic_coefficients(RotorSystem(2 * u.m, u.m, u.a), 1);
  const double unit = u.mc2 * u.mc2 * u.a * u.a;
  EXPECT_LE(rel_diff(q.mass_term / unit, 10.0), 1e-14);
  EXPECT_LE(rel_diff(q.angular_term / unit, 8.0), 1e-14);
  EXPECT_LE(rel_diff(q.splitting_term / (unit * u.mc2 * u.mc2), 9.0), 1e-14);
  EXPECT_EQ(q.leading, u.a * u.a);
}

TEST(QuarticCoefficients, VanishingTerms) {
  const UnitChi u;
  EXPECT_EQ(quartic_coefficients(RotorSystem(u.m, u.m, u.a), 7).splitting_term, 0.0);
  EXPECT_EQ(quartic_coefficients(RotorSystem(2 * u.m, u.m, u.a), 0).angular_term, 0.0);
}

TEST(QuarticCoefficients, DiscriminantNonNegative) {
  kgrotor::testing::SystemGenerator gen(3);
  for (int i = 0; i < 2000; ++i) {
    const auto r = gen.next();
    const auto q = quartic_coefficients(r.sys, r.l);
    ASSERT_GE(q.discriminant(), 0.0);
    ASSERT_GT(q.mass_term, 0.0);
  }
}

TEST(SolveLevelQuartic, TwoToOneAtUnitChi) {
  const UnitChi u;
  const RotorSystem sys(2 * u.m, u.m, u.a);
  const double expect = std::sqrt(9.0 + 6.0 * std::numbers::sqrt2);
  EXPECT_LE(rel_diff(solve_level_quartic(sys, 1).W / u.mc2, expect), 1e-14);
  EXPECT_NEAR(solve_level_quartic(sys, 1).W / u.mc2, 4.181540, 1e-6);
  // Independent long-double bisection on the reduced wave equation.
  const long double oracle = kgrotor::testing::bisection_eigenvalue(2.0L, 1.0L, 1.0L, 1);
  EXPECT_LE(rel_diff(solve_level_quartic(sys, 1).W / u.mc2, static_cast<double>(oracle)), 1e-14);
}

TEST(SolveLevelQuartic, GroundStateIsRestEnergy) {
  const UnitChi u;
  const RotorSystem sys(2 * u.m, u.m, u.a);
  EXPECT_LE(rel_diff(solve_level_quartic(sys, 0).W, 3 * u.mc2), 1e-15);
  EXPECT_EQ(solve_level_quartic(sys, 0).excitation, 0.0);
}

TEST(SolveLevelQuartic, EqualMassesAtUnitChi) {
  const UnitChi u;
  EXPECT_LE(rel_diff(solve_level_quartic(RotorSystem(u.m, u.m, u.a), 1).W / u.mc2, 2.0 * std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(solve_level_quartic(RotorSystem(u.m, u.m, u.a), 1).W / u.mc2, 3.4641016, 1e-7);
}

TEST(SolveLevelQuartic, ResidualWithinTolerance) {
  kgrotor::testing::SystemGenerator gen(5);
  for (int i = 0; i < 2000; ++i) {
    const auto r = gen.next();
    const auto sol = solve_level_quartic_detailed(r.sys, r.l);
    const double L = angular_eigenvalue(r.l);
    const double u = sol.level.excitation * (sol.level.W + derived_quantities(r.sys).rest_energy);
    ASSERT_LE(std::abs(shifted_equation_residual(r.sys, r.l, u)), 1e-10 * std::max(1.0, L));
    ASSERT_LE(std::abs(sol.residual), r.l == 0 ? 1e-12 : 1e-12 * L);
  }
}

TEST(SolveLevelQuartic, LiteralResidualWhereConditioned) {
  kgrotor::testing::SystemGenerator gen(6, 1.0, 100.0, 1e-2, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto r = gen.next();
    const double W = solve_level_quartic(r.sys, r.l).W;
    const double L = angular_eigenvalue(r.l);
    // The literal form cancels terms of size ~ (M/mu) / chi^2.
    const double scale = 1.0 / (r.chi * r.chi) * 1e4;
    ASSERT_LE(std::abs(level_equation_residual(r.sys, r.l, W)), 1e-14 * scale * std::max(1.0, L));
  }
}

TEST(SolveLevelQuartic, MatchesLongDoubleBisection) {
  kgrotor::testing::SystemGenerator gen(8, 1.0, 100.0, 1e-3, 1.0, 20);
  for (int i = 0; i < 300; ++i) {
    const auto r = gen.next();
    const double mref = std::min(r.sys.m1(), r.sys.m2());
    const long double compton = constants::hbar / (mref * constants::c);
    const long double W = kgrotor::testing::bisection_eigenvalue(
        r.sys.m1() / mref, r.sys.m2() / mref, r.sys.bond_length() / compton, r.l);
    ASSERT_LE(rel_diff(solve_level_quartic(r.sys, r.l).W / (mref * c2), static_cast<double>(W)), 1e-13);
  }
}

TEST(LevelClosedForm, AgreesWithQuarticRoute) {
  kgrotor::testing::SystemGenerator gen(9);
  for (int i = 0; i < 1000; ++i) {
    const auto r = gen.next();
    const auto exact = level_closed_form(r.sys, r.l);
    const auto quartic = solve_level_quartic(r.sys, r.l);
    ASSERT_LE(rel_diff(exact.W, quartic.W), 1e-12);
    ASSERT_LE(rel_diff(exact.excitation, quartic.excitation), 1e-12) << "chi=" << r.chi << " l=" << r.l;
  }
}

TEST(LevelClosedForm, GroundStateIsSumOfRestEnergies) {
  kgrotor::testing::SystemGenerator gen(10);
  for (int i = 0; i < 1000; ++i) {
    const auto s = gen.next().sys;
    const double eps = s.m1() * c2 + s.m2() * c2;
    ASSERT_LE(rel_diff(level_closed_form(s, 0).W, eps), 1e-15);
    ASSERT_EQ(level_closed_form(s, 0).excitation, 0.0);
  }
}

TEST(LevelClosedForm, HomonuclearReduction) {
  kgrotor::testing::SystemGenerator gen(12, 1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto s = gen.next().sys;
    const double m = s.m1();
    const double a = s.bond_length();
    for (int l = 0; l <= 100; ++l) {
      const double L = angular_eigenvalue(l);
      const double k = constants::hbar * constants::c;
      const double expect = 2.0 * std::sqrt(m * m * c2 * c2 + L * k * k / (a * a));
      ASSERT_LE(rel_diff(level_closed_form(s, l).W, expect), 1e-14);
      ASSERT_LE(rel_diff(level_closed_form(s, l).W, level_homonuclear(s, l).W), 1e-14);
    }
  }
}

TEST(LevelClosedForm, ExcitationStableAtTinyChi) {
  // At chi = 1e-6 the excitation is ~1e-12 of W; the stable forms of both
  // routes agree, and the leading term is the textbook rotor.
  const double m1 = 1.007825 * constants::amu, m2 = 34.968853 * constants::amu;
  const RotorSystem s(m1, m2, bond_length_for_chi(m1, m2, 1e-6));
  for (int l = 1; l <= 20; ++l) {
    const double exact = level_closed_form(s, l).excitation;
    ASSERT_LE(rel_diff(exact, solve_level_quartic(s, l).excitation), 1e-13);
    ASSERT_LE(rel_diff(exact, level_nonrel(s, l, NrForm::Textbook)), 1e-9);
  }
}

TEST(LevelSingleParticle, Examples) {
  const UnitChi u;
  EXPECT_EQ(level_single_particle(u.m, u.a, 0).W, u.mc2);
  EXPECT_LE(rel_diff(level_single_particle(u.m, u.a, 1).W, std::sqrt(3.0) * u.mc2), 1e-15);
  for (int l = 0; l < 100; ++l) {
    ASSERT_GT(level_single_particle(u.m, u.a, l + 1).W, level_single_particle(u.m, u.a, l).W);
  }
  EXPECT_THROW(level_single_particle(0.0, u.a, 1), std::invalid_argument);
}

TEST(LevelHomonuclear, RejectsUnequalMasses) {
  const UnitChi u;
  EXPECT_THROW(level_homonuclear(RotorSystem(2 * u.m, u.m, u.a), 1), std::invalid_argument);
  EXPECT_NO_THROW(level_homonuclear(RotorSystem(u.m, u.m * (1 + 1e-14), u.a), 1));
}

TEST(LevelNonrel, Examples) {
  const UnitChi u;
  const RotorSystem equal(u.m, u.m, u.a);
  for (int l = 0; l < 10; ++l) {
    EXPECT_LE(rel_diff(level_nonrel(equal, l), level_nonrel(equal, l, NrForm::Textbook)), 1e-15);
  }
  EXPECT_LE(rel_diff(level_nonrel(RotorSystem(2 * u.m, u.m, u.a), 1), 4.0 / 3.0 * u.mc2), 1e-14);
  EXPECT_EQ(level_nonrel(RotorSystem(2 * u.m, u.m, u.a), 0), 0.0);
}

TEST(LevelTaylor, EqualMassesHaveNoCorrection) {
  const UnitChi u;
  const RotorSystem s(u.m, u.m, 1e3 * u.a);
  const double eps = 2 * u.mc2;
  for (int l = 0; l < 10; ++l) {
    const auto t = level_taylor(s, l, TaylorOrder::First);
    EXPECT_LE(rel_diff(t.excitation, level_nonrel(s, l, NrForm::Textbook)), 1e-14);
    EXPECT_EQ(t.W, eps + t.excitation);
  }
}

TEST(LevelTaylor, FirstOrderEqualsRotationalCoefficientForm) {
  kgrotor::testing::SystemGenerator gen(13);
  for (int i = 0; i < 1000; ++i) {
    const auto r = gen.next();
    const double L = angular_eigenvalue(r.l);
    const double expect = L * (rotational_constant_energy(r.sys) + rotational_correction_energy(r.sys, r.l));
    ASSERT_LE(rel_diff(level_taylor(r.sys, r.l, TaylorOrder::First).excitation, expect), 1e-12);
  }
}

TEST(LevelTaylor, ConvergesToClosedFormAtSmallChi) {
  kgrotor::testing::SystemGenerator gen(14, 1.0, 100.0, 1e-6, 1e-3, 10);
  for (int i = 0; i < 1000; ++i) {
    const auto r = gen.next();
    if (r.l == 0) continue;
    const double exact = level_closed_form(r.sys, r.l).excitation;
    for (auto order : {TaylorOrder::First, TaylorOrder::Second}) {
      ASSERT_LE(std::abs(level_taylor(r.sys, r.l, order).excitation - exact) / exact, 1e-4);
    }
  }
}

TEST(Levels, RestEnergyFloorForRelativisticModels) {
  kgrotor::testing::SystemGenerator gen(15);
  for (int i = 0; i < 500; ++i) {
    const auto s = gen.next().sys;
    const double eps = derived_quantities(s).rest_energy;
    for (auto m : kTwoBodyModels) {
      const auto lv = level(s, 0, m);
      ASSERT_LE(rel_diff(lv.W, eps), 1e-15) << model_name(m);
      ASSERT_EQ(lv.excitation, 0.0);
    }
  }
}

TEST(Levels, StrictlyIncreasingInL) {
  kgrotor::testing::SystemGenerator gen(16);
  for (int i = 0; i < 200; ++i) {
    const auto r = gen.next();
    const double eps = derived_quantities(r.sys).rest_energy;
    for (auto m : kTwoBodyModels) {
      for (int l = 0; l < 60; ++l) {
        // The second-order expansion turns over once L hcB_Rel ~ eps; only
        // test it inside its convergence region.
        if (m == ModelKind::KGTaylor2 &&
            angular_eigenvalue(l + 1) * relativistic_coefficient_energy(r.sys, l + 1) > 0.5 * eps) {
          break;
        }
        ASSERT_GT(level(r.sys, l + 1, m).excitation, level(r.sys, l, m).excitation)
            << model_name(m) << " l=" << l << " chi=" << r.chi;
      }
    }
  }
}

TEST(Levels, NonRelativisticConvergence) {
  // |W - eps - E_nr| / E_nr shrinks monotonically as chi decreases. For
  // equal masses the two NR forms coincide; for unequal masses the exact
  // rotor tends to the textbook form.
  for (double ratio : {1.0, 2.0, 35.0}) {
    const double m1 = 1.0 * constants::amu, m2 = ratio * constants::amu;
    for (int l = 1; l <= 10; ++l) {
      double previous = std::numeric_limits<double>::infinity();
      for (double chi : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
        const RotorSystem s(m1, m2, bond_length_for_chi(m1, m2, chi));
        const double nr = level_nonrel(s, l, NrForm::Textbook);
        const double ratio_dev = std::abs(level_closed_form(s, l).excitation - nr) / nr;
        ASSERT_LT(ratio_dev, previous);
        if (chi <= 1e-3) {
          ASSERT_LE(ratio_dev, 1e-4);
        }
        previous = ratio_dev;
      }
    }
  }
}

TEST(Levels, MassWeightedNrFactorForUnequalMasses) {
  // The 2 mu / M form differs from the small-chi limit by 4 mu / M.
  const double m1 = 1.0 * constants::amu, m2 = 2.0 * constants::amu;
  const RotorSystem s(m1, m2, bond_length_for_chi(m1, m2, 1e-6));
  const auto d = derived_quantities(s);
  const double ratio = level_nonrel(s, 3) / level_closed_form(s, 3).excitation;
  EXPECT_NEAR(ratio, 4.0 * d.reduced_mass / d.total_mass, 1e-9);
}

TEST(Levels, AngularMomentumBounds) {
  const UnitChi u;
  const RotorSystem s(u.m, 2 * u.m, u.a);
  EXPECT_THROW(level_closed_form(s, -1), std::invalid_argument);
  EXPECT_THROW(level_closed_form(s, 1'000'001), std::invalid_argument);
  EXPECT_NO_THROW(level_closed_form(s, 1'000'000));
  EXPECT_THROW(level(s, 1, ModelKind::SingleParticle), std::invalid_argument);
}
