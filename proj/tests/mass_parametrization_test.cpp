#include "ptdirac/mass_parametrization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ptdirac/dirac_hamiltonian.hpp"
#include "ptdirac/grid.hpp"
#include "support/oracles.hpp"
#include "support/sampling.hpp"

namespace ptdirac {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

TEST(MassParams, DerivedQuantities) {
  const MassParams mp(5.0, 4.0);
  EXPECT_EQ(mp.m(), 3.0);
  EXPECT_EQ(mp.m_max(), 25.0 / 8.0);
  EXPECT_NEAR(*mp.alpha(), std::atanh(0.8), 1e-15);
  EXPECT_NEAR(*mp.theta(), std::asin(0.8), 1e-15);

  const MassParams hermitian(2.0, 0.0);
  EXPECT_FALSE(hermitian.m_max().has_value());
  EXPECT_EQ(hermitian.alpha(), 0.0);
  EXPECT_EQ(hermitian.theta(), 0.0);

  const MassParams broken(1.0, 2.0);
  EXPECT_FALSE(broken.m().has_value());
  EXPECT_FALSE(broken.alpha().has_value());
  EXPECT_FALSE(broken.theta().has_value());

  const MassParams exceptional(1.0, -1.0);
  EXPECT_EQ(exceptional.m(), 0.0);
  EXPECT_FALSE(exceptional.alpha().has_value());
  EXPECT_NEAR(*exceptional.theta(), kPi / 2, 1e-15);
}

TEST(MassParams, Validation) {
  EXPECT_THROW(MassParams(-1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(MassParams(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(MassParams(std::nan(""), 0.0), std::invalid_argument);
  EXPECT_NO_THROW(MassParams(0.0, 0.0));
}

TEST(MassParams, ThetaTwoExpressionsAgree) {
  testing::Sampler s(5);
  for (int i = 0; i < 1000; ++i) {
    const double m1 = s.uniform(0.01, 10.0);
    const double m2 = s.uniform(-1.0, 1.0) * m1;
    const MassParams mp(m1, m2);
    if (m2 == 0.0) continue;
    EXPECT_NEAR(*mp.theta(), std::asin(m1 / (2.0 * *mp.m_max())), 1e-12);
  }
}

TEST(GeometricParams, MassShell) {
  const GeometricParams g(10.0, kPi / 6);
  EXPECT_NEAR(g.m(), 5.0, 1e-14);
  EXPECT_NEAR(g.p5(), std::sqrt(100.0 - 25.0), 1e-13);
  EXPECT_THROW(GeometricParams(-1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(GeometricParams(1.0, 2.0), std::invalid_argument);
}

TEST(MassBound, Values) {
  EXPECT_EQ(mass_bound(1.0, 0.5), 1.0);
  EXPECT_EQ(mass_bound(5.0, 4.0), 3.125);
  EXPECT_EQ(mass_bound(1.0, -0.5), 1.0);
  EXPECT_FALSE(mass_bound(1.0, 0.0).has_value());
  // Maximon: the bound is attained at m2 = m1 / sqrt(2).
  EXPECT_NEAR(*mass_bound(kSqrt2, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(physical_mass(kSqrt2, 1.0).real(), 1.0, 1e-15);
}

TEST(MassBound, TheoremOnRandomSamples) {
  // m_max - m = (m - |m2|)^2 / (2|m2|): zero exactly when |m2| = m1 / sqrt(2).
  testing::Sampler s(13);
  int on_locus_count = 0;
  for (int i = 0; i < 100000; ++i) {
    const double m1 = s.uniform(1e-3, 10.0);
    double m2 = s.uniform(-1.0, 1.0) * m1;
    if (i % 1000 == 0) m2 = m1 / kSqrt2;
    if (m2 == 0.0) continue;
    const double m = physical_mass(m1, m2).real();
    const double bound = *mass_bound(m1, m2);
    ASSERT_LE(m, bound * (1.0 + 4e-16)) << m1 << ", " << m2;
    const double slack = oracle::mass_bound_slack(m1, m2);
    EXPECT_NEAR(bound - m, slack, 1e-13 * bound);
    const bool on_locus = std::abs(std::abs(m2) - m1 / kSqrt2) <= 1e-9;
    if (on_locus) {
      ++on_locus_count;
      EXPECT_LE(bound - m, 1e-14 * bound);
    } else {
      EXPECT_GT(slack, 0.0) << m1 << ", " << m2;
    }
  }
  EXPECT_GE(on_locus_count, 100);
}

TEST(HyperbolicParams, Values) {
  const auto h = hyperbolic_params(1.0, 0.0);
  EXPECT_EQ(h.m1(), 1.0);
  EXPECT_EQ(h.m2(), 0.0);

  const auto maximon = hyperbolic_params(1.0, std::atanh(1.0 / kSqrt2));
  EXPECT_NEAR(maximon.m1(), kSqrt2, 1e-14);
  EXPECT_NEAR(maximon.m2(), 1.0, 1e-14);

  const auto triple = hyperbolic_params(3.0, std::atanh(0.8));
  EXPECT_NEAR(triple.m1(), 5.0, 1e-14);
  EXPECT_NEAR(triple.m2(), 4.0, 1e-14);
  EXPECT_THROW(hyperbolic_params(0.0, 1.0), std::invalid_argument);
}

TEST(HyperbolicParams, RoundTrip) {
  testing::Sampler s(19);
  for (int i = 0; i < 1000; ++i) {
    const double m = s.uniform(0.1, 10.0);
    const double a = s.uniform(-3.0, 3.0);
    const auto mp = hyperbolic_params(m, a);
    EXPECT_NEAR(*mp.m(), m, 1e-12 * std::cosh(a) * std::cosh(a) * m);
    EXPECT_NEAR(*mp.alpha(), a, 1e-12);
  }
}

TEST(TanhAlphaBranches, Values) {
  auto r = tanh_alpha_branches(1.0);
  EXPECT_NEAR(r.ordinary, 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(r.exotic, 1.0 / kSqrt2, 1e-15);
  r = tanh_alpha_branches(0.0);
  EXPECT_EQ(r.ordinary, 0.0);
  EXPECT_EQ(r.exotic, 1.0);
  EXPECT_THROW(tanh_alpha_branches(1.01), std::domain_error);
  EXPECT_THROW(tanh_alpha_branches(-0.01), std::domain_error);
}

TEST(TanhAlphaBranches, MatchesRootScanOracle) {
  for (double nu : {0.1, 0.35, 0.6, 0.9, 0.99}) {
    const auto f = [nu](double t) { return 4.0 * t * t * (1.0 - t * t) - nu * nu; };
    const auto roots = oracle::scan_roots(f, 0.0, 1.0);
    ASSERT_EQ(roots.size(), 2u) << "nu=" << nu;
    const auto r = tanh_alpha_branches(nu);
    EXPECT_NEAR(r.ordinary, roots[0], 1e-10);
    EXPECT_NEAR(r.exotic, roots[1], 1e-10);
    EXPECT_NEAR(2.0 * r.ordinary * std::sqrt(1.0 - r.ordinary * r.ordinary), nu, 1e-14);
    EXPECT_NEAR(2.0 * r.exotic * std::sqrt(1.0 - r.exotic * r.exotic), nu, 1e-12);
  }
  // Frozen from the scan at nu = 0.6: t^2 in {0.1, 0.9}.
  const auto r = tanh_alpha_branches(0.6);
  EXPECT_NEAR(r.ordinary, 0.31622776601683794, 1e-14);
  EXPECT_NEAR(r.exotic, 0.94868329805051377, 1e-14);
}

TEST(BranchPoint, Values) {
  for (auto b : {BranchId::Ordinary, BranchId::Exotic}) {
    const auto pt = branch_point(1.0, b);
    EXPECT_EQ(pt.nu, 1.0);
    EXPECT_NEAR(pt.nu1, kSqrt2, 1e-15);
    EXPECT_EQ(pt.nu2, 1.0);
  }
  auto pt = branch_point(0.0, BranchId::Ordinary);
  EXPECT_EQ(pt.nu1, 0.0);
  EXPECT_EQ(pt.nu2, 0.0);
  pt = branch_point(0.0, BranchId::Exotic);
  EXPECT_EQ(pt.nu1, 2.0);
  EXPECT_EQ(pt.nu2, 2.0);
  pt = branch_point(0.6, BranchId::Ordinary);
  EXPECT_NEAR(pt.nu2, 0.2, 1e-15);
  EXPECT_NEAR(pt.nu1, 0.63245553203367587, 1e-15);
  EXPECT_NEAR(pt.nu1 * pt.nu1 - pt.nu2 * pt.nu2, 0.36, 1e-15);
  EXPECT_THROW(branch_point(1.5, BranchId::Ordinary), std::domain_error);
}

TEST(BranchPoint, InvariantsOnGrid) {
  for (double nu : linspace(0.0, 1.0, 1001)) {
    const auto ord = branch_point(nu, BranchId::Ordinary);
    const auto exo = branch_point(nu, BranchId::Exotic);
    for (const auto& pt : {ord, exo}) {
      EXPECT_NEAR(pt.nu1 * pt.nu1 - pt.nu2 * pt.nu2, nu * nu, 1e-12);
      EXPECT_NEAR(pt.nu1 * pt.nu1, 2.0 * pt.nu2, 1e-12);
      EXPECT_GE(pt.nu1, 0.0);
      EXPECT_LE(pt.nu1, 2.0);
      EXPECT_GE(pt.nu2, 0.0);
      EXPECT_LE(pt.nu2, 2.0);
      EXPECT_GE(pt.nu1, nu - 1e-15);
    }
    EXPECT_LE(ord.nu1, kSqrt2 + 1e-15);
    EXPECT_GE(exo.nu1, kSqrt2 - 1e-15);
  }
}

TEST(BranchPoint, RoundTripThroughMassParams) {
  testing::Sampler s(23);
  for (int i = 0; i < 2000; ++i) {
    const double nu = s.uniform(0.0, 1.0);
    const double m_max = std::exp(s.uniform(-3.0, 6.0));
    for (auto b : {BranchId::Ordinary, BranchId::Exotic}) {
      const auto pt = branch_point(nu, b);
      const MassParams mp(pt.nu1 * m_max, pt.nu2 * m_max);
      if (mp.m2() == 0.0) continue;
      EXPECT_NEAR(*mp.m() / *mp.m_max(), nu, 1e-12) << to_string(b);
    }
  }
}

TEST(GeometricMaps, Ordinary) {
  auto mp = geometric_ordinary(3.0, 0.0);
  EXPECT_EQ(mp.m1(), 0.0);
  EXPECT_EQ(mp.m2(), 0.0);
  mp = geometric_ordinary(2.0, kPi / 2);
  EXPECT_NEAR(mp.m1(), kSqrt2 * 2.0, 1e-14);
  EXPECT_NEAR(mp.m2(), 2.0, 1e-14);
  mp = geometric_ordinary(10.0, kPi / 6);
  EXPECT_NEAR(mp.m1(), 5.1763809020504152, 1e-13);
  EXPECT_NEAR(mp.m2(), 1.3397459621556135, 1e-13);
  EXPECT_NEAR(*mp.m(), 5.0, 1e-13);
  EXPECT_NEAR(*mp.m_max(), 10.0, 1e-13);
  EXPECT_THROW(geometric_ordinary(0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(geometric_ordinary(1.0, -0.1), std::invalid_argument);
}

TEST(GeometricMaps, Exotic) {
  auto mp = geometric_exotic(2.0, kPi / 2);
  EXPECT_NEAR(mp.m1(), kSqrt2 * 2.0, 1e-14);
  EXPECT_NEAR(mp.m2(), 2.0, 1e-14);
  mp = geometric_exotic(1.5, 0.0);
  EXPECT_EQ(mp.m1(), 3.0);
  EXPECT_EQ(mp.m2(), 3.0);
  EXPECT_EQ(mp.m(), 0.0);
  mp = geometric_exotic(10.0, kPi / 6);
  EXPECT_NEAR(mp.m1(), 19.318516525781366, 1e-13);
  EXPECT_NEAR(mp.m2(), 18.660254037844386, 1e-13);
  EXPECT_NEAR(mp.m1() * mp.m1() - mp.m2() * mp.m2(), 25.0, 1e-11);
}

TEST(GeometricMaps, AgreeWithAlgebraicBranches) {
  for (double M : {0.5, 1.0, 10.0, 1000.0}) {
    for (double mu : linspace(0.0, kPi / 2, 501)) {
      const auto ord = geometric_ordinary(M, mu);
      const auto exo = geometric_exotic(M, mu);
      const double nu = std::sin(mu);
      const auto b_ord = branch_point(nu, BranchId::Ordinary);
      const auto b_exo = branch_point(nu, BranchId::Exotic);
      EXPECT_NEAR(ord.m1(), M * b_ord.nu1, 1e-12 * M);
      EXPECT_NEAR(ord.m2(), M * b_ord.nu2, 1e-12 * M);
      EXPECT_NEAR(exo.m1(), M * b_exo.nu1, 1e-12 * M);
      EXPECT_NEAR(exo.m2(), M * b_exo.nu2, 1e-12 * M);
      EXPECT_NEAR(*ord.m(), M * nu, 1e-12 * M);
      EXPECT_NEAR(*exo.m(), M * nu, 1e-7 * M);  // sqrt of a difference of near-equal squares
      if (mu > 0.0) {
        EXPECT_NEAR(*ord.m_max(), M, 1e-12 * M);
        EXPECT_NEAR(*exo.m_max(), M, 1e-12 * M);
      }
    }
  }
}

TEST(FlatLimit, OrdinaryConvergesExoticDiverges) {
  const double m = 1.0;
  double prev_gap = std::numeric_limits<double>::infinity();
  double prev_m2 = std::numeric_limits<double>::infinity();
  for (double m_max : {10.0, 100.0, 1000.0, 10000.0}) {
    const auto ord = branch_point(m / m_max, BranchId::Ordinary);
    const double m1 = ord.nu1 * m_max, m2 = ord.nu2 * m_max;
    EXPECT_LT(std::abs(m1 - m), prev_gap);
    EXPECT_LT(m2, prev_m2);
    prev_gap = std::abs(m1 - m);
    prev_m2 = m2;
    // First-order rate: m2 ~ m^2 / (2 m_max).
    EXPECT_NEAR(m2 * 2.0 * m_max, m * m, 0.01 * 100.0 / m_max);

    const auto exo = branch_point(m / m_max, BranchId::Exotic);
    EXPECT_NEAR(exo.nu1 * m_max / (2.0 * m_max), 1.0, 0.01);
  }
}

TEST(Fig1Curves, Values) {
  const auto rows = fig1_curves({0.0, maximon_alpha(), 5.0});
  EXPECT_EQ(rows[0].nu, 0.0);
  EXPECT_EQ(rows[0].nu1, 0.0);
  EXPECT_EQ(rows[0].nu2, 0.0);
  EXPECT_NEAR(rows[1].alpha, 0.88137358701954303, 1e-15);
  EXPECT_NEAR(rows[1].nu, 1.0, 1e-15);
  EXPECT_NEAR(rows[1].nu1, kSqrt2, 1e-15);
  EXPECT_NEAR(rows[1].nu2, 1.0, 1e-15);
  EXPECT_NEAR(rows[2].nu1, 2.0, 1e-3);
  EXPECT_NEAR(rows[2].nu2, 2.0, 1e-3);
  EXPECT_LT(rows[2].nu, 0.03);
  EXPECT_THROW(fig1_curves({-0.1}), std::invalid_argument);
}

TEST(Fig1Curves, RowsAreNuPoints) {
  for (const auto& row : fig1_curves(linspace(0.0, 6.0, 2001))) {
    EXPECT_NEAR(row.nu1 * row.nu1 - row.nu2 * row.nu2, row.nu * row.nu, 1e-12);
    EXPECT_NEAR(row.nu1 * row.nu1, 2.0 * row.nu2, 1e-12);
    EXPECT_LE(row.nu, 1.0 + 1e-15);
    // Each row reproduces the hyperbolic parametrization at unit mass.
    if (row.alpha > 0.0) {
      const auto mp = hyperbolic_params(1.0, row.alpha);
      const double m_max = *mp.m_max();
      EXPECT_NEAR(row.nu, 1.0 / m_max, 1e-12);
      EXPECT_NEAR(row.nu1, mp.m1() / m_max, 1e-12);
    }
  }
}

TEST(Fig1Curves, PeakLocatedByGridSearch) {
  const auto rows = fig1_curves(linspace(0.0, 3.0, 10000));
  const auto best = oracle::argmax(rows, [](const Fig1Row& r) { return r.nu; });
  ASSERT_GT(best, 0u);
  ASSERT_LT(best + 1, rows.size());
  EXPECT_NEAR(rows[best].alpha, maximon_alpha(), 3e-4);  // one grid spacing
  const double peak = oracle::parabolic_vertex(rows[best - 1].alpha, rows[best].alpha,
                                               rows[best + 1].alpha, rows[best - 1].nu,
                                               rows[best].nu, rows[best + 1].nu);
  EXPECT_NEAR(peak, maximon_alpha(), 1e-4);
  EXPECT_NEAR(peak, 0.881, 5e-4);
}

TEST(Fig2Curves, Values) {
  const auto rows = fig2_curves({0.0, 0.6, 1.0});
  EXPECT_EQ(rows[0].nu1, 0.0);
  EXPECT_EQ(rows[0].nu2, 0.0);
  EXPECT_EQ(rows[0].nu3, 2.0);
  EXPECT_EQ(rows[0].nu4, 2.0);
  EXPECT_NEAR(rows[2].nu1, kSqrt2, 1e-15);
  EXPECT_NEAR(rows[2].nu3, kSqrt2, 1e-15);
  EXPECT_EQ(rows[2].nu2, 1.0);
  EXPECT_EQ(rows[2].nu4, 1.0);
  for (const auto& r : fig2_curves(linspace(0.0, 1.0, 1000))) {
    EXPECT_NEAR(r.nu1 * r.nu1 - r.nu2 * r.nu2, r.nu * r.nu, 1e-12);
    EXPECT_NEAR(r.nu3 * r.nu3 - r.nu4 * r.nu4, r.nu * r.nu, 1e-12);
  }
  EXPECT_THROW(fig2_curves({1.2}), std::domain_error);
}

TEST(Grid, Linspace) {
  const auto g = linspace(0.0, 1.0, 11);
  EXPECT_EQ(g.size(), 11u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_EQ(g[5], 0.5);
  EXPECT_THROW(linspace(0.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(linspace(1.0, 1.0, 5), std::invalid_argument);
  const auto c = cell_centers(-2.0, 2.0, 401);
  EXPECT_EQ(c[200], 0.0);
  EXPECT_NEAR(c.front(), -2.0 + 2.0 / 401, 1e-15);
}

}  // namespace
}  // namespace ptdirac
