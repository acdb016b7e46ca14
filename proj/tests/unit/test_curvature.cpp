#include <wcurv/curvature.hpp>

#include "../support/fixtures.hpp"

#include <gtest/gtest.h>

namespace {

using namespace wcurv;

CurvatureBundle at(const MetricSpec& s, const Point& p) { return compute_curvature(evaluate_metric(s, p)); }

TEST(Curvature, MinkowskiIsExactlyFlat) {
  const CurvatureBundle cb = at(fixture::minkowski(), {0.3, -1.0, 2.0, 0.5});
  EXPECT_EQ(max_abs(cb.conn.gamma), 0.0);
  EXPECT_EQ(max_abs(cb.riemann.low), 0.0);
  EXPECT_EQ(max_abs(cb.ricci.ricci), 0.0);
  EXPECT_EQ(cb.ricci.scalar.value, 0.0);
  EXPECT_EQ(max_abs(cb.cov_riemann.value), 0.0);
  EXPECT_EQ(max_abs(cb.div.direct), 0.0);
}

TEST(Curvature, ChristoffelMatchesFiniteDifferenceOracle) {
  const oracle::Vec x{0.3, 0.2, -0.4, 0.5};
  const CurvatureBundle cb = at(fixture::generic(), x);
  const oracle::Gamma G = oracle::christoffel(fixture::generic_fn(), x);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) EXPECT_NEAR(cb.conn.gamma(a, b, c).value, G[a][b][c], 1e-9);
}

TEST(Curvature, RiemannMatchesFiniteDifferenceOracle) {
  const oracle::Vec x{0.3, 0.2, -0.4, 0.5};
  const CurvatureBundle cb = at(fixture::generic(), x);
  const auto mixed = oracle::riemann_mixed(fixture::generic_fn(), x);
  const double scale = max_abs(cb.riemann.mixed);
  ASSERT_GT(scale, 1e-3);
  for (int h = 0; h < 4; ++h)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          EXPECT_NEAR(cb.riemann.mixed(h, b, c, d).value, mixed[h][b][c][d], 1e-6 * scale);
  const auto ric = oracle::ricci(mixed);
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(cb.ricci.ricci(b, c).value, ric[b][c], 1e-6 * scale);
}

TEST(Curvature, SchwarzschildIsRicciFlatWithKnownKretschmann) {
  for (double r : {3.0, 4.0, 7.5}) {
    const CurvatureBundle cb = at(fixture::schwarzschild(1.0), {0, r, 1.1, 0.3});
    EXPECT_LT(relative_residual(cb.ricci.ricci), 1e-12);
    const double K = kretschmann(cb.conn, cb.riemann.low).value;
    EXPECT_NEAR(K, oracle::schwarzschild_kretschmann(1.0, r), 1e-12 * K);
  }
}

TEST(Curvature, DeSitterScalarCurvaturePinsSignConvention) {
  const double H = 0.1;
  const CurvatureBundle cb = at(fixture::de_sitter(H), {0, 3.0, 0.9, 0});
  EXPECT_NEAR(cb.ricci.scalar.value, 12 * H * H, 1e-14);
  // Maximally symmetric: R_bc = 3 H^2 g_bc.
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c)
      EXPECT_NEAR(cb.ricci.ricci(b, c).value, 3 * H * H * cb.conn.g(b, c).value, 1e-14);
}

TEST(Curvature, FrwRicciMatchesClosedForm) {
  const double n = 2.0 / 3.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const CurvatureBundle cb = at(fixture::frw(n), {t, 0.1, 0.2, 0.3});
    const auto R = oracle::frw_ricci(n, t);
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) EXPECT_NEAR(cb.ricci.ricci(b, c).value, R[b][c], 1e-12);
  }
}

TEST(Curvature, AlgebraicAndDifferentialIdentitiesHold) {
  for (const Point& p : {Point{0.3, 0.2, -0.4, 0.5}, Point{-0.2, 0.1, 0.3, -0.6}}) {
    const CurvatureBundle cb = at(fixture::generic(), p);
    const RiemannSymmetries s = riemann_symmetries(cb.riemann.low);
    EXPECT_LT(relative_residual(s.antisym_first), 1e-12);
    EXPECT_LT(relative_residual(s.antisym_last), 1e-12);
    EXPECT_LT(relative_residual(s.pair), 1e-12);
    EXPECT_LT(relative_residual(s.first_bianchi), 1e-12);
    EXPECT_LT(relative_residual(cb.cov_riemann.bianchi_residual), 1e-12);
    EXPECT_LT(relative_residual(cb.contracted_bianchi), 1e-12);
    EXPECT_LT(relative_residual(cb.div.residual), 1e-12);
    EXPECT_LT(relative_residual(metric_covariant_derivative(cb.conn)), 1e-12);
  }
}

TEST(Curvature, CovariantRicciMatchesFiniteDifferences) {
  // nabla_a R_bc = d_a R_bc - G^e_ab R_ec - G^e_ac R_be, built from oracle Ricci.
  const MetricSpec s = fixture::generic();
  const Point x{0.3, 0.2, -0.4, 0.5};
  const CurvatureBundle cb = at(s, x);
  const double h = 1e-4;
  for (int a = 0; a < 4; ++a) {
    Point xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    const auto rp = at(s, xp).ricci.ricci, rm = at(s, xm).ricci.ricci;
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double v = (rp(b, c).value - rm(b, c).value) / (2 * h);
        EXPECT_NEAR(cb.ricci.d_ricci(a, b, c).value, v, 1e-6);
        for (int e = 0; e < 4; ++e) {
          v -= cb.conn.gamma(e, a, b).value * cb.ricci.ricci(e, c).value +
               cb.conn.gamma(e, a, c).value * cb.ricci.ricci(b, e).value;
        }
        EXPECT_NEAR(cb.cov_ricci(a, b, c).value, v, 1e-6);
      }
  }
}

}  // namespace
