#include <wcurv/error.hpp>
#include <wcurv/matter.hpp>

#include "../support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace wcurv;

std::array<expr::Expression, 4> exprs(std::array<const char*, 4> s) {
  std::array<expr::Expression, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = expr::parse(s[i]);
  return out;
}

struct Scene {
  MetricSpec spec;
  Point p;
  CurvatureBundle cb;
  expr::Bindings b;
  Scene(MetricSpec s, Point pt)
      : spec(std::move(s)), p(pt), cb(compute_curvature(evaluate_metric(spec, p))), b(spec.bindings(p)) {}

  FlowValue flow(std::array<const char*, 4> u) const {
    return evaluate_flow(FluidSpec{make_field_vector(exprs(u), spec.chart())}, cb, b, "test");
  }
  SymmetryReport symmetry(std::array<const char*, 4> xi, const StressEnergy& se) const {
    return symmetry_check(VectorFieldSpec{make_field_vector(exprs(xi), spec.chart())}, b, se.T,
                          se.partial, cb);
  }
};

TEST(StressEnergy, VanishesForVacuumAndPureLambda) {
  const Scene m(fixture::minkowski(), {0, 1, 2, 3});
  const StressEnergy se0 = stress_energy_from_einstein(m.cb, {});
  EXPECT_EQ(max_abs(se0.T), 0.0);

  const double H = 0.1;
  const Scene ds(fixture::de_sitter(H), {0, 4.0, 1.0, 0});
  const StressEnergy se = stress_energy_from_einstein(ds.cb, {3 * H * H, 1.0});
  EXPECT_LT(max_abs(se.T), 1e-15);
  EXPECT_LT(relative_residual(se.scalar_check), 1e-12);
}

TEST(Fluid, FrwPowerLawMatchesFriedmann) {
  for (double n : {2.0 / 3.0, 0.5}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const Scene s(fixture::frw(n), {t, 0.3, -0.2, 0.1});
      const StressEnergy se = stress_energy_from_einstein(s.cb, {});
      const FlowValue u = s.flow({"1", "0", "0", "0"});
      const auto expected = oracle::frw_fluid(n, t);
      const FluidRecovery rec = fluid_recover(se.T, u, s.cb.conn);
      EXPECT_NEAR(rec.state.mu.value, expected.mu, 1e-12);
      EXPECT_NEAR(rec.state.p.value, expected.p, 1e-12);
      EXPECT_LT(max_abs(rec.anisotropy), 1e-12);

      const KinematicsDecomposition k = kinematics(u, s.cb);
      EXPECT_NEAR(k.theta.value, expected.theta, 1e-12);
      EXPECT_LT(max_abs(k.shear), 1e-12);
      EXPECT_LT(max_abs(k.vorticity), 1e-12);
      EXPECT_LT(max_abs(k.accel), 1e-12);

      const MatterState ms = matter_from_stress_energy(se, u);
      const ConservationResiduals cr = conservation_residuals(ms, u, k);
      EXPECT_LT(std::abs(cr.energy.value), 1e-12);
      EXPECT_LT(max_abs(cr.force), 1e-12);
      // mu-dot = -6 n^2 / t^3 along u = d_t.
      EXPECT_NEAR(ms.grad_mu(0).value, -6 * n * n / (t * t * t), 1e-10);
    }
  }
}

TEST(Fluid, MilneFlowExpandsWithoutShear) {
  // u^a = x^a / tau in flat space: theta = 3 / tau, no shear, vorticity or acceleration.
  const Scene s(fixture::minkowski(), {2.0, 0.3, -0.4, 0.5});
  const FlowValue u = s.flow({"t/sqrt(t^2-x^2-y^2-z^2)", "x/sqrt(t^2-x^2-y^2-z^2)",
                              "y/sqrt(t^2-x^2-y^2-z^2)", "z/sqrt(t^2-x^2-y^2-z^2)"});
  const double tau = std::sqrt(4.0 - 0.09 - 0.16 - 0.25);
  const KinematicsDecomposition k = kinematics(u, s.cb);
  EXPECT_NEAR(k.theta.value, 3.0 / tau, 1e-12);
  EXPECT_LT(max_abs(k.shear), 1e-12);
  EXPECT_LT(max_abs(k.vorticity), 1e-12);
  EXPECT_LT(max_abs(k.accel), 1e-12);
  EXPECT_LT(relative_residual(k.reconstruction_residual), 1e-12);
}

TEST(Fluid, RigidRotationHasVorticity) {
  const double W = 0.2;
  const Scene s(fixture::spec({{"t", "x", "y", "z"}, {{"W", W}}},
                              {{{"-1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}}),
                {0, 0, 0, 0});
  const char* g = "1/sqrt(1-W^2*(x^2+y^2))";
  const std::string ux = "-W*y*" + std::string(g), uy = "W*x*" + std::string(g);
  const FlowValue u = s.flow({g, ux.c_str(), uy.c_str(), "0"});
  const KinematicsDecomposition k = kinematics(u, s.cb);
  EXPECT_NEAR(std::abs(k.vorticity(1, 2).value), W, 1e-14);
  EXPECT_NEAR(k.vorticity(1, 2).value, -k.vorticity(2, 1).value, 1e-15);
  EXPECT_LT(max_abs(k.shear), 1e-14);
  EXPECT_LT(std::abs(k.theta.value), 1e-14);
}

TEST(Fluid, StaticObserverAccelerationInSchwarzschild) {
  const Scene s(fixture::schwarzschild(1.0), {0, 4.0, 1.0, 0});
  const FlowValue u = s.flow({"1/sqrt(1-2*M/r)", "0", "0", "0"});
  const KinematicsDecomposition k = kinematics(u, s.cb);
  // Lower-index radial acceleration M / (r^2 f) with f = 1 - 2M/r.
  EXPECT_NEAR(k.accel(1).value, 1.0 / (16 * 0.5), 1e-14);
  EXPECT_NEAR(k.accel(0).value, 0.0, 1e-14);
}

TEST(Fluid, UnnormalizedVelocityIsRejected) {
  const Scene s(fixture::minkowski(), {0, 0, 0, 0});
  EXPECT_THROW(s.flow({"2", "0", "0", "0"}), NormalizationError);
  EXPECT_THROW(s.flow({"0", "1", "0", "0"}), NormalizationError);
}

TEST(Fluid, PerfectFluidRoundTrip) {
  const Scene s(fixture::generic(), {0.3, 0.2, -0.4, 0.5});
  // g_00 = -(1 + a x^2) with a = 0.3.
  const FlowValue u = s.flow({"1/sqrt(1+a*x^2)", "0", "0", "0"});
  const Tensor<2> T = perfect_fluid_T({Quantity(0.7), Quantity(0.2)}, u, s.cb.conn);
  const FluidRecovery rec = fluid_recover(T, u, s.cb.conn);
  EXPECT_NEAR(rec.state.mu.value, 0.7, 1e-12);
  EXPECT_NEAR(rec.state.p.value, 0.2, 1e-12);
  EXPECT_LT(max_abs(rec.anisotropy), 1e-12);
}

TEST(Symmetry, KillingVectorsOfSchwarzschild) {
  const Scene s(fixture::schwarzschild(1.0), {0, 4.0, 1.0, 0});
  const StressEnergy se = stress_energy_from_einstein(s.cb, {});
  const SymmetryReport dt = s.symmetry({"1", "0", "0", "0"}, se);
  EXPECT_LT(dt.killing_residual, 1e-12);
  const SymmetryReport dphi = s.symmetry({"0", "0", "0", "1"}, se);
  EXPECT_LT(dphi.killing_residual, 1e-12);
  const SymmetryReport dr = s.symmetry({"0", "1", "0", "0"}, se);
  // L_{d_r} g_rr = d_r (1/f) = -2M / (r^2 f^2) = -0.5 at r = 4.
  EXPECT_NEAR(dr.lie_g(1, 1).value, -0.5, 1e-14);
  EXPECT_GT(dr.killing_relative, 1e-3);
  EXPECT_LT(dr.covariant_agreement, 1e-12);
}

TEST(Symmetry, DilationIsConformalWithUnitFactor) {
  const Scene s(fixture::minkowski(), {0.5, 1.0, -2.0, 0.3});
  const StressEnergy se = stress_energy_from_einstein(s.cb, {});
  const SymmetryReport r = s.symmetry({"t", "x", "y", "z"}, se);
  EXPECT_NEAR(r.omega.value, 1.0, 1e-12);
  EXPECT_LT(r.conformal_residual, 1e-12);
  EXPECT_NEAR(r.killing_residual, 2.0, 1e-12);
  EXPECT_LT(r.inheritance_residual, 1e-12);
}

TEST(Symmetry, FrwTranslationInheritsAndTimeDoesNot) {
  const Scene s(fixture::frw(2.0 / 3.0), {1.0, 0, 0, 0});
  const StressEnergy se = stress_energy_from_einstein(s.cb, {});
  const SymmetryReport dx = s.symmetry({"0", "1", "0", "0"}, se);
  EXPECT_LT(dx.killing_relative, 1e-12);
  EXPECT_LT(dx.lie_T_relative, 1e-12);
  const SymmetryReport dt = s.symmetry({"1", "0", "0", "0"}, se);
  EXPECT_GT(dt.killing_relative, 1e-3);
  EXPECT_GT(dt.lie_T_relative, 1e-3);
}

TEST(Electromagnetic, ReissnerNordstromCoupling) {
  const double M = 1.0, Q = 0.5, r = 4.0;
  const MetricSpec spec = fixture::spec(fixture::spherical({{"M", M}, {"Q", Q}}),
                                        {{{"-(1-2*M/r+Q^2/r^2)", "0", "0", "0"},
                                          {"0", "1/(1-2*M/r+Q^2/r^2)", "0", "0"},
                                          {"0", "0", "r^2", "0"},
                                          {"0", "0", "0", "r^2*sin(theta)^2"}}});
  const Scene s(spec, {0, r, 1.0, 0});
  ComponentArray F;
  for (auto& row : F)
    for (auto& e : row) e = expr::parse("0");
  F[0][1] = expr::parse("Q/r^2");
  F[1][0] = expr::parse("-Q/r^2");
  const FaradayValue fv = evaluate_faraday(FaradaySpec{make_field_matrix(F, spec.chart())}, s.b);
  const ElectromagneticStress em = em_stress_energy(fv, s.cb.conn);
  EXPECT_LT(std::abs(em.trace.value), 1e-15);
  // Energy density seen by the static observer: E^2 / 2 with E = Q / r^2.
  const double f = 1 - 2 * M / r + Q * Q / (r * r);
  EXPECT_NEAR(em.T(0, 0).value / f, 0.5 * Q * Q / std::pow(r, 4), 1e-15);
  const double k = fit_coupling(s.cb.ricci.ricci, em.T);
  EXPECT_NEAR(k, 2.0, 1e-10);
  EXPECT_LT(relative_residual(electrovac_residual(s.cb.ricci.ricci, em.T, k)), 1e-9);
  const double K = kretschmann(s.cb.conn, s.cb.riemann.low).value;
  EXPECT_NEAR(K, oracle::rn_kretschmann(M, Q, r), 1e-12 * K);
}

TEST(Audit, DivergenceFormulaResidualsOnFrw) {
  const Scene s(fixture::frw(2.0 / 3.0), {1.0, 0, 0, 0});
  const StressEnergy se = stress_energy_from_einstein(s.cb, {});
  const WBundle wb = compute_w(s.cb);
  const auto entries = audit_geometric(se, wb, s.cb.conn, 1.0);
  ASSERT_EQ(entries.size(), 3u);
  for (const auto& e : entries) {
    EXPECT_FALSE(e.name.empty());
    EXPECT_TRUE(std::isfinite(e.relative));
  }
  const FlowValue u = s.flow({"1", "0", "0", "0"});
  const auto fluid = audit_fluid(matter_from_stress_energy(se, u), u, kinematics(u, s.cb), s.cb.conn);
  EXPECT_EQ(fluid.size(), 24u);
  // Conservation holds for every exact solution of the field equations.
  for (const auto& e : fluid) {
    if (e.name == "energy_equation") EXPECT_LT(e.relative, 1e-12) << e.name;
  }
}

}  // namespace
