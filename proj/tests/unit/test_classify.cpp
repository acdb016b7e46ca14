#include <wcurv/classify.hpp>
#include <wcurv/error.hpp>

#include "../support/fixtures.hpp"

#include <gtest/gtest.h>

namespace {

using namespace wcurv;

struct Pipeline {
  CompiledModel model;
  std::vector<Point> points;
  std::vector<PointSummary> summaries;
  ClassificationReport report;
  std::vector<TheoremVerdict> theorems;

  explicit Pipeline(const std::string& catalog_name, double tol = 1e-9, unsigned threads = 1)
      : Pipeline(catalog_metric(catalog_name), tol, threads) {}
  Pipeline(const MetricFile& f, double tol = 1e-9, unsigned threads = 1)
      : model(compile_model(f)), points(build_grid(f)) {
    summaries = analyze_points(model.inputs, points, threads);
    report = classify(model.inputs, summaries, tol);
    theorems = verify_theorems(report, summaries, model.inputs);
  }

  const TheoremVerdict& theorem(std::string_view id) const {
    for (const auto& t : theorems) {
      if (t.id == id) return t;
    }
    throw std::runtime_error("no theorem " + std::string(id));
  }
};

TEST(Classify, DeSitterIsWFlatAndEinstein) {
  const Pipeline r("de_sitter_static");
  EXPECT_EQ(r.report.flag(Flag::WFlat).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::Einstein).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::ConstantCurvature).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::VacuumLikeEos).verdict, Verdict::Holds);
  EXPECT_EQ(r.theorem("w_flat_implies_einstein").status, TheoremStatus::Confirmed);
  EXPECT_EQ(r.theorem("w_flat_perfect_fluid_vacuum_like").status, TheoremStatus::Confirmed);
}

TEST(Classify, SchwarzschildIsEinsteinNotWFlat) {
  const Pipeline r("schwarzschild");
  EXPECT_EQ(r.report.flag(Flag::Einstein).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::WFlat).verdict, Verdict::Fails);
  EXPECT_EQ(r.report.flag(Flag::Killing).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::Electrovac).verdict, Verdict::NotApplicable);
  EXPECT_EQ(r.theorem("w_flat_implies_einstein").status, TheoremStatus::Vacuous);
  // Ricci-flat with divergence-free W but not of constant curvature.
  const auto& t = r.theorem("divergence_free_w_parallel_ricci_implies_constant_curvature");
  EXPECT_EQ(t.status, TheoremStatus::Violated);
  EXPECT_TRUE(t.counterexample.has_value());
}

TEST(Classify, FrwBreaksCodazziAndBianchiLikeTogether) {
  const Pipeline r("frw_flat_powerlaw");
  EXPECT_EQ(r.report.flag(Flag::CodazziRicci).verdict, Verdict::Fails);
  EXPECT_EQ(r.report.flag(Flag::BianchiLikeW).verdict, Verdict::Fails);
  EXPECT_EQ(r.report.flag(Flag::PerfectFluid).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::FrwKinematics).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::DivergenceFreeW).verdict, Verdict::Fails);
  EXPECT_EQ(r.theorem("ricci_codazzi_iff_w_bianchi_like").status, TheoremStatus::Confirmed);
  const FrwAssessment a = frw_assessment(r.report, r.summaries, r.model.inputs);
  EXPECT_EQ(a.verdict, "not-applicable");
}

TEST(Classify, EinsteinStaticLandsOnFrwBranch) {
  const Pipeline r("einstein_static");
  EXPECT_EQ(r.report.flag(Flag::DivergenceFreeW).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.flag(Flag::PerfectFluid).verdict, Verdict::Holds);
  const FrwAssessment a = frw_assessment(r.report, r.summaries, r.model.inputs);
  EXPECT_EQ(a.verdict, "frw_branch");
  EXPECT_TRUE(a.frw_branch);
  EXPECT_FALSE(a.einstein_branch);
  // Dust with mu = 2 / R0^2 is not radiative although W is divergence-free.
  EXPECT_NEAR(r.summaries[0].fluid->mu, 2.0, 1e-12);
  EXPECT_NEAR(r.summaries[0].fluid->p, 0.0, 1e-12);
  EXPECT_EQ(r.theorem("fluid_divergence_free_w_codazzi_T_implies_radiative").status,
            TheoremStatus::Violated);
}

TEST(Classify, DeSitterLandsOnEinsteinBranch) {
  const Pipeline r("de_sitter_static");
  const FrwAssessment a = frw_assessment(r.report, r.summaries, r.model.inputs);
  EXPECT_TRUE(a.einstein_branch);
  EXPECT_EQ(r.theorem("fluid_divergence_free_w_einstein_or_frw").status, TheoremStatus::Confirmed);
}

TEST(Classify, ElectrovacFitsCouplingAndChecksParallelT) {
  const Pipeline r("reissner_nordstrom");
  ASSERT_TRUE(r.report.fitted_coupling.has_value());
  EXPECT_NEAR(*r.report.fitted_coupling, 2.0, 1e-10);
  EXPECT_EQ(r.report.flag(Flag::Electrovac).verdict, Verdict::Holds);
  EXPECT_EQ(r.report.identity(Identity::ElectromagneticTrace).verdict, Verdict::Holds);
  EXPECT_EQ(r.theorem("electrovac_divergence_free_w_iff_parallel_T").status, TheoremStatus::Confirmed);
  EXPECT_EQ(r.report.flag(Flag::PerfectFluid).verdict, Verdict::NotApplicable);
}

TEST(Classify, NotApplicableExactlyWhenInputsAbsent) {
  MetricFile f = catalog_metric("schwarzschild");
  f.fluid_velocity.reset();
  f.xi.reset();
  const Pipeline r(f);
  for (Flag fl : {Flag::PerfectFluid, Flag::VacuumLikeEos, Flag::FrwKinematics, Flag::Killing,
                  Flag::Inheritance, Flag::Electrovac, Flag::MuMinus3pConstant}) {
    EXPECT_EQ(r.report.flag(fl).verdict, Verdict::NotApplicable) << flag_name(fl);
  }
  for (Flag fl : {Flag::WFlat, Flag::Einstein, Flag::CodazziT, Flag::TraceFreeT}) {
    EXPECT_NE(r.report.flag(fl).verdict, Verdict::NotApplicable) << flag_name(fl);
  }
  EXPECT_EQ(r.theorem("w_flat_killing_iff_lie_T_vanishes").status, TheoremStatus::NotApplicable);
  EXPECT_EQ(r.theorem("fluid_divergence_free_w_einstein_or_frw").status, TheoremStatus::NotApplicable);
  EXPECT_EQ(r.theorem("w_flat_implies_einstein").status, TheoremStatus::Vacuous);
}

TEST(Classify, TighteningToleranceNeverCreatesHolds) {
  for (const auto& e : catalog()) {
    const Pipeline loose(e.name, 1e-6);
    const Pipeline tight(e.name, 1e-13);
    for (std::size_t f = 0; f < kFlagCount; ++f) {
      if (loose.report.flags[f].verdict == Verdict::Fails) {
        EXPECT_EQ(tight.report.flags[f].verdict, Verdict::Fails) << e.name << " " << loose.report.flags[f].name;
      }
    }
  }
}

TEST(Classify, WFlatImpliesEinsteinIsNeverViolated) {
  for (const auto& e : catalog()) {
    const Pipeline r(e.name);
    EXPECT_NE(r.theorem("w_flat_implies_einstein").status, TheoremStatus::Violated) << e.name;
  }
}

TEST(Classify, IdentitiesHoldOnEveryCatalogMetric) {
  for (const auto& e : catalog()) {
    const Pipeline r(e.name);
    for (const auto& id : r.report.identities) {
      EXPECT_NE(id.verdict, Verdict::Fails) << e.name << " " << id.name << " " << id.worst_residual;
    }
  }
}

TEST(Classify, ParallelEvaluationIsIdentical) {
  const Pipeline one("schwarzschild", 1e-9, 1);
  const Pipeline four("schwarzschild", 1e-9, 4);
  ASSERT_EQ(one.summaries.size(), four.summaries.size());
  for (std::size_t i = 0; i < one.summaries.size(); ++i) {
    EXPECT_EQ(one.summaries[i].flags, four.summaries[i].flags);
    EXPECT_EQ(one.summaries[i].norms, four.summaries[i].norms);
  }
}

TEST(Classify, FirstFailingPointIsReported) {
  MetricFile f = catalog_metric("schwarzschild");
  f.fluid_velocity = StringVector{"2", "0", "0", "0"};
  const CompiledModel m = compile_model(f);
  const auto points = build_grid(f);
  try {
    analyze_points(m.inputs, points, 3);
    FAIL() << "expected NormalizationError";
  } catch (const NormalizationError& e) {
    EXPECT_NE(std::string(e.what()).find(format_point(points[0], m.metric->chart())), std::string::npos);
  }
}

TEST(Classify, NamesAreUnique) {
  std::set<std::string> names;
  for (std::size_t f = 0; f < kFlagCount; ++f) EXPECT_TRUE(names.insert(std::string(flag_name(static_cast<Flag>(f)))).second);
  for (std::size_t i = 0; i < kIdentityCount; ++i) {
    EXPECT_TRUE(names.insert(std::string(identity_name(static_cast<Identity>(i)))).second);
  }
}

}  // namespace
