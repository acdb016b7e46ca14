#pragma once

#include <wcurv/curvature.hpp>
#include <wcurv/matter.hpp>
#include <wcurv/metric.hpp>
#include <wcurv/wtensor.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcurv {

// Everything a run needs besides the evaluation points.
struct AnalysisInputs {
  const MetricSpec* metric = nullptr;
  std::optional<FluidSpec> fluid;
  std::optional<MatterFieldSpec> matter;  // only meaningful with a fluid
  std::optional<FaradaySpec> faraday;
  std::optional<VectorFieldSpec> xi;
  ModelConstants constants;
};

enum class Flag {
  WFlat,
  Einstein,
  ConstantScalarCurvature,
  CodazziRicci,
  BianchiLikeW,
  HarmonicCurvature,
  DivergenceFreeW,
  CodazziT,
  VacuumLikeEos,
  MuMinus3pConstant,
  Radiative,
  FrwKinematics,
  SpatialConstancy,
  RicciConserved,
  ParallelRicci,
  ConstantCurvature,
  ParallelT,
  StressEnergyVanishes,
  TraceFreeT,
  TraceGradientFree,
  ExpansionFree,
  MatterConstant,
  PerfectFluid,
  Killing,
  ConformalKilling,
  LieTVanishes,
  Inheritance,
  Electrovac,
  Count
};

inline constexpr std::size_t kFlagCount = static_cast<std::size_t>(Flag::Count);
std::string_view flag_name(Flag f);

// Identities that hold for every metric; a failure indicates a defect.
enum class Identity {
  ChristoffelSymmetry,
  MetricCompatibility,
  RiemannFirstPair,
  RiemannLastPair,
  RiemannPairSymmetry,
  FirstBianchi,
  SecondBianchi,
  ContractedBianchi,
  RiemannDivergenceAgreement,
  RicciSymmetry,
  WFirstPair,
  WCyclic,
  WContraction,
  WTrace,
  WContractedSymmetry,
  BianchiLikeIdentity,
  WDivergenceForms,
  WDivergenceDirect,
  EinsteinTrace,
  KinematicReconstruction,
  ShearTrace,
  ShearSymmetry,
  VorticityAntisymmetry,
  FlowOrthogonality,
  ElectromagneticTrace,
  LieDerivativeForms,
  Count
};

inline constexpr std::size_t kIdentityCount = static_cast<std::size_t>(Identity::Count);
std::string_view identity_name(Identity i);

struct FluidSummary {
  double mu = 0.0;
  double p = 0.0;
  double theta = 0.0;
  double mu_minus_3p = 0.0;
  double accel_norm = 0.0;  // max |u-dot_a|
  double energy_residual = 0.0;
  double force_residual = 0.0;
  double force_printed_residual = 0.0;
};

// Reduced per-point result: scalars and residuals only, no rank-5 tensors.
struct PointSummary {
  std::size_t index = 0;
  Point point{};
  std::array<std::optional<double>, kFlagCount> flags{};
  std::array<std::optional<double>, kIdentityCount> identities{};
  std::vector<std::pair<std::string, double>> norms;
  std::optional<FluidSummary> fluid;
  std::optional<double> omega;
  std::optional<Tensor<2>> em_T;  // electromagnetic stress-energy
  Tensor<2> ricci;
  std::vector<AuditEntry> audit;
};

PointSummary analyze_point(const AnalysisInputs& in, const Point& p, std::size_t index);

// Evaluates every point, in parallel when threads > 1. On failure rethrows the
// exception of the lowest-index failing point.
std::vector<PointSummary> analyze_points(const AnalysisInputs& in, std::span<const Point> points,
                                         unsigned threads);

enum class Verdict { Holds, Fails, NotApplicable };
std::string_view to_string(Verdict v);

struct FlagRecord {
  std::string name;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<std::size_t> worst_point;
  double worst_residual = 0.0;
};

struct AuditRecord {
  std::string name;
  std::string hypothesis;
  Verdict verdict = Verdict::NotApplicable;
  std::size_t points_checked = 0;
  std::optional<std::size_t> worst_point;
  double worst_residual = 0.0;
  double worst_abs = 0.0;
};

struct ClassificationReport {
  double tolerance = 1e-9;
  std::vector<FlagRecord> flags;       // in Flag order
  std::vector<FlagRecord> identities;  // in Identity order
  std::vector<AuditRecord> audit;
  std::optional<double> fitted_coupling;  // electromagnetic k from the first point

  const FlagRecord& flag(Flag f) const { return flags[static_cast<std::size_t>(f)]; }
  const FlagRecord& identity(Identity i) const { return identities[static_cast<std::size_t>(i)]; }
  const AuditRecord* find_audit(std::string_view name) const;

  // Per-point boolean view, filled by classify: nullopt where not applicable.
  std::vector<std::array<std::optional<bool>, kFlagCount>> point_flags;
  bool point_holds(std::size_t point, Flag f) const {
    const auto& v = point_flags[point][static_cast<std::size_t>(f)];
    return v.has_value() && *v;
  }
};

ClassificationReport classify(const AnalysisInputs& in, std::span<const PointSummary> points,
                              double tol);

enum class TheoremStatus { Confirmed, Vacuous, Violated, NotApplicable };
std::string_view to_string(TheoremStatus s);

struct TheoremVerdict {
  std::string id;
  std::string statement;
  bool biconditional = false;
  TheoremStatus status = TheoremStatus::NotApplicable;
  bool hypothesis_satisfied = false;
  bool conclusion_satisfied = false;
  std::size_t hypothesis_points = 0;
  std::optional<std::size_t> counterexample;
  std::string detail;
  std::vector<AuditRecord> audit;
};

std::vector<TheoremVerdict> verify_theorems(const ClassificationReport& report,
                                            std::span<const PointSummary> points,
                                            const AnalysisInputs& in);

struct FrwAssessment {
  // "einstein_branch", "frw_branch", "both_branches", "violated" or "not-applicable"
  std::string verdict = "not-applicable";
  std::size_t hypothesis_points = 0;
  bool einstein_branch = false;
  bool frw_branch = false;
  std::optional<std::size_t> counterexample;
  double mu_minus_3p_spread = 0.0;
};

FrwAssessment frw_assessment(const ClassificationReport& report,
                             std::span<const PointSummary> points, const AnalysisInputs& in);

}  // namespace wcurv
