#include <wcurv/classify.hpp>
#include <wcurv/error.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

namespace wcurv {

namespace {

constexpr int N = kDim;

template <int Rank>
Tensor<Rank> difference(const Tensor<Rank>& a, const Tensor<Rank>& b) {
  Tensor<Rank> out;
  for (std::size_t i = 0; i < a.size; ++i) out.at_flat(i) = a.at_flat(i) - b.at_flat(i);
  return out;
}

Tensor<2> transpose_difference(const Tensor<2>& t) {
  Tensor<2> out;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) out(a, b) = t(a, b) - t(b, a);
  }
  return out;
}

// |q| against the scale of the tensor it was contracted from.
template <int Rank>
double scaled_by(Quantity q, const Tensor<Rank>& parent) {
  const double scale = std::max({max_abs(parent), max_magnitude(parent), kScaleFloor});
  return std::abs(q.value) / scale;
}

void set(PointSummary& s, Flag f, double v) { s.flags[static_cast<std::size_t>(f)] = v; }
void set(PointSummary& s, Identity i, double v) { s.identities[static_cast<std::size_t>(i)] = v; }

void add_norm(PointSummary& s, std::string name, double v) { s.norms.emplace_back(std::move(name), v); }

}  // namespace

std::string_view flag_name(Flag f) {
  switch (f) {
    case Flag::WFlat: return "w_flat";
    case Flag::Einstein: return "einstein";
    case Flag::ConstantScalarCurvature: return "constant_scalar_curvature";
    case Flag::CodazziRicci: return "codazzi_ricci";
    case Flag::BianchiLikeW: return "bianchi_like_W";
    case Flag::HarmonicCurvature: return "harmonic_curvature";
    case Flag::DivergenceFreeW: return "divergence_free_W";
    case Flag::CodazziT: return "codazzi_T";
    case Flag::VacuumLikeEos: return "vacuum_like_eos";
    case Flag::MuMinus3pConstant: return "mu_minus_3p_constant";
    case Flag::Radiative: return "radiative";
    case Flag::FrwKinematics: return "frw_kinematics";
    case Flag::SpatialConstancy: return "spatial_constancy";
    case Flag::RicciConserved: return "ricci_conserved";
    case Flag::ParallelRicci: return "parallel_ricci";
    case Flag::ConstantCurvature: return "constant_curvature";
    case Flag::ParallelT: return "parallel_T";
    case Flag::StressEnergyVanishes: return "stress_energy_vanishes";
    case Flag::TraceFreeT: return "trace_free_T";
    case Flag::TraceGradientFree: return "mu_minus_3p_gradient_free";
    case Flag::ExpansionFree: return "expansion_free";
    case Flag::MatterConstant: return "matter_constant";
    case Flag::PerfectFluid: return "perfect_fluid";
    case Flag::Killing: return "killing";
    case Flag::ConformalKilling: return "conformal_killing";
    case Flag::LieTVanishes: return "lie_T_vanishes";
    case Flag::Inheritance: return "inheritance";
    case Flag::Electrovac: return "electrovac";
    case Flag::Count: break;
  }
  return "unknown";
}

std::string_view identity_name(Identity i) {
  switch (i) {
    case Identity::ChristoffelSymmetry: return "christoffel_symmetry";
    case Identity::MetricCompatibility: return "metric_compatibility";
    case Identity::RiemannFirstPair: return "riemann_first_pair_antisymmetry";
    case Identity::RiemannLastPair: return "riemann_last_pair_antisymmetry";
    case Identity::RiemannPairSymmetry: return "riemann_pair_symmetry";
    case Identity::FirstBianchi: return "first_bianchi";
    case Identity::SecondBianchi: return "second_bianchi";
    case Identity::ContractedBianchi: return "contracted_bianchi";
    case Identity::RiemannDivergenceAgreement: return "riemann_divergence_agreement";
    case Identity::RicciSymmetry: return "ricci_symmetry";
    case Identity::WFirstPair: return "w_first_pair_antisymmetry";
    case Identity::WCyclic: return "w_cyclic";
    case Identity::WContraction: return "w_contraction";
    case Identity::WTrace: return "w_trace";
    case Identity::WContractedSymmetry: return "w_contracted_symmetry";
    case Identity::BianchiLikeIdentity: return "bianchi_like_identity";
    case Identity::WDivergenceForms: return "w_divergence_forms";
    case Identity::WDivergenceDirect: return "w_divergence_direct";
    case Identity::EinsteinTrace: return "einstein_trace";
    case Identity::KinematicReconstruction: return "kinematic_reconstruction";
    case Identity::ShearTrace: return "shear_trace";
    case Identity::ShearSymmetry: return "shear_symmetry";
    case Identity::VorticityAntisymmetry: return "vorticity_antisymmetry";
    case Identity::FlowOrthogonality: return "flow_orthogonality";
    case Identity::ElectromagneticTrace: return "electromagnetic_trace";
    case Identity::LieDerivativeForms: return "lie_derivative_forms";
    case Identity::Count: break;
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string_view to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Confirmed: return "confirmed";
    case TheoremStatus::Vacuous: return "vacuous";
    case TheoremStatus::Violated: return "violated";
    case TheoremStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

PointSummary analyze_point(const AnalysisInputs& in, const Point& p, std::size_t index) {
  const MetricSpec& spec = *in.metric;
  const std::string where = format_point(p, spec.chart());
  const expr::Bindings bind = spec.bindings(p);

  const MetricValue mv = evaluate_metric(spec, p);
  const CurvatureBundle cb = compute_curvature(mv);
  const WBundle wb = compute_w(cb);
  const StressEnergy se = stress_energy_from_einstein(cb, in.constants);
  const auto& g = cb.conn.g;
  const auto& ric = cb.ricci.ricci;
  const Quantity R = cb.ricci.scalar;

  PointSummary s;
  s.index = index;
  s.point = p;
  s.ricci = ric;

  // Identities.
  Tensor<3> gamma_sym;
  Tensor<3>::for_each_index([&](const std::array<int, 3>& i) {
    gamma_sym(i[0], i[1], i[2]) = cb.conn.gamma(i[0], i[1], i[2]) - cb.conn.gamma(i[0], i[2], i[1]);
  });
  const RiemannSymmetries rsym = riemann_symmetries(cb.riemann.low);
  set(s, Identity::ChristoffelSymmetry, relative_residual(gamma_sym));
  set(s, Identity::MetricCompatibility, relative_residual(metric_covariant_derivative(cb.conn)));
  set(s, Identity::RiemannFirstPair, relative_residual(rsym.antisym_first));
  set(s, Identity::RiemannLastPair, relative_residual(rsym.antisym_last));
  set(s, Identity::RiemannPairSymmetry, relative_residual(rsym.pair));
  set(s, Identity::FirstBianchi, relative_residual(rsym.first_bianchi));
  set(s, Identity::SecondBianchi, relative_residual(cb.cov_riemann.bianchi_residual));
  set(s, Identity::ContractedBianchi, relative_residual(cb.contracted_bianchi));
  set(s, Identity::RiemannDivergenceAgreement, relative_residual(cb.div.residual));
  set(s, Identity::RicciSymmetry, relative_residual(transpose_difference(ric)));
  set(s, Identity::WFirstPair, relative_residual(wb.symmetry.first_pair));
  set(s, Identity::WCyclic, relative_residual(wb.symmetry.cyclic));
  set(s, Identity::WContraction, relative_residual(wb.contraction_residual));
  set(s, Identity::WTrace, scaled_by(wb.trace, wb.contracted));
  set(s, Identity::WContractedSymmetry, relative_residual(transpose_difference(wb.contracted)));
  set(s, Identity::BianchiLikeIdentity, relative_residual(wb.bianchi_like.identity));
  set(s, Identity::WDivergenceForms, relative_residual(wb.div.form_residual));
  set(s, Identity::WDivergenceDirect, relative_residual(wb.div.direct_residual));
  set(s, Identity::EinsteinTrace, relative_residual(se.scalar_check));

  // Geometric flags.
  Tensor<2> einstein;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) einstein(a, b) = ric(a, b) - 0.25 * (R * g(a, b));
  }
  Tensor<4> const_curv;
  Tensor<4>::for_each_index([&](const std::array<int, 4>& i) {
    const int a = i[0], b = i[1], c = i[2], d = i[3];
    const_curv(a, b, c, d) =
        cb.riemann.low(a, b, c, d) + (1.0 / 12.0) * (R * (g(a, c) * g(b, d) - g(a, d) * g(b, c)));
  });
  Vector ricci_div;
  for (int p2 = 0; p2 < N; ++p2) {
    Quantity q;
    for (int b = 0; b < N; ++b) {
      for (int c = 0; c < N; ++c) q += cb.conn.g_inv(b, c) * cb.cov_ricci(b, c, p2);
    }
    ricci_div(p2) = q;
  }
  set(s, Flag::WFlat, relative_residual(wb.low));
  set(s, Flag::Einstein, relative_residual(einstein));
  set(s, Flag::ConstantScalarCurvature, relative_residual(cb.ricci.grad_scalar));
  set(s, Flag::CodazziRicci, relative_residual(wb.codazzi_ricci));
  set(s, Flag::BianchiLikeW, relative_residual(wb.bianchi_like.lhs));
  set(s, Flag::HarmonicCurvature, relative_residual(cb.div.direct));
  set(s, Flag::DivergenceFreeW, relative_residual(wb.div.value));
  set(s, Flag::CodazziT, relative_residual(codazzi_residual(se.cov)));
  set(s, Flag::RicciConserved, relative_residual(ricci_div));
  set(s, Flag::ParallelRicci, relative_residual(cb.cov_ricci));
  set(s, Flag::ConstantCurvature, relative_residual(const_curv));
  set(s, Flag::ParallelT, relative_residual(se.cov));
  set(s, Flag::StressEnergyVanishes, relative_residual(se.T));
  set(s, Flag::TraceFreeT, relative_residual(se.trace));

  add_norm(s, "det_g", mv.det);
  add_norm(s, "scalar_curvature", R.value);
  add_norm(s, "kretschmann", kretschmann(cb.conn, cb.riemann.low).value);
  add_norm(s, "max_abs_christoffel", max_abs(cb.conn.gamma));
  add_norm(s, "max_abs_riemann", max_abs(cb.riemann.low));
  add_norm(s, "max_abs_ricci", max_abs(ric));
  add_norm(s, "max_abs_cov_ricci", max_abs(cb.cov_ricci));
  add_norm(s, "max_abs_cov_riemann", max_abs(cb.cov_riemann.value));
  add_norm(s, "max_abs_w", max_abs(wb.low));
  add_norm(s, "max_abs_w_contracted", max_abs(wb.contracted));
  add_norm(s, "trace_w", wb.trace.value);
  add_norm(s, "max_abs_w_last_pair_residual", max_abs(wb.symmetry.last_pair));
  add_norm(s, "max_abs_w_pair_interchange_residual", max_abs(wb.symmetry.pair_interchange));
  add_norm(s, "max_abs_bianchi_like", max_abs(wb.bianchi_like.lhs));
  add_norm(s, "max_abs_codazzi_ricci", max_abs(wb.codazzi_ricci));
  add_norm(s, "max_abs_div_riemann", max_abs(cb.div.direct));
  add_norm(s, "max_abs_div_w", max_abs(wb.div.value));
  add_norm(s, "max_abs_stress_energy", max_abs(se.T));
  add_norm(s, "stress_energy_trace", se.trace.value);

  if (in.fluid) {
    const FlowValue flow = evaluate_flow(*in.fluid, cb, bind, where);
    const KinematicsDecomposition kin = kinematics(flow, cb);
    const MatterState m =
        in.matter ? matter_from_fields(*in.matter, bind) : matter_from_stress_energy(se, flow);
    const FluidRecovery rec = fluid_recover(se.T, flow, cb.conn);
    const ConservationResiduals cons = conservation_residuals(m, flow, kin);

    Vector spatial_mu, spatial_p, trace_grad;
    Quantity mu_dot, p_dot;
    for (int a = 0; a < N; ++a) {
      mu_dot += flow.up(a) * m.grad_mu(a);
      p_dot += flow.up(a) * m.grad_p(a);
    }
    for (int a = 0; a < N; ++a) {
      spatial_mu(a) = m.grad_mu(a) + flow.low(a) * mu_dot;
      spatial_p(a) = m.grad_p(a) + flow.low(a) * p_dot;
      trace_grad(a) = m.grad_mu(a) - 3.0 * m.grad_p(a);
    }
    Tensor<2> field_mismatch = rec.anisotropy;
    if (in.matter) field_mismatch = difference(se.T, perfect_fluid_T({m.mu, m.p}, flow, cb.conn));

    set(s, Flag::VacuumLikeEos, relative_residual(m.mu + m.p));
    set(s, Flag::Radiative, relative_residual(m.mu - 3.0 * m.p));
    set(s, Flag::FrwKinematics,
        std::max({relative_residual(kin.shear), relative_residual(kin.vorticity),
                  relative_residual(kin.accel)}));
    set(s, Flag::SpatialConstancy,
        std::max(relative_residual(spatial_mu), relative_residual(spatial_p)));
    set(s, Flag::TraceGradientFree, relative_residual(trace_grad));
    set(s, Flag::ExpansionFree, relative_residual(kin.theta));
    set(s, Flag::MatterConstant,
        std::max(relative_residual(m.grad_mu), relative_residual(m.grad_p)));
    set(s, Flag::PerfectFluid, relative_residual(field_mismatch));

    Tensor<2> shear_asym = transpose_difference(kin.shear);
    set(s, Identity::KinematicReconstruction, relative_residual(kin.reconstruction_residual));
    set(s, Identity::ShearTrace, relative_residual(kin.shear_trace));
    set(s, Identity::ShearSymmetry, relative_residual(shear_asym));
    set(s, Identity::VorticityAntisymmetry, relative_residual(kin.vorticity_symmetric_part));
    set(s, Identity::FlowOrthogonality,
        std::max({relative_residual(kin.shear_flow), relative_residual(kin.vorticity_flow),
                  relative_residual(kin.accel_flow)}));

    FluidSummary fs;
    fs.mu = m.mu.value;
    fs.p = m.p.value;
    fs.theta = kin.theta.value;
    fs.mu_minus_3p = m.mu.value - 3.0 * m.p.value;
    fs.accel_norm = max_abs(kin.accel);
    fs.energy_residual = std::abs(cons.energy.value);
    fs.force_residual = max_abs(cons.force);
    fs.force_printed_residual = max_abs(cons.force_printed);
    s.fluid = fs;

    add_norm(s, "mu", fs.mu);
    add_norm(s, "p", fs.p);
    add_norm(s, "theta", fs.theta);
    add_norm(s, "max_abs_acceleration", fs.accel_norm);
    add_norm(s, "max_abs_shear", max_abs(kin.shear));
    add_norm(s, "max_abs_vorticity", max_abs(kin.vorticity));
    add_norm(s, "max_abs_anisotropy", max_abs(rec.anisotropy));
    add_norm(s, "energy_equation_residual", fs.energy_residual);
    add_norm(s, "force_equation_residual", fs.force_residual);

    s.audit = audit_fluid(m, flow, kin, cb.conn);
  }

  if (in.xi) {
    const SymmetryReport sym = symmetry_check(*in.xi, bind, se.T, se.partial, cb);
    set(s, Flag::Killing, sym.killing_relative);
    set(s, Flag::ConformalKilling, sym.conformal_relative);
    set(s, Flag::LieTVanishes, sym.lie_T_relative);
    set(s, Flag::Inheritance, sym.inheritance_relative);
    set(s, Identity::LieDerivativeForms, sym.covariant_agreement);
    s.omega = sym.omega.value;
    add_norm(s, "killing_residual", sym.killing_residual);
    add_norm(s, "conformal_factor", sym.omega.value);
    add_norm(s, "conformal_residual", sym.conformal_residual);
    add_norm(s, "inheritance_residual", sym.inheritance_residual);
  }

  if (in.faraday) {
    const ElectromagneticStress em = em_stress_energy(evaluate_faraday(*in.faraday, bind), cb.conn);
    set(s, Identity::ElectromagneticTrace, scaled_by(em.trace, em.T));
    s.em_T = em.T;
    add_norm(s, "max_abs_em_stress_energy", max_abs(em.T));
    add_norm(s, "em_trace", em.trace.value);
  }

  auto geometric = audit_geometric(se, wb, cb.conn, in.constants.kappa);
  s.audit.insert(s.audit.begin(), geometric.begin(), geometric.end());
  return s;
}

std::vector<PointSummary> analyze_points(const AnalysisInputs& in, std::span<const Point> points,
                                         unsigned threads) {
  const std::size_t n = points.size();
  std::vector<PointSummary> out(n);
  std::vector<std::exception_ptr> errors(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));

  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < n; i += threads) {
      try {
        out[i] = analyze_point(in, points[i], i);
      } catch (...) {
        errors[i] = std::current_exception();
        if (threads == 1) return;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

const AuditRecord* ClassificationReport::find_audit(std::string_view name) const {
  for (const auto& a : audit) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

ClassificationReport classify(const AnalysisInputs& in, std::span<const PointSummary> points,
                              double tol) {
  ClassificationReport r;
  r.tolerance = tol;
  const std::size_t n = points.size();

  std::vector<std::array<std::optional<double>, kFlagCount>> flags(n);
  for (std::size_t i = 0; i < n; ++i) flags[i] = points[i].flags;

  if (in.faraday && n > 0 && points[0].em_T) {
    const double k = fit_coupling(points[0].ricci, *points[0].em_T);
    r.fitted_coupling = k;
    for (std::size_t i = 0; i < n; ++i) {
      if (!points[i].em_T) continue;
      flags[i][static_cast<std::size_t>(Flag::Electrovac)] =
          relative_residual(electrovac_residual(points[i].ricci, *points[i].em_T, k));
    }
  }

  // Grid constancy of mu - 3p.
  std::optional<double> spread_residual;
  std::optional<std::size_t> spread_worst;
  if (in.fluid && n > 0) {
    double lo = points[0].fluid->mu_minus_3p, hi = lo, big = 0.0, mean = 0.0;
    for (const auto& p : points) {
      const double v = p.fluid->mu_minus_3p;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      big = std::max(big, std::abs(v));
      mean += v;
    }
    mean /= static_cast<double>(n);
    spread_residual = (hi - lo) / (1.0 + big);
    double worst = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::abs(points[i].fluid->mu_minus_3p - mean);
      if (d > worst) {
        worst = d;
        spread_worst = i;
      }
    }
    for (auto& f : flags) f[static_cast<std::size_t>(Flag::MuMinus3pConstant)] = spread_residual;
  }

  auto record = [&](std::string name, auto get) {
    FlagRecord rec;
    rec.name = std::move(name);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::optional<double> v = get(i);
      if (!v) continue;
      if (!any || *v > rec.worst_residual) {
        rec.worst_residual = *v;
        rec.worst_point = i;
      }
      any = true;
    }
    rec.verdict = !any ? Verdict::NotApplicable
                       : (rec.worst_residual < tol ? Verdict::Holds : Verdict::Fails);
    return rec;
  };

  for (std::size_t f = 0; f < kFlagCount; ++f) {
    FlagRecord rec = record(std::string(flag_name(static_cast<Flag>(f))),
                            [&](std::size_t i) { return flags[i][f]; });
    if (static_cast<Flag>(f) == Flag::MuMinus3pConstant && spread_worst) rec.worst_point = spread_worst;
    r.flags.push_back(std::move(rec));
  }
  for (std::size_t k = 0; k < kIdentityCount; ++k) {
    r.identities.push_back(record(std::string(identity_name(static_cast<Identity>(k))),
                                  [&](std::size_t i) { return points[i].identities[k]; }));
  }

  r.point_flags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < kFlagCount; ++f) {
      if (flags[i][f]) r.point_flags[i][f] = *flags[i][f] < tol;
    }
  }

  auto hypothesis_holds = [&](AuditHypothesis h, std::size_t i) {
    switch (h) {
      case AuditHypothesis::FieldEquations: return true;
      case AuditHypothesis::TraceFreeStressEnergy: return r.point_holds(i, Flag::TraceFreeT);
      case AuditHypothesis::DivergenceFreeW: return r.point_holds(i, Flag::DivergenceFreeW);
      case AuditHypothesis::FluidConservation: return r.point_holds(i, Flag::PerfectFluid);
      case AuditHypothesis::FluidCodazziDivergenceFree:
        return r.point_holds(i, Flag::PerfectFluid) && r.point_holds(i, Flag::DivergenceFreeW) &&
               r.point_holds(i, Flag::CodazziT);
      case AuditHypothesis::FluidDivergenceFree:
        return r.point_holds(i, Flag::PerfectFluid) && r.point_holds(i, Flag::DivergenceFreeW);
    }
    return false;
  };

  if (n > 0) {
    for (std::size_t e = 0; e < points[0].audit.size(); ++e) {
      AuditRecord rec;
      rec.name = points[0].audit[e].name;
      rec.hypothesis = std::string(to_string(points[0].audit[e].hypothesis));
      for (std::size_t i = 0; i < n; ++i) {
        const AuditEntry& entry = points[i].audit[e];
        if (!hypothesis_holds(entry.hypothesis, i)) continue;
        if (rec.points_checked == 0 || entry.relative > rec.worst_residual) {
          rec.worst_residual = entry.relative;
          rec.worst_abs = entry.max_abs;
          rec.worst_point = i;
        }
        ++rec.points_checked;
      }
      rec.verdict = rec.points_checked == 0
                        ? Verdict::NotApplicable
                        : (rec.worst_residual < tol ? Verdict::Holds : Verdict::Fails);
      r.audit.push_back(std::move(rec));
    }
  }
  return r;
}

namespace {

using Predicate = std::function<std::optional<bool>(std::size_t)>;

struct TheoremContext {
  const ClassificationReport& report;
  std::size_t n;

  Predicate flag(Flag f) const {
    return [this, f](std::size_t i) { return report.point_flags[i][static_cast<std::size_t>(f)]; };
  }
};

Predicate all_of(std::vector<Predicate> ps) {
  return [ps = std::move(ps)](std::size_t i) -> std::optional<bool> {
    bool result = true;
    for (const auto& p : ps) {
      const auto v = p(i);
      if (!v) return std::nullopt;
      result = result && *v;
    }
    return result;
  };
}

Predicate any_of(std::vector<Predicate> ps) {
  return [ps = std::move(ps)](std::size_t i) -> std::optional<bool> {
    bool result = false;
    for (const auto& p : ps) {
      const auto v = p(i);
      if (!v) return std::nullopt;
      result = result || *v;
    }
    return result;
  };
}

Predicate negate(Predicate p) {
  return [p = std::move(p)](std::size_t i) -> std::optional<bool> {
    const auto v = p(i);
    if (!v) return std::nullopt;
    return !*v;
  };
}

TheoremVerdict implication(std::string id, std::string statement, std::size_t n,
                           const Predicate& hyp, const Predicate& concl) {
  TheoremVerdict t;
  t.id = std::move(id);
  t.statement = std::move(statement);
  bool applicable = false;
  std::size_t holding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = hyp(i);
    if (!h) continue;
    applicable = true;
    if (!*h) continue;
    ++t.hypothesis_points;
    const auto c = concl(i);
    if (c && *c) {
      ++holding;
    } else if (!t.counterexample) {
      t.counterexample = i;
    }
  }
  t.hypothesis_satisfied = t.hypothesis_points > 0;
  t.conclusion_satisfied = t.hypothesis_points > 0 && holding == t.hypothesis_points;
  if (!applicable) {
    t.status = TheoremStatus::NotApplicable;
    t.detail = "required inputs are absent";
  } else if (t.hypothesis_points == 0) {
    t.status = TheoremStatus::Vacuous;
    t.detail = "hypothesis holds at no point";
  } else if (t.counterexample) {
    t.status = TheoremStatus::Violated;
    t.detail = "hypothesis holds at " + std::to_string(t.hypothesis_points) +
               " points; conclusion fails at point " + std::to_string(*t.counterexample);
  } else {
    t.status = TheoremStatus::Confirmed;
    t.detail = "hypothesis and conclusion hold at " + std::to_string(t.hypothesis_points) + " points";
  }
  return t;
}

TheoremVerdict biconditional(std::string id, std::string statement, std::size_t n,
                             const Predicate& context, const Predicate& left,
                             const Predicate& right) {
  TheoremVerdict t;
  t.id = std::move(id);
  t.statement = std::move(statement);
  t.biconditional = true;
  bool applicable = false;
  std::size_t context_points = 0, both = 0, neither = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = context(i);
    const auto l = left(i);
    const auto r = right(i);
    if (!c || !l || !r) continue;
    applicable = true;
    if (!*c) continue;
    ++context_points;
    if (*l) ++t.hypothesis_points;
    if (*l == *r) {
      (*l ? both : neither) += 1;
    } else if (!t.counterexample) {
      t.counterexample = i;
    }
  }
  t.hypothesis_satisfied = t.hypothesis_points > 0;
  t.conclusion_satisfied = context_points > 0 && !t.counterexample;
  if (!applicable) {
    t.status = TheoremStatus::NotApplicable;
    t.detail = "required inputs are absent";
  } else if (context_points == 0) {
    t.status = TheoremStatus::Vacuous;
    t.detail = "standing assumptions hold at no point";
  } else if (t.counterexample) {
    t.status = TheoremStatus::Violated;
    t.detail = "the two sides disagree at point " + std::to_string(*t.counterexample);
  } else {
    t.status = TheoremStatus::Confirmed;
    t.detail = "both sides hold at " + std::to_string(both) + " points and both fail at " +
               std::to_string(neither) + " points";
  }
  return t;
}

void attach(TheoremVerdict& t, const ClassificationReport& r, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (const AuditRecord* a = r.find_audit(name)) t.audit.push_back(*a);
  }
}

}  // namespace

FrwAssessment frw_assessment(const ClassificationReport& report,
                             std::span<const PointSummary> points, const AnalysisInputs& in) {
  FrwAssessment a;
  if (!in.fluid) return a;
  const double tol = report.tolerance;
  std::vector<std::size_t> hyp;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (report.point_holds(i, Flag::PerfectFluid) && report.point_holds(i, Flag::DivergenceFreeW)) {
      hyp.push_back(i);
    }
  }
  a.hypothesis_points = hyp.size();
  if (hyp.empty()) return a;

  bool einstein = true, frw = true;
  double lo = points[hyp[0]].fluid->mu_minus_3p, hi = lo, big = 0.0;
  for (std::size_t i : hyp) {
    const bool e = report.point_holds(i, Flag::VacuumLikeEos);
    const bool f = report.point_holds(i, Flag::FrwKinematics) &&
                   report.point_holds(i, Flag::SpatialConstancy);
    einstein = einstein && e;
    frw = frw && f;
    if (!e && !f && !a.counterexample) a.counterexample = i;
    const double v = points[i].fluid->mu_minus_3p;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    big = std::max(big, std::abs(v));
  }
  a.mu_minus_3p_spread = (hi - lo) / (1.0 + big);
  frw = frw && a.mu_minus_3p_spread < tol;
  a.einstein_branch = einstein;
  a.frw_branch = frw;
  if (einstein && frw) {
    a.verdict = "both_branches";
  } else if (einstein) {
    a.verdict = "einstein_branch";
  } else if (frw) {
    a.verdict = "frw_branch";
  } else {
    a.verdict = "violated";
    if (!a.counterexample) a.counterexample = hyp[0];
  }
  return a;
}

std::vector<TheoremVerdict> verify_theorems(const ClassificationReport& report,
                                            std::span<const PointSummary> points,
                                            const AnalysisInputs& in) {
  const std::size_t n = points.size();
  TheoremContext ctx{report, n};
  auto F = [&](Flag f) { return ctx.flag(f); };
  const Predicate always = [](std::size_t) -> std::optional<bool> { return true; };
  const Predicate fluid_div_free = all_of({F(Flag::PerfectFluid), F(Flag::DivergenceFreeW)});
  const Predicate fluid_div_free_codazzi =
      all_of({F(Flag::PerfectFluid), F(Flag::DivergenceFreeW), F(Flag::CodazziT)});
  const Predicate w_flat_sourced = all_of({F(Flag::WFlat), negate(F(Flag::StressEnergyVanishes))});

  std::vector<TheoremVerdict> out;
  out.push_back(biconditional(
      "ricci_codazzi_iff_w_bianchi_like",
      "The Ricci tensor is of Codazzi type if and only if W satisfies the Bianchi-like identity.",
      n, always, F(Flag::CodazziRicci), F(Flag::BianchiLikeW)));
  out.push_back(implication(
      "w_flat_implies_einstein",
      "A W-flat spacetime is an Einstein space and its scalar curvature is covariantly constant.",
      n, F(Flag::WFlat), all_of({F(Flag::Einstein), F(Flag::ConstantScalarCurvature)})));
  out.push_back(biconditional(
      "w_flat_killing_iff_lie_T_vanishes",
      "In a W-flat spacetime obeying the field equations with a cosmological term, xi is a "
      "Killing vector if and only if the Lie derivative of T along xi vanishes.",
      n, w_flat_sourced, F(Flag::Killing), F(Flag::LieTVanishes)));
  out.push_back(biconditional(
      "w_flat_conformal_killing_iff_inheritance",
      "In a W-flat spacetime obeying the field equations with a cosmological term, xi is a "
      "conformal Killing vector if and only if T inherits the symmetry.",
      n, w_flat_sourced, F(Flag::ConformalKilling), F(Flag::Inheritance)));
  out.push_back(implication(
      "w_flat_perfect_fluid_vacuum_like",
      "A W-flat perfect-fluid spacetime obeying the field equations has mu + p = 0.", n,
      all_of({F(Flag::WFlat), F(Flag::PerfectFluid)}), F(Flag::VacuumLikeEos)));
  out.push_back(implication(
      "codazzi_T_implies_ricci_conserved",
      "If the stress-energy tensor is of Codazzi type then the Ricci tensor is conserved.", n,
      F(Flag::CodazziT), F(Flag::RicciConserved)));
  out.push_back(biconditional(
      "ricci_codazzi_iff_harmonic_curvature",
      "The Ricci tensor is of Codazzi type if and only if the curvature is harmonic.", n, always,
      F(Flag::CodazziRicci), F(Flag::HarmonicCurvature)));
  out.push_back(implication(
      "harmonic_divergence_free_w_implies_parallel_ricci",
      "Harmonic curvature with divergence-free W implies a covariantly constant Ricci tensor.", n,
      all_of({F(Flag::HarmonicCurvature), F(Flag::DivergenceFreeW)}), F(Flag::ParallelRicci)));
  out.push_back(implication(
      "divergence_free_w_parallel_ricci_implies_constant_curvature",
      "Divergence-free W with a covariantly constant Ricci tensor implies constant curvature.", n,
      all_of({F(Flag::DivergenceFreeW), F(Flag::ParallelRicci)}), F(Flag::ConstantCurvature)));

  {
    TheoremVerdict t = biconditional(
        "electrovac_divergence_free_w_iff_parallel_T",
        "For a purely electromagnetic source, W is divergence-free if and only if T is "
        "covariantly constant.",
        n, F(Flag::Electrovac), F(Flag::DivergenceFreeW), F(Flag::ParallelT));
    attach(t, report, {"divergence_electromagnetic"});
    out.push_back(std::move(t));
  }
  {
    TheoremVerdict t = implication(
        "fluid_divergence_free_w_codazzi_T_implies_mu_minus_3p_constant",
        "A perfect fluid with divergence-free W and Codazzi stress-energy has mu - 3p constant.",
        n, fluid_div_free_codazzi, F(Flag::TraceGradientFree));
    if (t.status == TheoremStatus::Confirmed && t.hypothesis_points == n &&
        !report.point_holds(0, Flag::MuMinus3pConstant)) {
      t.status = TheoremStatus::Violated;
      t.conclusion_satisfied = false;
      t.counterexample = report.flag(Flag::MuMinus3pConstant).worst_point;
      t.detail = "mu - 3p varies across the grid";
    }
    attach(t, report, {"divergence_in_stress_energy", "codazzi_fluid_expansion", "trace_gradient"});
    out.push_back(std::move(t));
  }
  {
    TheoremVerdict t = implication(
        "fluid_divergence_free_w_codazzi_T_implies_radiative",
        "A perfect fluid with divergence-free W and Codazzi stress-energy is radiative (mu = 3p).",
        n, fluid_div_free_codazzi, F(Flag::Radiative));
    attach(t, report, {"trace_gradient"});
    out.push_back(std::move(t));
  }
  {
    TheoremVerdict t = implication(
        "fluid_divergence_free_w_implies_constant_density_pressure",
        "A perfect fluid with divergence-free W has constant pressure and density.", n,
        fluid_div_free, F(Flag::MatterConstant));
    attach(t, report,
           {"divergence_in_stress_energy", "divergence_free_stress_energy",
            "flow_contracted_divergence", "force_substituted", "density_gradient_balance"});
    out.push_back(std::move(t));
  }
  {
    TheoremVerdict t = implication(
        "fluid_divergence_free_w_implies_spatially_constant_or_expansion_free",
        "A perfect fluid with divergence-free W either has density and pressure constant on the "
        "hypersurfaces orthogonal to the flow or is expansion-free.",
        n, fluid_div_free, any_of({F(Flag::SpatialConstancy), F(Flag::ExpansionFree)}));
    attach(t, report,
           {"pressure_gradient_balance", "pressure_balance_before_energy", "pressure_balance"});
    out.push_back(std::move(t));
  }
  {
    const FrwAssessment a = frw_assessment(report, points, in);
    TheoremVerdict t;
    t.id = "fluid_divergence_free_w_einstein_or_frw";
    t.statement =
        "A perfect fluid with divergence-free W either obeys mu + p = 0 or is a "
        "Friedmann-Robertson-Walker model with mu - 3p constant.";
    t.hypothesis_points = a.hypothesis_points;
    t.hypothesis_satisfied = a.hypothesis_points > 0;
    t.conclusion_satisfied = a.einstein_branch || a.frw_branch;
    t.counterexample = a.counterexample;
    if (!in.fluid) {
      t.status = TheoremStatus::NotApplicable;
      t.detail = "required inputs are absent";
    } else if (a.hypothesis_points == 0) {
      t.status = TheoremStatus::Vacuous;
      t.detail = "hypothesis holds at no point";
    } else {
      t.status = t.conclusion_satisfied ? TheoremStatus::Confirmed : TheoremStatus::Violated;
      t.detail = "branch: " + a.verdict;
    }
    attach(t, report,
           {"combined_flow", "combined_flow_contracted", "split_gradient_density_pressure",
            "split_gradient_trace", "acceleration_relation", "density_gradient_relation",
            "reduced_flow", "pressure_rate_trace", "pressure_rate_energy", "projected_flow",
            "fluid_dichotomy", "shear_free_flow", "trace_constancy", "kinematic_vanishing",
            "force_equation_printed", "energy_equation"});
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace wcurv
