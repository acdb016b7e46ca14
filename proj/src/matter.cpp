#include <wcurv/error.hpp>
#include <wcurv/matter.hpp>

#include <cmath>

namespace wcurv {

namespace {

constexpr int N = kDim;

Quantity contract(const Vector& u, const Vector& v) {
  Quantity s;
  for (int a = 0; a < N; ++a) s += u(a) * v(a);
  return s;
}

Vector to_vector(const RealTensor<1>& v) { return to_quantities(v); }

}  // namespace

FieldExpression::FieldExpression(expr::Expression e, const CoordinateChart& chart)
    : expr_(std::move(e)) {
  for (int i = 0; i < N; ++i) grad_[i] = expr::simplify(expr::differentiate(expr_, chart.names[i]));
}

double FieldExpression::value(const expr::Bindings& b) const { return expr::evaluate(expr_, b); }

RealTensor<1> FieldExpression::gradient(const expr::Bindings& b) const {
  RealTensor<1> out;
  for (int i = 0; i < N; ++i) out(i) = expr::evaluate(grad_[i], b);
  return out;
}

FieldVector make_field_vector(const std::array<expr::Expression, kDim>& e,
                              const CoordinateChart& chart) {
  FieldVector out;
  for (int i = 0; i < N; ++i) out[i] = FieldExpression(e[i], chart);
  return out;
}

FieldMatrix make_field_matrix(const ComponentArray& e, const CoordinateChart& chart) {
  FieldMatrix out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) out[i][j] = FieldExpression(e[i][j], chart);
  }
  return out;
}

StressEnergy stress_energy_from_einstein(const CurvatureBundle& cb, const ModelConstants& k) {
  const auto& g = cb.conn.g;
  const auto& dg = cb.conn.dg;
  const auto& rs = cb.ricci;
  const double inv_k = 1.0 / k.kappa;
  StressEnergy se;
  for (int b = 0; b < N; ++b) {
    for (int c = 0; c < N; ++c) {
      se.T(b, c) = inv_k * (rs.ricci(b, c) - 0.5 * (rs.scalar * g(b, c)) + k.lambda * g(b, c));
      for (int a = 0; a < N; ++a) {
        se.partial(a, b, c) =
            inv_k * (rs.d_ricci(a, b, c) -
                     0.5 * (rs.grad_scalar(a) * g(b, c) + rs.scalar * dg(a, b, c)) +
                     k.lambda * dg(a, b, c));
        se.cov(a, b, c) = inv_k * (cb.cov_ricci(a, b, c) - 0.5 * (rs.grad_scalar(a) * g(b, c)));
      }
    }
  }
  for (int b = 0; b < N; ++b) {
    for (int c = 0; c < N; ++c) se.trace += cb.conn.g_inv(b, c) * se.T(b, c);
  }
  for (int a = 0; a < N; ++a) {
    Quantity s;
    for (int b = 0; b < N; ++b) {
      for (int c = 0; c < N; ++c) {
        s += cb.conn.d_ginv(a, b, c) * se.T(b, c) + cb.conn.g_inv(b, c) * se.partial(a, b, c);
      }
    }
    se.grad_trace(a) = s;
  }
  se.scalar_check = rs.scalar + k.kappa * se.trace - Quantity(4.0 * k.lambda);
  return se;
}

FlowValue evaluate_flow(const FluidSpec& fluid, const CurvatureBundle& cb,
                        const expr::Bindings& b, const std::string& where) {
  const auto& g = cb.conn.g;
  FlowValue f;
  for (int a = 0; a < N; ++a) {
    f.up(a) = fluid.u[a].value(b);
    const RealTensor<1> grad = fluid.u[a].gradient(b);
    for (int c = 0; c < N; ++c) f.d_up(c, a) = grad(c);
  }
  double norm = 0.0;
  for (int a = 0; a < N; ++a) {
    Quantity s;
    for (int c = 0; c < N; ++c) {
      s += g(a, c) * f.up(c);
      norm += g(a, c).value * f.up(a).value * f.up(c).value;
    }
    f.low(a) = s;
  }
  f.norm = norm;
  if (!(std::abs(norm + 1.0) <= kNormalizationTolerance)) throw NormalizationError(where, norm);
  for (int bb = 0; bb < N; ++bb) {
    for (int a = 0; a < N; ++a) {
      Quantity s;
      for (int c = 0; c < N; ++c) s += cb.conn.dg(bb, a, c) * f.up(c) + g(a, c) * f.d_up(bb, c);
      f.d_low(bb, a) = s;
    }
  }
  return f;
}

KinematicsDecomposition kinematics(const FlowValue& flow, const CurvatureBundle& cb) {
  const auto& g = cb.conn.g;
  const auto& gi = cb.conn.g_inv;
  const auto& u = flow.low;
  const auto& uu = flow.up;
  KinematicsDecomposition k;

  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      Quantity s = flow.d_low(b, a);
      for (int c = 0; c < N; ++c) s -= cb.conn.gamma(c, a, b) * u(c);
      k.grad_u(a, b) = s;
    }
  }
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) k.theta += gi(a, b) * k.grad_u(a, b);
  }
  for (int a = 0; a < N; ++a) {
    Quantity s;
    for (int b = 0; b < N; ++b) s += k.grad_u(a, b) * uu(b);
    k.accel(a) = s;
  }

  Tensor<2> hm;  // (c, a) = h^c_a
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      k.h(a, b) = g(a, b) + u(a) * u(b);
      hm(a, b) = Quantity(delta(a, b)) + uu(a) * u(b);
    }
  }
  Tensor<2> proj;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      Quantity s;
      for (int c = 0; c < N; ++c) {
        for (int d = 0; d < N; ++d) s += hm(c, a) * hm(d, b) * k.grad_u(c, d);
      }
      proj(a, b) = s;
    }
  }
  const double third = 1.0 / 3.0;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      k.shear(a, b) = 0.5 * (proj(a, b) + proj(b, a)) - third * (k.theta * k.h(a, b));
      k.vorticity(a, b) = 0.5 * (proj(a, b) - proj(b, a));
    }
  }
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      k.reconstruction_residual(a, b) =
          k.grad_u(a, b) - (third * (k.theta * k.h(a, b)) - k.accel(a) * u(b) + k.shear(a, b) +
                            k.vorticity(a, b));
      k.shear_trace += gi(a, b) * k.shear(a, b);
      k.vorticity_symmetric_part(a, b) = k.vorticity(a, b) + k.vorticity(b, a);
    }
    Quantity sf, vf;
    for (int b = 0; b < N; ++b) {
      sf += k.shear(a, b) * uu(b);
      vf += k.vorticity(a, b) * uu(b);
    }
    k.shear_flow(a) = sf;
    k.vorticity_flow(a) = vf;
    k.accel_flow += k.accel(a) * uu(a);
  }
  return k;
}

Tensor<2> perfect_fluid_T(const FluidState& s, const FlowValue& flow, const Connection& conn) {
  Tensor<2> T;
  for (int b = 0; b < N; ++b) {
    for (int c = 0; c < N; ++c) {
      T(b, c) = (s.mu + s.p) * flow.low(b) * flow.low(c) + s.p * conn.g(b, c);
    }
  }
  return T;
}

FluidRecovery fluid_recover(const Tensor<2>& T, const FlowValue& flow, const Connection& conn) {
  FluidRecovery r;
  Quantity mu, trace;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      mu += T(a, b) * flow.up(a) * flow.up(b);
      trace += conn.g_inv(a, b) * T(a, b);
    }
  }
  r.state.mu = mu;
  r.state.p = (1.0 / 3.0) * (trace + mu);
  const Tensor<2> model = perfect_fluid_T(r.state, flow, conn);
  for (std::size_t i = 0; i < T.size; ++i) r.anisotropy.at_flat(i) = T.at_flat(i) - model.at_flat(i);
  return r;
}

MatterState matter_from_fields(const MatterFieldSpec& m, const expr::Bindings& b) {
  MatterState s;
  s.mu = m.mu.value(b);
  s.p = m.p.value(b);
  s.grad_mu = to_vector(m.mu.gradient(b));
  s.grad_p = to_vector(m.p.gradient(b));
  return s;
}

MatterState matter_from_stress_energy(const StressEnergy& se, const FlowValue& flow) {
  MatterState s;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) s.mu += se.T(a, b) * flow.up(a) * flow.up(b);
  }
  s.p = (1.0 / 3.0) * (se.trace + s.mu);
  for (int c = 0; c < N; ++c) {
    Quantity d;
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        d += se.partial(c, a, b) * flow.up(a) * flow.up(b);
        d += 2.0 * (se.T(a, b) * flow.d_up(c, a) * flow.up(b));
      }
    }
    s.grad_mu(c) = d;
    s.grad_p(c) = (1.0 / 3.0) * (se.grad_trace(c) + d);
  }
  return s;
}

ConservationResiduals conservation_residuals(const MatterState& m, const FlowValue& flow,
                                             const KinematicsDecomposition& kin) {
  ConservationResiduals r;
  const Quantity sum = m.mu + m.p;
  const Quantity mu_dot = contract(flow.up, m.grad_mu);
  const Quantity p_dot = contract(flow.up, m.grad_p);
  for (int a = 0; a < N; ++a) {
    const Quantity base = sum * kin.accel(a) + m.grad_p(a);
    r.force(a) = base + p_dot * flow.low(a);
    r.force_printed(a) = base - p_dot * flow.low(a);
  }
  r.energy = mu_dot + sum * kin.theta;
  return r;
}

FaradayValue evaluate_faraday(const FaradaySpec& f, const expr::Bindings& b) {
  FaradayValue v;
  for (int a = 0; a < N; ++a) {
    for (int c = 0; c < N; ++c) {
      v.F(a, c) = f.F[a][c].value(b);
      const RealTensor<1> grad = f.F[a][c].gradient(b);
      for (int e = 0; e < N; ++e) v.dF(e, a, c) = grad(e);
    }
  }
  return v;
}

ElectromagneticStress em_stress_energy(const FaradayValue& f, const Connection& conn) {
  const auto& g = conn.g;
  const auto& gi = conn.g_inv;
  const auto& F = f.F;
  ElectromagneticStress em;

  Tensor<2> up;  // F^pq
  for (int p = 0; p < N; ++p) {
    for (int q = 0; q < N; ++q) {
      Quantity s;
      for (int r = 0; r < N; ++r) {
        for (int t = 0; t < N; ++t) s += gi(p, r) * gi(q, t) * F(r, t);
      }
      up(p, q) = s;
    }
  }
  Quantity invariant;
  for (std::size_t i = 0; i < F.size; ++i) invariant += F.at_flat(i) * up.at_flat(i);

  Vector d_invariant;
  for (int e = 0; e < N; ++e) {
    Quantity s;
    for (int p = 0; p < N; ++p) {
      for (int q = 0; q < N; ++q) {
        s += 2.0 * (f.dF(e, p, q) * up(p, q));
        for (int r = 0; r < N; ++r) {
          for (int t = 0; t < N; ++t) {
            s += F(p, q) * (conn.d_ginv(e, p, r) * gi(q, t) + gi(p, r) * conn.d_ginv(e, q, t)) *
                 F(r, t);
          }
        }
      }
    }
    d_invariant(e) = s;
  }

  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      Quantity x;
      for (int c = 0; c < N; ++c) {
        for (int d = 0; d < N; ++d) x += F(a, c) * gi(c, d) * F(b, d);
      }
      em.T(a, b) = x - 0.25 * (g(a, b) * invariant);
      for (int e = 0; e < N; ++e) {
        Quantity dx;
        for (int c = 0; c < N; ++c) {
          for (int d = 0; d < N; ++d) {
            dx += f.dF(e, a, c) * gi(c, d) * F(b, d);
            dx += F(a, c) * conn.d_ginv(e, c, d) * F(b, d);
            dx += F(a, c) * gi(c, d) * f.dF(e, b, d);
          }
        }
        em.partial(e, a, b) =
            dx - 0.25 * (conn.dg(e, a, b) * invariant + g(a, b) * d_invariant(e));
      }
    }
  }
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) em.trace += gi(a, b) * em.T(a, b);
  }
  for (int e = 0; e < N; ++e) {
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        Quantity s = em.partial(e, a, b);
        for (int d = 0; d < N; ++d) {
          s -= conn.gamma(d, e, a) * em.T(d, b);
          s -= conn.gamma(d, e, b) * em.T(a, d);
        }
        em.cov(e, a, b) = s;
      }
    }
  }
  return em;
}

double fit_coupling(const Tensor<2>& ricci, const Tensor<2>& T) {
  double rt = 0.0, tt = 0.0;
  for (std::size_t i = 0; i < T.size; ++i) {
    rt += ricci.at_flat(i).value * T.at_flat(i).value;
    tt += T.at_flat(i).value * T.at_flat(i).value;
  }
  return tt > 0.0 ? rt / tt : 0.0;
}

Tensor<2> electrovac_residual(const Tensor<2>& ricci, const Tensor<2>& T, double k) {
  Tensor<2> out;
  for (std::size_t i = 0; i < T.size; ++i) out.at_flat(i) = ricci.at_flat(i) - k * T.at_flat(i);
  return out;
}

SymmetryReport symmetry_check(const VectorFieldSpec& spec, const expr::Bindings& b,
                              const Tensor<2>& T, const Tensor<3>& partial_T,
                              const CurvatureBundle& cb) {
  const auto& conn = cb.conn;
  const auto& g = conn.g;
  Vector xi;
  Tensor<2> dxi;  // (a, c) = d_a xi^c
  for (int c = 0; c < N; ++c) {
    xi(c) = spec.xi[c].value(b);
    const RealTensor<1> grad = spec.xi[c].gradient(b);
    for (int a = 0; a < N; ++a) dxi(a, c) = grad(a);
  }

  SymmetryReport r;
  Quantity div;
  for (int a = 0; a < N; ++a) {
    div += dxi(a, a);
    for (int c = 0; c < N; ++c) div += conn.gamma(a, a, c) * xi(c);
  }
  r.omega = 0.25 * div;

  Vector xi_low;
  for (int a = 0; a < N; ++a) {
    Quantity s;
    for (int c = 0; c < N; ++c) s += g(a, c) * xi(c);
    xi_low(a) = s;
  }
  Tensor<2> cov_xi;  // (a, b) = nabla_a xi_b
  for (int a = 0; a < N; ++a) {
    for (int bb = 0; bb < N; ++bb) {
      Quantity s;
      for (int c = 0; c < N; ++c) s += conn.dg(a, bb, c) * xi(c) + g(bb, c) * dxi(a, c);
      for (int d = 0; d < N; ++d) s -= conn.gamma(d, a, bb) * xi_low(d);
      cov_xi(a, bb) = s;
    }
  }

  Tensor<2> agreement;
  for (int a = 0; a < N; ++a) {
    for (int bb = 0; bb < N; ++bb) {
      Quantity lg, lt;
      for (int c = 0; c < N; ++c) {
        lg += xi(c) * conn.dg(c, a, bb) + g(c, bb) * dxi(a, c) + g(a, c) * dxi(bb, c);
        lt += xi(c) * partial_T(c, a, bb) + T(c, bb) * dxi(a, c) + T(a, c) * dxi(bb, c);
      }
      r.lie_g(a, bb) = lg;
      r.lie_T(a, bb) = lt;
      r.conformal(a, bb) = lg - 2.0 * (r.omega * g(a, bb));
      r.inheritance(a, bb) = lt - 2.0 * (r.omega * T(a, bb));
      r.covariant_lie_g(a, bb) = cov_xi(a, bb) + cov_xi(bb, a);
      agreement(a, bb) = lg - r.covariant_lie_g(a, bb);
    }
  }
  r.killing_residual = max_abs(r.lie_g);
  r.killing_relative = relative_residual(r.lie_g);
  r.conformal_residual = max_abs(r.conformal);
  r.conformal_relative = relative_residual(r.conformal);
  r.lie_T_residual = max_abs(r.lie_T);
  r.lie_T_relative = relative_residual(r.lie_T);
  r.inheritance_residual = max_abs(r.inheritance);
  r.inheritance_relative = relative_residual(r.inheritance);
  r.covariant_agreement = relative_residual(agreement);
  return r;
}

std::string_view to_string(AuditHypothesis h) {
  switch (h) {
    case AuditHypothesis::FieldEquations: return "field_equations";
    case AuditHypothesis::TraceFreeStressEnergy: return "trace_free_stress_energy";
    case AuditHypothesis::DivergenceFreeW: return "divergence_free_w";
    case AuditHypothesis::FluidConservation: return "perfect_fluid";
    case AuditHypothesis::FluidCodazziDivergenceFree: return "perfect_fluid_codazzi_t_divergence_free_w";
    case AuditHypothesis::FluidDivergenceFree: return "perfect_fluid_divergence_free_w";
  }
  return "unknown";
}

std::vector<AuditEntry> audit_geometric(const StressEnergy& se, const WBundle& wb,
                                        const Connection& conn, double kappa) {
  const auto& g = conn.g;
  const auto& cT = se.cov;
  const auto& gT = se.grad_trace;
  Tensor<3> in_T, electro, div_free;
  Tensor<3>::for_each_index([&](const std::array<int, 3>& i) {
    const int b = i[0], c = i[1], d = i[2];
    const Quantity core = cT(d, b, c) - (2.0 / 3.0) * cT(c, b, d);
    in_T(b, c, d) = wb.div.value(b, c, d) -
                    (kappa * core + (kappa / 3.0) * (g(b, d) * gT(c) - 2.5 * (g(b, c) * gT(d))));
    electro(b, c, d) = wb.div.value(b, c, d) - kappa * core;
    div_free(b, c, d) = cT(d, b, c) - (5.0 / 6.0) * (g(b, c) * gT(d)) -
                        (2.0 / 3.0) * cT(c, b, d) + (1.0 / 3.0) * (g(b, d) * gT(c));
  });
  using H = AuditHypothesis;
  return {
      make_audit("divergence_in_stress_energy", H::FieldEquations, in_T),
      make_audit("divergence_electromagnetic", H::TraceFreeStressEnergy, electro),
      make_audit("divergence_free_stress_energy", H::DivergenceFreeW, div_free),
  };
}

std::vector<AuditEntry> audit_fluid(const MatterState& m, const FlowValue& flow,
                                    const KinematicsDecomposition& kin, const Connection& conn) {
  const auto& g = conn.g;
  const auto& u = flow.low;
  const auto& A = kin.grad_u;  // A(b, c) = nabla_c u_b
  const auto& acc = kin.accel;
  const Quantity S = m.mu + m.p;
  const Quantity theta = kin.theta;

  // Gradient and flow derivative of alpha mu + beta p.
  auto grad = [&](double alpha, double beta) {
    Vector v;
    for (int c = 0; c < N; ++c) v(c) = alpha * m.grad_mu(c) + beta * m.grad_p(c);
    return v;
  };
  auto rate = [&](double alpha, double beta) { return contract(flow.up, grad(alpha, beta)); };

  const Vector g_S = grad(1, 1), g_D = grad(-1, 3), g_p = grad(0, 1), g_mu = grad(1, 0);
  const Vector g_2m3p = grad(2, -3);
  const Quantity S_dot = rate(1, 1), D_dot = rate(-1, 3), p_dot = rate(0, 1), mu_dot = rate(1, 0);
  const Quantity mu_m_p_dot = rate(1, -1), mu_m_3p_dot = rate(1, -3), mu_p_3p_dot = rate(1, 3);
  const Quantity five_mu_21p_dot = rate(5, -21);
  constexpr double third = 1.0 / 3.0, two_thirds = 2.0 / 3.0, five_sixths = 5.0 / 6.0;

  Tensor<3> codazzi_fluid;  // (b, c, d)
  Tensor<3>::for_each_index([&](const std::array<int, 3>& i) {
    const int b = i[0], c = i[1], d = i[2];
    codazzi_fluid(b, c, d) =
        third * (g_S(c) * u(b) * u(d) + S * A(b, c) * u(d) + S * u(b) * A(d, c) + g_p(c) * g(b, d)) +
        third * (g(b, d) * g_D(c)) - five_sixths * (g(b, c) * g_D(d));
  });

  const Vector trace_gradient = grad(1, -3);
  Vector force_printed;
  const Quantity energy = mu_dot + S * theta;

  Tensor<2> flow_contracted, substituted, combined, reduced, projected, dichotomy, shear_free,
      kinematic;
  Vector density_balance, pressure_balance, pre_energy, pressure_final, combined_contracted,
      split_2m3p, split_trace, acceleration, density_gradient;
  for (int b = 0; b < N; ++b) {
    force_printed(b) = S * acc(b) + g_p(b) - p_dot * u(b);
    for (int c = 0; c < N; ++c) {
      const Quantity gbc = g(b, c);
      const Quantity hbc = g(b, c) + u(b) * u(c);
      flow_contracted(b, c) = S_dot * u(b) * u(c) + S * acc(b) * u(c) + S * u(b) * acc(c) +
                              p_dot * gbc - five_sixths * (D_dot * gbc) +
                              two_thirds * (g_S(c) * u(b)) + two_thirds * (S * A(b, c)) -
                              two_thirds * (g_p(c) * u(b)) + third * (g_D(c) * u(b));
      substituted(b, c) = mu_m_p_dot * u(b) * u(c) - g_p(b) * u(c) + p_dot * gbc +
                          two_thirds * (S * A(b, c)) - five_sixths * (D_dot * gbc) +
                          third * (g_mu(c) * u(b));
      combined(b, c) = mu_p_3p_dot * u(b) * u(c) + p_dot * gbc - g_p(b) * u(c) -
                       five_sixths * (D_dot * gbc) + third * (g_2m3p(c) * u(b)) +
                       two_thirds * (S * A(b, c)) + third * (g_D(c) * u(b));
      reduced(b, c) = p_dot * gbc - g_p(b) * u(c) - five_sixths * (D_dot * gbc) +
                      third * (S * A(b, c)) + third * (g_D(c) * u(b));
      projected(b, c) = S * acc(b) * u(c) + p_dot * hbc + third * (S * A(b, c)) -
                        five_sixths * (D_dot * gbc) + third * (g_D(c) * u(b));
      shear_free(b, c) = A(b, c) + 3.0 * (acc(b) * u(c)) - third * (theta * hbc);
      dichotomy(b, c) = S * shear_free(b, c);
      kinematic(b, c) = 2.0 * (acc(b) * u(c)) + kin.shear(b, c) + kin.vorticity(b, c);
    }
    density_balance(b) = (1.0 / 6.0) * (mu_m_3p_dot * u(b)) - third * g_mu(b);
    pressure_balance(b) = 1.5 * (mu_m_3p_dot * u(b)) + two_thirds * (S * acc(b)) + g_p(b);
    pre_energy(b) = 1.5 * (mu_dot * u(b)) - (31.0 / 6.0) * (p_dot * u(b)) + third * g_p(b);
    pressure_final(b) =
        1.5 * (S * theta * u(b)) + (31.0 / 6.0) * (p_dot * u(b)) - two_thirds * g_p(b);
    combined_contracted(b) = mu_p_3p_dot * u(b) + five_sixths * (D_dot * u(b)) +
                             third * g_2m3p(b) + third * g_D(b);
    split_2m3p(b) = g_2m3p(b) + 3.0 * (mu_p_3p_dot * u(b));
    split_trace(b) = g_D(b) + 2.5 * (D_dot * u(b));
    acceleration(b) = S * acc(b) + third * (mu_dot * u(b)) + (2.0 / 9.0) * grad(1, 3)(b);
    density_gradient(b) = g_mu(b) + 3.0 * (S * acc(b)) + 0.5 * (five_mu_21p_dot * u(b));
  }
  const Quantity rate_trace =
      p_dot - (10.0 / 9.0) * D_dot + (1.0 / 9.0) * (S * theta) + (1.0 / 9.0) * D_dot;
  const Quantity rate_energy = p_dot - (3.0 / 7.0) * mu_dot - (1.0 / 21.0) * D_dot;

  auto scalar_entry = [](std::string name, AuditHypothesis h, Quantity q) {
    return AuditEntry{std::move(name), h, std::abs(q.value), relative_residual(q)};
  };

  using H = AuditHypothesis;
  return {
      make_audit("codazzi_fluid_expansion", H::FluidCodazziDivergenceFree, codazzi_fluid),
      make_audit("trace_gradient", H::FluidCodazziDivergenceFree, trace_gradient),
      make_audit("flow_contracted_divergence", H::FluidDivergenceFree, flow_contracted),
      make_audit("force_equation_printed", H::FluidConservation, force_printed),
      scalar_entry("energy_equation", H::FluidConservation, energy),
      make_audit("force_substituted", H::FluidDivergenceFree, substituted),
      make_audit("density_gradient_balance", H::FluidDivergenceFree, density_balance),
      make_audit("pressure_gradient_balance", H::FluidDivergenceFree, pressure_balance),
      make_audit("pressure_balance_before_energy", H::FluidDivergenceFree, pre_energy),
      make_audit("pressure_balance", H::FluidDivergenceFree, pressure_final),
      make_audit("combined_flow", H::FluidDivergenceFree, combined),
      make_audit("combined_flow_contracted", H::FluidDivergenceFree, combined_contracted),
      make_audit("split_gradient_density_pressure", H::FluidDivergenceFree, split_2m3p),
      make_audit("split_gradient_trace", H::FluidDivergenceFree, split_trace),
      make_audit("acceleration_relation", H::FluidDivergenceFree, acceleration),
      make_audit("density_gradient_relation", H::FluidDivergenceFree, density_gradient),
      make_audit("reduced_flow", H::FluidDivergenceFree, reduced),
      scalar_entry("pressure_rate_trace", H::FluidDivergenceFree, rate_trace),
      scalar_entry("pressure_rate_energy", H::FluidDivergenceFree, rate_energy),
      make_audit("projected_flow", H::FluidDivergenceFree, projected),
      make_audit("fluid_dichotomy", H::FluidDivergenceFree, dichotomy),
      make_audit("shear_free_flow", H::FluidDivergenceFree, shear_free),
      make_audit("trace_constancy", H::FluidDivergenceFree, g_D),
      make_audit("kinematic_vanishing", H::FluidDivergenceFree, kinematic),
  };
}

}  // namespace wcurv
