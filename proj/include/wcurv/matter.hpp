#pragma once

// Matter side: stress-energy tensors, perfect fluids, flow kinematics,
// conservation laws, electromagnetic fields and symmetry vector fields.
// All tensors use the -+++ signature with u_a u^a = -1.

#include <wcurv/curvature.hpp>
#include <wcurv/expr.hpp>
#include <wcurv/metric.hpp>
#include <wcurv/wtensor.hpp>

#include <string>
#include <vector>

namespace wcurv {

struct ModelConstants {
  double lambda = 0.0;
  double kappa = 1.0;
};

// A scalar expression over a chart together with its coordinate gradient.
class FieldExpression {
 public:
  FieldExpression() = default;
  FieldExpression(expr::Expression e, const CoordinateChart& chart);

  const expr::Expression& expression() const { return expr_; }
  double value(const expr::Bindings& b) const;
  RealTensor<1> gradient(const expr::Bindings& b) const;

 private:
  expr::Expression expr_;
  std::array<expr::Expression, kDim> grad_;
};

using FieldVector = std::array<FieldExpression, kDim>;
using FieldMatrix = std::array<std::array<FieldExpression, kDim>, kDim>;

FieldVector make_field_vector(const std::array<expr::Expression, kDim>& e,
                              const CoordinateChart& chart);
FieldMatrix make_field_matrix(const ComponentArray& e, const CoordinateChart& chart);

// Fluid four-velocity u^a with upper index.
struct FluidSpec {
  FieldVector u;
};

// Energy density and pressure given as fields over the chart.
struct MatterFieldSpec {
  FieldExpression mu;
  FieldExpression p;
};

// Antisymmetric Faraday tensor F_ab.
struct FaradaySpec {
  FieldMatrix F;
};

// Vector field xi^a.
struct VectorFieldSpec {
  FieldVector xi;
};

// ---------------------------------------------------------------------------
// Stress-energy from the field equations

struct StressEnergy {
  Tensor<2> T;           // T_bc
  Quantity trace;        // g^bc T_bc
  Tensor<3> partial;     // (a, b, c) = d_a T_bc
  Tensor<3> cov;         // (a, b, c) = nabla_a T_bc
  Vector grad_trace;     // d_a T
  Quantity scalar_check; // R + k T - 4 Lambda
};

StressEnergy stress_energy_from_einstein(const CurvatureBundle& cb, const ModelConstants& k);

// ---------------------------------------------------------------------------
// Fluid flow

struct FlowValue {
  Vector up;        // u^a
  Vector low;       // u_a
  Tensor<2> d_up;   // (b, a) = d_b u^a
  Tensor<2> d_low;  // (b, a) = d_b u_a
  double norm = -1.0;
};

inline constexpr double kNormalizationTolerance = 1e-6;

// Throws NormalizationError when |g_ab u^a u^b + 1| exceeds 1e-6.
FlowValue evaluate_flow(const FluidSpec& fluid, const CurvatureBundle& cb,
                        const expr::Bindings& b, const std::string& where);

struct KinematicsDecomposition {
  Tensor<2> grad_u;     // (a, b) = nabla_b u_a
  Quantity theta;
  Vector accel;         // u-dot_a
  Tensor<2> h;          // g_ab + u_a u_b
  Tensor<2> shear;
  Tensor<2> vorticity;
  Tensor<2> reconstruction_residual;
  Quantity shear_trace;
  Vector shear_flow;      // sigma_ab u^b
  Vector vorticity_flow;  // omega_ab u^b
  Quantity accel_flow;    // u-dot_a u^a
  Tensor<2> vorticity_symmetric_part;
};

KinematicsDecomposition kinematics(const FlowValue& flow, const CurvatureBundle& cb);

struct FluidState {
  Quantity mu;
  Quantity p;
};

Tensor<2> perfect_fluid_T(const FluidState& s, const FlowValue& flow, const Connection& conn);

struct FluidRecovery {
  FluidState state;
  Tensor<2> anisotropy;  // T_ab - (mu + p) u_a u_b - p g_ab
};

FluidRecovery fluid_recover(const Tensor<2>& T, const FlowValue& flow, const Connection& conn);

// mu, p and their gradients at a point.
struct MatterState {
  Quantity mu;
  Quantity p;
  Vector grad_mu;
  Vector grad_p;
};

MatterState matter_from_fields(const MatterFieldSpec& m, const expr::Bindings& b);
MatterState matter_from_stress_energy(const StressEnergy& se, const FlowValue& flow);

struct ConservationResiduals {
  Vector force;          // (mu + p) u-dot_a + nabla_a p + p-dot u_a
  Vector force_printed;  // (mu + p) u-dot_a + nabla_a p - p-dot u_a
  Quantity energy;       // mu-dot + (mu + p) theta
};

ConservationResiduals conservation_residuals(const MatterState& m, const FlowValue& flow,
                                             const KinematicsDecomposition& kin);

// ---------------------------------------------------------------------------
// Electromagnetic field

struct FaradayValue {
  Tensor<2> F;
  Tensor<3> dF;  // (c, a, b) = d_c F_ab
};

FaradayValue evaluate_faraday(const FaradaySpec& f, const expr::Bindings& b);

struct ElectromagneticStress {
  Tensor<2> T;
  Quantity trace;
  Tensor<3> partial;  // d_a T_bc
  Tensor<3> cov;      // nabla_a T_bc
};

// T_ab = F_ac F_b^c - (1/4) g_ab F_pq F^pq, the positive-energy form for -+++.
ElectromagneticStress em_stress_energy(const FaradayValue& f, const Connection& conn);

// Least-squares coupling k minimising |R_ab - k T_ab| at one point.
double fit_coupling(const Tensor<2>& ricci, const Tensor<2>& T);

// R_ab - k T_ab
Tensor<2> electrovac_residual(const Tensor<2>& ricci, const Tensor<2>& T, double k);

// ---------------------------------------------------------------------------
// Lie derivatives

struct SymmetryReport {
  Tensor<2> lie_g;
  double killing_residual = 0.0;           // max |lie_g|
  double killing_relative = 0.0;
  Quantity omega;                          // (1/4) nabla_a xi^a
  Tensor<2> conformal;                     // lie_g - 2 Omega g
  double conformal_residual = 0.0;
  double conformal_relative = 0.0;
  Tensor<2> lie_T;
  double lie_T_residual = 0.0;             // max |lie_T|
  double lie_T_relative = 0.0;
  Tensor<2> inheritance;                   // lie_T - 2 Omega T
  double inheritance_residual = 0.0;
  double inheritance_relative = 0.0;
  Tensor<2> covariant_lie_g;               // nabla_a xi_b + nabla_b xi_a
  double covariant_agreement = 0.0;        // relative |lie_g - covariant_lie_g|
};

SymmetryReport symmetry_check(const VectorFieldSpec& xi, const expr::Bindings& b,
                              const Tensor<2>& T, const Tensor<3>& partial_T,
                              const CurvatureBundle& cb);

// ---------------------------------------------------------------------------
// Residuals of the fluid relations obtained from a divergence-free W tensor.
// Each entry is one relation written as "expression = 0"; whether it should
// vanish depends on hypotheses evaluated by the classifier.

enum class AuditHypothesis {
  FieldEquations,               // T defined by the field equations
  TraceFreeStressEnergy,        // g^ab T_ab = 0, as for a pure electromagnetic field
  DivergenceFreeW,              // nabla_h W^h_bcd = 0
  FluidConservation,            // perfect fluid whose stress-energy is conserved
  FluidCodazziDivergenceFree,   // perfect fluid, Codazzi T, divergence-free W
  FluidDivergenceFree,          // perfect fluid, divergence-free W
};

std::string_view to_string(AuditHypothesis h);

struct AuditEntry {
  std::string name;
  AuditHypothesis hypothesis;
  double max_abs = 0.0;
  double relative = 0.0;
};

template <int Rank>
AuditEntry make_audit(std::string name, AuditHypothesis h, const Tensor<Rank>& t) {
  return {std::move(name), h, max_abs(t), relative_residual(t)};
}

std::vector<AuditEntry> audit_geometric(const StressEnergy& se, const WBundle& wb,
                                        const Connection& conn, double kappa);

std::vector<AuditEntry> audit_fluid(const MatterState& m, const FlowValue& flow,
                                    const KinematicsDecomposition& kin, const Connection& conn);

}  // namespace wcurv
