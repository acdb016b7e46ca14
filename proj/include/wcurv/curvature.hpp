#pragma once

// Levi-Civita curvature at a single point.
//
// Index convention: the first index of R^h_bcd is the raised one and the
// Ricci tensor is the contraction of that index with the last lower index,
//   R^h_bcd = d_d G^h_cb - d_c G^h_db + G^h_de G^e_cb - G^h_ce G^e_db,
//   R_bc    = R^h_bch,
// which is the sign for which R_abcd = g(R(e_a, e_b) e_c, e_d) with
// R(X,Y) = [D_X, D_Y] - D_[X,Y] and gives the de Sitter scalar +12 H^2 in
// the -+++ signature. All tensors carry term magnitudes (see Quantity).

#include <wcurv/metric.hpp>
#include <wcurv/tensor.hpp>

namespace wcurv {

struct Connection {
  Tensor<2> g;
  Tensor<2> g_inv;
  Tensor<3> dg;        // (c, a, b) = d_c g_ab
  Tensor<3> d_ginv;    // (c, a, b) = d_c g^ab
  Tensor<4> d2_ginv;   // (d, c, a, b)
  Tensor<3> gamma;     // (a, b, c) = G^a_bc
  Tensor<4> d_gamma;   // (d, a, b, c) = d_d G^a_bc
  Tensor<5> d2_gamma;  // (e, d, a, b, c) = d_e d_d G^a_bc
};

Connection christoffel(const MetricValue& mv);

struct Riemann {
  Tensor<4> mixed;    // (h, b, c, d) = R^h_bcd
  Tensor<4> low;      // (a, b, c, d) = R_abcd = g_ah R^h_bcd
  Tensor<5> d_mixed;  // (e, h, b, c, d) = d_e R^h_bcd
  Tensor<5> d_low;    // (e, a, b, c, d) = d_e R_abcd
};

Riemann riemann(const Connection& conn);

struct RicciScalar {
  Tensor<2> ricci;    // (b, c) = R^h_bch
  Quantity scalar;    // g^bc R_bc
  Tensor<3> d_ricci;  // (a, b, c) = d_a R_bc
  Vector grad_scalar; // d_a R
};

RicciScalar ricci_and_scalar(const Connection& conn, const Riemann& riem);

// (a, b, c) = nabla_a R_bc
Tensor<3> cov_deriv_ricci(const Connection& conn, const RicciScalar& rs);

struct CovariantRiemann {
  Tensor<5> value;            // (e, a, b, c, d) = nabla_e R_abcd
  Tensor<5> bianchi_residual; // nabla_e R_abcd + nabla_c R_abde + nabla_d R_abec
};

CovariantRiemann cov_deriv_riemann(const Connection& conn, const Riemann& riem);

struct RiemannDivergence {
  Tensor<3> direct;       // (b, c, d) = nabla_h R^h_bcd contracted from nabla R
  Tensor<3> from_ricci;   // nabla_d R_bc - nabla_c R_bd
  Tensor<3> residual;     // direct - from_ricci
};

RiemannDivergence div_riemann(const Connection& conn, const Tensor<5>& cov_riemann,
                              const Tensor<3>& cov_ricci);

// nabla_b R^ab - (1/2) nabla^a R, which vanishes for every metric.
Vector contracted_bianchi(const Connection& conn, const Tensor<3>& cov_ricci,
                          const Vector& grad_scalar);

// nabla_c g_ab computed from the connection.
Tensor<3> metric_covariant_derivative(const Connection& conn);

struct RiemannSymmetries {
  Tensor<4> antisym_first;  // R_abcd + R_bacd
  Tensor<4> antisym_last;   // R_abcd + R_abdc
  Tensor<4> pair;           // R_abcd - R_cdab
  Tensor<4> first_bianchi;  // R_abcd + R_bcad + R_cabd
};

RiemannSymmetries riemann_symmetries(const Tensor<4>& low);

struct CurvatureBundle {
  Connection conn;
  Riemann riemann;
  RicciScalar ricci;
  Tensor<3> cov_ricci;
  CovariantRiemann cov_riemann;
  RiemannDivergence div;
  Vector contracted_bianchi;
};

CurvatureBundle compute_curvature(const MetricValue& mv);

// Kretschmann invariant R_abcd R^abcd.
Quantity kretschmann(const Connection& conn, const Tensor<4>& low);

// Raises the first index: g^ha T_a...
Tensor<4> raise_first(const Tensor<2>& g_inv, const Tensor<4>& low);

}  // namespace wcurv
