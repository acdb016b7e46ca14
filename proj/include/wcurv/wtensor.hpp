#pragma once

#include <wcurv/curvature.hpp>

namespace wcurv {

struct SymmetryProfile {
  Tensor<4> first_pair;        // W_abcd + W_bacd, vanishes identically
  Tensor<4> cyclic;            // W_abcd + W_bcad + W_cabd, vanishes identically
  Tensor<4> last_pair;         // W_abcd + W_abdc, nonzero in general
  Tensor<4> pair_interchange;  // W_abcd - W_cdab, nonzero in general

  // A symmetry that does not hold in general is "broken" at a point when its
  // relative residual exceeds the tolerance.
  bool last_pair_broken(double tol) const { return relative_residual(last_pair) > tol; }
  bool pair_interchange_broken(double tol) const {
    return relative_residual(pair_interchange) > tol;
  }
};

struct BianchiLike {
  Tensor<5> lhs;       // (a, b, c, d, e): nabla_a W_bcde + nabla_b W_cade + nabla_c W_abde
  Tensor<5> rhs;       // the same sum written through nabla Ricci
  Tensor<5> identity;  // lhs - rhs, vanishes for every metric
};

struct WDivergence {
  Tensor<3> value;          // (b, c, d) = nabla_h W^h_bcd from div Riemann and nabla Ricci
  Tensor<3> ricci_form;     // the same written through nabla Ricci only
  Tensor<3> direct;         // g^ha nabla_h W_abcd contracted from nabla W
  Tensor<3> form_residual;  // value - ricci_form
  Tensor<3> direct_residual;  // value - direct
};

struct WBundle {
  Tensor<4> low;     // W_abcd
  Tensor<4> mixed;   // W^h_bcd
  Tensor<2> contracted;            // W_bc = W^h_bch
  Tensor<2> contracted_formula;    // (4/3)(R_bc - R g_bc / 4)
  Tensor<2> contraction_residual;  // contracted - contracted_formula
  Quantity trace;                  // g^bc W_bc
  SymmetryProfile symmetry;
  Tensor<5> cov;                   // (e, a, b, c, d) = nabla_e W_abcd
  BianchiLike bianchi_like;
  Tensor<3> codazzi_ricci;         // (a, b, c) = nabla_a R_bc - nabla_b R_ac
  WDivergence div;
};

// W_abcd and W^h_bcd from the Riemann and Ricci tensors.
void w_tensor(const CurvatureBundle& cb, WBundle& out);
void w_contracted(const CurvatureBundle& cb, WBundle& out);
SymmetryProfile symmetry_profile(const Tensor<4>& w_low);
Tensor<5> cov_deriv_w(const CurvatureBundle& cb);
BianchiLike bianchi_like(const CurvatureBundle& cb, const Tensor<5>& cov_w);
Tensor<3> codazzi_residual(const Tensor<3>& cov_sym);
WDivergence div_w(const CurvatureBundle& cb, const Tensor<5>& cov_w);

WBundle compute_w(const CurvatureBundle& cb);

}  // namespace wcurv
