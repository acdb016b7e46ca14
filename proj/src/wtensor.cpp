#include <wcurv/wtensor.hpp>

namespace wcurv {

namespace {

constexpr int N = kDim;
constexpr double kThird = 1.0 / 3.0;

// R^h_d = g^ha R_ad
Tensor<2> mixed_ricci(const CurvatureBundle& cb) {
  Tensor<2> out;
  for (int h = 0; h < N; ++h) {
    for (int d = 0; d < N; ++d) {
      Quantity s;
      for (int a = 0; a < N; ++a) s += cb.conn.g_inv(h, a) * cb.ricci.ricci(a, d);
      out(h, d) = s;
    }
  }
  return out;
}

}  // namespace

void w_tensor(const CurvatureBundle& cb, WBundle& out) {
  const auto& g = cb.conn.g;
  const auto& ric = cb.ricci.ricci;
  const auto& R = cb.riemann.low;
  const Tensor<2> ric_up = mixed_ricci(cb);

  Tensor<4>::for_each_index([&](const std::array<int, 4>& i) {
    const int a = i[0], b = i[1], c = i[2], d = i[3];
    out.low(a, b, c, d) = R(a, b, c, d) + kThird * (g(a, c) * ric(b, d) - g(b, c) * ric(a, d));
    Quantity corr = -(g(b, c) * ric_up(a, d));
    if (a == c) corr += ric(b, d);
    out.mixed(a, b, c, d) = cb.riemann.mixed(a, b, c, d) + kThird * corr;
  });
}

void w_contracted(const CurvatureBundle& cb, WBundle& out) {
  const auto& g = cb.conn.g;
  const auto& ric = cb.ricci.ricci;
  const Quantity R = cb.ricci.scalar;
  for (int b = 0; b < N; ++b) {
    for (int c = 0; c < N; ++c) {
      Quantity s;
      for (int h = 0; h < N; ++h) s += out.mixed(h, b, c, h);
      out.contracted(b, c) = s;
      out.contracted_formula(b, c) = (4.0 / 3.0) * (ric(b, c) - 0.25 * (R * g(b, c)));
      out.contraction_residual(b, c) = s - out.contracted_formula(b, c);
    }
  }
  Quantity t;
  for (int b = 0; b < N; ++b) {
    for (int c = 0; c < N; ++c) t += cb.conn.g_inv(b, c) * out.contracted(b, c);
  }
  out.trace = t;
}

SymmetryProfile symmetry_profile(const Tensor<4>& W) {
  SymmetryProfile s;
  Tensor<4>::for_each_index([&](const std::array<int, 4>& i) {
    const int a = i[0], b = i[1], c = i[2], d = i[3];
    s.first_pair(a, b, c, d) = W(a, b, c, d) + W(b, a, c, d);
    s.cyclic(a, b, c, d) = W(a, b, c, d) + W(b, c, a, d) + W(c, a, b, d);
    s.last_pair(a, b, c, d) = W(a, b, c, d) + W(a, b, d, c);
    s.pair_interchange(a, b, c, d) = W(a, b, c, d) - W(c, d, a, b);
  });
  return s;
}

Tensor<5> cov_deriv_w(const CurvatureBundle& cb) {
  const auto& g = cb.conn.g;
  const auto& cr = cb.cov_ricci;
  const auto& cR = cb.cov_riemann.value;
  Tensor<5> out;
  Tensor<5>::for_each_index([&](const std::array<int, 5>& i) {
    const int e = i[0], a = i[1], b = i[2], c = i[3], d = i[4];
    out(e, a, b, c, d) =
        cR(e, a, b, c, d) + kThird * (g(a, c) * cr(e, b, d) - g(b, c) * cr(e, a, d));
  });
  return out;
}

BianchiLike bianchi_like(const CurvatureBundle& cb, const Tensor<5>& cw) {
  const auto& g = cb.conn.g;
  const auto& cr = cb.cov_ricci;
  BianchiLike out;
  Tensor<5>::for_each_index([&](const std::array<int, 5>& i) {
    const int a = i[0], b = i[1], c = i[2], d = i[3], e = i[4];
    out.lhs(a, b, c, d, e) = cw(a, b, c, d, e) + cw(b, c, a, d, e) + cw(c, a, b, d, e);
    out.rhs(a, b, c, d, e) =
        kThird * (g(b, d) * (cr(a, c, e) - cr(c, a, e)) + g(c, d) * (cr(b, a, e) - cr(a, b, e)) +
                  g(a, d) * (cr(c, b, e) - cr(b, c, e)));
    out.identity(a, b, c, d, e) = out.lhs(a, b, c, d, e) - out.rhs(a, b, c, d, e);
  });
  return out;
}

Tensor<3> codazzi_residual(const Tensor<3>& cs) {
  Tensor<3> out;
  Tensor<3>::for_each_index([&](const std::array<int, 3>& i) {
    out(i[0], i[1], i[2]) = cs(i[0], i[1], i[2]) - cs(i[1], i[0], i[2]);
  });
  return out;
}

WDivergence div_w(const CurvatureBundle& cb, const Tensor<5>& cw) {
  const auto& g = cb.conn.g;
  const auto& gi = cb.conn.g_inv;
  const auto& cr = cb.cov_ricci;
  const auto& grad = cb.ricci.grad_scalar;
  WDivergence out;
  Tensor<3>::for_each_index([&](const std::array<int, 3>& i) {
    const int b = i[0], c = i[1], d = i[2];
    // nabla_h R^h_d is replaced by (1/2) nabla_d R.
    const Quantity tail = kThird * (cr(c, b, d) - 0.5 * (g(b, c) * grad(d)));
    out.value(b, c, d) = cb.div.direct(b, c, d) + tail;
    out.ricci_form(b, c, d) = cr(d, b, c) - cr(c, b, d) + tail;
    Quantity s;
    for (int h = 0; h < N; ++h) {
      for (int a = 0; a < N; ++a) s += gi(h, a) * cw(h, a, b, c, d);
    }
    out.direct(b, c, d) = s;
    out.form_residual(b, c, d) = out.value(b, c, d) - out.ricci_form(b, c, d);
    out.direct_residual(b, c, d) = out.value(b, c, d) - s;
  });
  return out;
}

WBundle compute_w(const CurvatureBundle& cb) {
  WBundle wb;
  w_tensor(cb, wb);
  w_contracted(cb, wb);
  wb.symmetry = symmetry_profile(wb.low);
  wb.cov = cov_deriv_w(cb);
  wb.bianchi_like = bianchi_like(cb, wb.cov);
  wb.codazzi_ricci = codazzi_residual(cb.cov_ricci);
  wb.div = div_w(cb, wb.cov);
  return wb;
}

}  // namespace wcurv
