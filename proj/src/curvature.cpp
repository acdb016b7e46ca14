#include <wcurv/curvature.hpp>

namespace wcurv {

namespace {
constexpr int N = kDim;
}  // namespace

Connection christoffel(const MetricValue& mv) {
  Connection c;
  c.g = to_quantities(mv.g);
  c.g_inv = to_quantities(mv.g_inv);
  c.dg = to_quantities(mv.dg);
  const Tensor<4> d2g = to_quantities(mv.d2g);
  const Tensor<5> d3g = to_quantities(mv.d3g);

  for (int k = 0; k < N; ++k) {
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        Quantity s;
        for (int p = 0; p < N; ++p) {
          for (int q = 0; q < N; ++q) s += c.g_inv(a, p) * c.dg(k, p, q) * c.g_inv(q, b);
        }
        c.d_ginv(k, a, b) = -s;
      }
    }
  }
  for (int l = 0; l < N; ++l) {
    for (int k = 0; k < N; ++k) {
      for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
          Quantity s;
          for (int p = 0; p < N; ++p) {
            for (int q = 0; q < N; ++q) {
              s += c.d_ginv(l, a, p) * c.dg(k, p, q) * c.g_inv(q, b);
              s += c.g_inv(a, p) * d2g(l, k, p, q) * c.g_inv(q, b);
              s += c.g_inv(a, p) * c.dg(k, p, q) * c.d_ginv(l, q, b);
            }
          }
          c.d2_ginv(l, k, a, b) = -s;
        }
      }
    }
  }

  // Christoffel symbols of the first kind G_dbc and their partials.
  Tensor<3> first;
  Tensor<4> d_first;
  Tensor<5> d2_first;
  for (int d = 0; d < N; ++d) {
    for (int b = 0; b < N; ++b) {
      for (int e = 0; e < N; ++e) {
        first(d, b, e) = 0.5 * (c.dg(b, d, e) + c.dg(e, d, b) - c.dg(d, b, e));
        for (int k = 0; k < N; ++k) {
          d_first(k, d, b, e) = 0.5 * (d2g(k, b, d, e) + d2g(k, e, d, b) - d2g(k, d, b, e));
          for (int l = 0; l < N; ++l) {
            d2_first(l, k, d, b, e) =
                0.5 * (d3g(l, k, b, d, e) + d3g(l, k, e, d, b) - d3g(l, k, d, b, e));
          }
        }
      }
    }
  }

  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      for (int e = 0; e < N; ++e) {
        Quantity s;
        for (int d = 0; d < N; ++d) s += c.g_inv(a, d) * first(d, b, e);
        c.gamma(a, b, e) = s;
        for (int k = 0; k < N; ++k) {
          Quantity dk;
          for (int d = 0; d < N; ++d) {
            dk += c.d_ginv(k, a, d) * first(d, b, e) + c.g_inv(a, d) * d_first(k, d, b, e);
          }
          c.d_gamma(k, a, b, e) = dk;
          for (int l = 0; l < N; ++l) {
            Quantity dkl;
            for (int d = 0; d < N; ++d) {
              dkl += c.d2_ginv(l, k, a, d) * first(d, b, e);
              dkl += c.d_ginv(k, a, d) * d_first(l, d, b, e);
              dkl += c.d_ginv(l, a, d) * d_first(k, d, b, e);
              dkl += c.g_inv(a, d) * d2_first(l, k, d, b, e);
            }
            c.d2_gamma(l, k, a, b, e) = dkl;
          }
        }
      }
    }
  }
  return c;
}

Riemann riemann(const Connection& c) {
  Riemann r;
  for (int h = 0; h < N; ++h) {
    for (int b = 0; b < N; ++b) {
      for (int cc = 0; cc < N; ++cc) {
        for (int d = 0; d < N; ++d) {
          Quantity s = c.d_gamma(d, h, cc, b) - c.d_gamma(cc, h, d, b);
          for (int e = 0; e < N; ++e) {
            s += c.gamma(h, d, e) * c.gamma(e, cc, b);
            s -= c.gamma(h, cc, e) * c.gamma(e, d, b);
          }
          r.mixed(h, b, cc, d) = s;

          for (int f = 0; f < N; ++f) {
            Quantity ds = c.d2_gamma(f, d, h, cc, b) - c.d2_gamma(f, cc, h, d, b);
            for (int e = 0; e < N; ++e) {
              ds += c.d_gamma(f, h, d, e) * c.gamma(e, cc, b);
              ds += c.gamma(h, d, e) * c.d_gamma(f, e, cc, b);
              ds -= c.d_gamma(f, h, cc, e) * c.gamma(e, d, b);
              ds -= c.gamma(h, cc, e) * c.d_gamma(f, e, d, b);
            }
            r.d_mixed(f, h, b, cc, d) = ds;
          }
        }
      }
    }
  }

  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      for (int cc = 0; cc < N; ++cc) {
        for (int d = 0; d < N; ++d) {
          Quantity s;
          for (int h = 0; h < N; ++h) s += c.g(a, h) * r.mixed(h, b, cc, d);
          r.low(a, b, cc, d) = s;
          for (int f = 0; f < N; ++f) {
            Quantity ds;
            for (int h = 0; h < N; ++h) {
              ds += c.dg(f, a, h) * r.mixed(h, b, cc, d) + c.g(a, h) * r.d_mixed(f, h, b, cc, d);
            }
            r.d_low(f, a, b, cc, d) = ds;
          }
        }
      }
    }
  }
  return r;
}

RicciScalar ricci_and_scalar(const Connection& c, const Riemann& riem) {
  RicciScalar rs;
  for (int b = 0; b < N; ++b) {
    for (int cc = 0; cc < N; ++cc) {
      Quantity s;
      for (int h = 0; h < N; ++h) s += riem.mixed(h, b, cc, h);
      rs.ricci(b, cc) = s;
      for (int f = 0; f < N; ++f) {
        Quantity ds;
        for (int h = 0; h < N; ++h) ds += riem.d_mixed(f, h, b, cc, h);
        rs.d_ricci(f, b, cc) = ds;
      }
    }
  }
  for (int b = 0; b < N; ++b) {
    for (int cc = 0; cc < N; ++cc) rs.scalar += c.g_inv(b, cc) * rs.ricci(b, cc);
  }
  for (int f = 0; f < N; ++f) {
    Quantity s;
    for (int b = 0; b < N; ++b) {
      for (int cc = 0; cc < N; ++cc) {
        s += c.d_ginv(f, b, cc) * rs.ricci(b, cc) + c.g_inv(b, cc) * rs.d_ricci(f, b, cc);
      }
    }
    rs.grad_scalar(f) = s;
  }
  return rs;
}

Tensor<3> cov_deriv_ricci(const Connection& c, const RicciScalar& rs) {
  Tensor<3> out;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      for (int cc = 0; cc < N; ++cc) {
        Quantity s = rs.d_ricci(a, b, cc);
        for (int d = 0; d < N; ++d) {
          s -= c.gamma(d, a, b) * rs.ricci(d, cc);
          s -= c.gamma(d, a, cc) * rs.ricci(b, d);
        }
        out(a, b, cc) = s;
      }
    }
  }
  return out;
}

CovariantRiemann cov_deriv_riemann(const Connection& c, const Riemann& riem) {
  CovariantRiemann out;
  const auto& R = riem.low;
  for (int e = 0; e < N; ++e) {
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        for (int cc = 0; cc < N; ++cc) {
          for (int d = 0; d < N; ++d) {
            Quantity s = riem.d_low(e, a, b, cc, d);
            for (int f = 0; f < N; ++f) {
              s -= c.gamma(f, e, a) * R(f, b, cc, d);
              s -= c.gamma(f, e, b) * R(a, f, cc, d);
              s -= c.gamma(f, e, cc) * R(a, b, f, d);
              s -= c.gamma(f, e, d) * R(a, b, cc, f);
            }
            out.value(e, a, b, cc, d) = s;
          }
        }
      }
    }
  }
  const auto& V = out.value;
  Tensor<5>::for_each_index([&](const std::array<int, 5>& i) {
    const int e = i[0], a = i[1], b = i[2], cc = i[3], d = i[4];
    out.bianchi_residual(e, a, b, cc, d) = V(e, a, b, cc, d) + V(cc, a, b, d, e) + V(d, a, b, e, cc);
  });
  return out;
}

RiemannDivergence div_riemann(const Connection& c, const Tensor<5>& cov_riemann,
                              const Tensor<3>& cov_ricci) {
  RiemannDivergence out;
  for (int b = 0; b < N; ++b) {
    for (int cc = 0; cc < N; ++cc) {
      for (int d = 0; d < N; ++d) {
        Quantity s;
        for (int h = 0; h < N; ++h) {
          for (int a = 0; a < N; ++a) s += c.g_inv(h, a) * cov_riemann(h, a, b, cc, d);
        }
        out.direct(b, cc, d) = s;
        out.from_ricci(b, cc, d) = cov_ricci(d, b, cc) - cov_ricci(cc, b, d);
        out.residual(b, cc, d) = out.direct(b, cc, d) - out.from_ricci(b, cc, d);
      }
    }
  }
  return out;
}

Vector contracted_bianchi(const Connection& c, const Tensor<3>& cov_ricci,
                          const Vector& grad_scalar) {
  Vector lowered;
  for (int p = 0; p < N; ++p) {
    Quantity s;
    for (int b = 0; b < N; ++b) {
      for (int q = 0; q < N; ++q) s += c.g_inv(b, q) * cov_ricci(b, p, q);
    }
    lowered(p) = s - 0.5 * grad_scalar(p);
  }
  Vector out;
  for (int a = 0; a < N; ++a) {
    Quantity s;
    for (int p = 0; p < N; ++p) s += c.g_inv(a, p) * lowered(p);
    out(a) = s;
  }
  return out;
}

Tensor<3> metric_covariant_derivative(const Connection& c) {
  Tensor<3> out;
  for (int k = 0; k < N; ++k) {
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        Quantity s = c.dg(k, a, b);
        for (int d = 0; d < N; ++d) {
          s -= c.gamma(d, k, a) * c.g(d, b);
          s -= c.gamma(d, k, b) * c.g(a, d);
        }
        out(k, a, b) = s;
      }
    }
  }
  return out;
}

RiemannSymmetries riemann_symmetries(const Tensor<4>& R) {
  RiemannSymmetries s;
  Tensor<4>::for_each_index([&](const std::array<int, 4>& i) {
    const int a = i[0], b = i[1], c = i[2], d = i[3];
    s.antisym_first(a, b, c, d) = R(a, b, c, d) + R(b, a, c, d);
    s.antisym_last(a, b, c, d) = R(a, b, c, d) + R(a, b, d, c);
    s.pair(a, b, c, d) = R(a, b, c, d) - R(c, d, a, b);
    s.first_bianchi(a, b, c, d) = R(a, b, c, d) + R(b, c, a, d) + R(c, a, b, d);
  });
  return s;
}

CurvatureBundle compute_curvature(const MetricValue& mv) {
  CurvatureBundle cb;
  cb.conn = christoffel(mv);
  cb.riemann = riemann(cb.conn);
  cb.ricci = ricci_and_scalar(cb.conn, cb.riemann);
  cb.cov_ricci = cov_deriv_ricci(cb.conn, cb.ricci);
  cb.cov_riemann = cov_deriv_riemann(cb.conn, cb.riemann);
  cb.div = div_riemann(cb.conn, cb.cov_riemann.value, cb.cov_ricci);
  cb.contracted_bianchi = contracted_bianchi(cb.conn, cb.cov_ricci, cb.ricci.grad_scalar);
  return cb;
}

Tensor<4> raise_first(const Tensor<2>& g_inv, const Tensor<4>& low) {
  Tensor<4> out;
  Tensor<4>::for_each_index([&](const std::array<int, 4>& i) {
    Quantity s;
    for (int a = 0; a < N; ++a) s += g_inv(i[0], a) * low(a, i[1], i[2], i[3]);
    out(i[0], i[1], i[2], i[3]) = s;
  });
  return out;
}

Quantity kretschmann(const Connection& c, const Tensor<4>& low) {
  // Raise all four indices one at a time.
  Tensor<4> up = low;
  for (int slot = 0; slot < 4; ++slot) {
    Tensor<4> next;
    Tensor<4>::for_each_index([&](const std::array<int, 4>& i) {
      Quantity s;
      for (int k = 0; k < N; ++k) {
        std::array<int, 4> j = i;
        j[slot] = k;
        s += c.g_inv(i[slot], k) * up(j[0], j[1], j[2], j[3]);
      }
      next(i[0], i[1], i[2], i[3]) = s;
    });
    up = next;
  }
  Quantity k;
  for (std::size_t n = 0; n < low.size; ++n) k += low.at_flat(n) * up.at_flat(n);
  return k;
}

}  // namespace wcurv
