#pragma once

// Independent reference values for the tests. Nothing here uses the symbolic
// engine: metrics are plain numeric functions, derivatives are central
// differences, and the closed forms are textbook results.

#include <array>
#include <cmath>
#include <functional>

namespace oracle {

using Vec = std::array<double, 4>;
using Mat = std::array<std::array<double, 4>, 4>;
using MetricFn = std::function<Mat(const Vec&)>;
using Gamma = std::array<Mat, 4>;  // [a][b][c] = G^a_bc
using Rank4 = std::array<std::array<Mat, 4>, 4>;

inline Mat inverse(const Mat& m) {
  // Gauss-Jordan with partial pivoting.
  double a[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m[i][j];
      a[i][j + 4] = i == j ? 1.0 : 0.0;
    }
  }
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    for (int j = 0; j < 8; ++j) std::swap(a[c][j], a[piv][j]);
    const double d = a[c][c];
    for (int j = 0; j < 8; ++j) a[c][j] /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (int j = 0; j < 8; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Mat out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j + 4];
  }
  return out;
}

inline Vec shifted(Vec x, int i, double h) {
  x[i] += h;
  return x;
}

// d_c g_ab by a fourth-order central difference.
inline std::array<Mat, 4> metric_gradient(const MetricFn& g, const Vec& x, double h) {
  std::array<Mat, 4> out{};
  for (int c = 0; c < 4; ++c) {
    const Mat p1 = g(shifted(x, c, h)), m1 = g(shifted(x, c, -h));
    const Mat p2 = g(shifted(x, c, 2 * h)), m2 = g(shifted(x, c, -2 * h));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        out[c][a][b] = (8 * (p1[a][b] - m1[a][b]) - (p2[a][b] - m2[a][b])) / (12 * h);
      }
    }
  }
  return out;
}

inline Gamma christoffel(const MetricFn& g, const Vec& x, double h = 1e-3) {
  const Mat gi = inverse(g(x));
  const auto dg = metric_gradient(g, x, h);
  Gamma out{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        double s = 0;
        for (int d = 0; d < 4; ++d) s += gi[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
        out[a][b][c] = 0.5 * s;
      }
    }
  }
  return out;
}

// R^h_bcd = d_d G^h_cb - d_c G^h_db + G^h_de G^e_cb - G^h_ce G^e_db, with the
// derivatives of G taken by nested central differences.
inline Rank4 riemann_mixed(const MetricFn& g, const Vec& x, double h = 1e-3, double hg = 1e-3) {
  const Gamma G = christoffel(g, x, hg);
  std::array<Gamma, 4> dG{};
  for (int e = 0; e < 4; ++e) {
    const Gamma p1 = christoffel(g, shifted(x, e, h), hg), m1 = christoffel(g, shifted(x, e, -h), hg);
    const Gamma p2 = christoffel(g, shifted(x, e, 2 * h), hg),
                m2 = christoffel(g, shifted(x, e, -2 * h), hg);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          dG[e][a][b][c] = (8 * (p1[a][b][c] - m1[a][b][c]) - (p2[a][b][c] - m2[a][b][c])) / (12 * h);
  }
  Rank4 R{};
  for (int hh = 0; hh < 4; ++hh)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = dG[d][hh][c][b] - dG[c][hh][d][b];
          for (int e = 0; e < 4; ++e) s += G[hh][d][e] * G[e][c][b] - G[hh][c][e] * G[e][d][b];
          R[hh][b][c][d] = s;
        }
  return R;
}

inline Rank4 lower_first(const Mat& g, const Rank4& mixed) {
  Rank4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0;
          for (int h = 0; h < 4; ++h) s += g[a][h] * mixed[h][b][c][d];
          out[a][b][c][d] = s;
        }
  return out;
}

inline Mat ricci(const Rank4& mixed) {
  Mat out{};
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c) {
      double s = 0;
      for (int h = 0; h < 4; ++h) s += mixed[h][b][c][h];
      out[b][c] = s;
    }
  return out;
}

inline double trace(const Mat& gi, const Mat& t) {
  double s = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s += gi[a][b] * t[a][b];
  return s;
}

// W_abcd assembled directly from its definition with n = 4.
inline Rank4 w_tensor(const Mat& g, const Rank4& low, const Mat& ric) {
  Rank4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          out[a][b][c][d] = low[a][b][c][d] + (g[a][c] * ric[b][d] - g[b][c] * ric[a][d]) / 3.0;
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form metrics and curvature

inline MetricFn minkowski() {
  return [](const Vec&) {
    Mat g{};
    g[0][0] = -1;
    g[1][1] = g[2][2] = g[3][3] = 1;
    return g;
  };
}

inline MetricFn schwarzschild(double M) {
  return [M](const Vec& x) {
    const double r = x[1], f = 1 - 2 * M / r, s = std::sin(x[2]);
    Mat g{};
    g[0][0] = -f;
    g[1][1] = 1 / f;
    g[2][2] = r * r;
    g[3][3] = r * r * s * s;
    return g;
  };
}

inline MetricFn de_sitter_static(double H) {
  return [H](const Vec& x) {
    const double r = x[1], f = 1 - H * H * r * r, s = std::sin(x[2]);
    Mat g{};
    g[0][0] = -f;
    g[1][1] = 1 / f;
    g[2][2] = r * r;
    g[3][3] = r * r * s * s;
    return g;
  };
}

inline MetricFn frw_powerlaw(double n) {
  return [n](const Vec& x) {
    const double a2 = std::pow(x[0], 2 * n);
    Mat g{};
    g[0][0] = -1;
    g[1][1] = g[2][2] = g[3][3] = a2;
    return g;
  };
}

// Kretschmann invariant of Schwarzschild.
inline double schwarzschild_kretschmann(double M, double r) { return 48 * M * M / std::pow(r, 6); }

// Reissner-Nordstrom Kretschmann invariant.
inline double rn_kretschmann(double M, double Q, double r) {
  return 8 * (6 * M * M * r * r - 12 * M * Q * Q * r + 7 * Q * Q * Q * Q) / std::pow(r, 8);
}

// Flat FRW with a = t^n: H = n/t, Friedmann equations with k = 1, Lambda = 0.
struct FrwFluid {
  double mu, p, theta;
};
inline FrwFluid frw_fluid(double n, double t) {
  return {3 * n * n / (t * t), (2 * n - 3 * n * n) / (t * t), 3 * n / t};
}

// Ricci tensor of flat FRW: R_tt = -3 a''/a, R_ii = a a'' + 2 a'^2.
inline Mat frw_ricci(double n, double t) {
  const double a = std::pow(t, n), ad = n * std::pow(t, n - 1), add = n * (n - 1) * std::pow(t, n - 2);
  Mat r{};
  r[0][0] = -3 * add / a;
  r[1][1] = r[2][2] = r[3][3] = a * add + 2 * ad * ad;
  return r;
}

}  // namespace oracle
