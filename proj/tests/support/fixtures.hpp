#pragma once

#include <wcurv/analyze.hpp>
#include <wcurv/catalog.hpp>
#include <wcurv/curvature.hpp>
#include <wcurv/metric.hpp>
#include <wcurv/metric_file.hpp>

#include "oracles.hpp"

#include <string>
#include <vector>

namespace fixture {

// Builds a spec from full rows of expression strings.
inline wcurv::MetricSpec spec(const wcurv::CoordinateChart& chart,
                              const std::array<std::array<const char*, 4>, 4>& rows,
                              wcurv::Signature sig = wcurv::Signature::MostlyPlus) {
  wcurv::ComponentArray c;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) c[a][b] = wcurv::expr::parse(rows[a][b]);
  }
  return wcurv::MetricSpec(chart, c, sig);
}

inline wcurv::CoordinateChart spherical(std::map<std::string, double> params) {
  return {{"t", "r", "theta", "phi"}, std::move(params)};
}

inline wcurv::MetricSpec schwarzschild(double M = 1) {
  return spec(spherical({{"M", M}}), {{{"-(1-2*M/r)", "0", "0", "0"},
                                       {"0", "1/(1-2*M/r)", "0", "0"},
                                       {"0", "0", "r^2", "0"},
                                       {"0", "0", "0", "r^2*sin(theta)^2"}}});
}

inline wcurv::MetricSpec de_sitter(double H = 0.1) {
  return spec(spherical({{"H", H}}), {{{"-(1-H^2*r^2)", "0", "0", "0"},
                                       {"0", "1/(1-H^2*r^2)", "0", "0"},
                                       {"0", "0", "r^2", "0"},
                                       {"0", "0", "0", "r^2*sin(theta)^2"}}});
}

inline wcurv::MetricSpec frw(double n = 2.0 / 3.0) {
  return spec({{"t", "x", "y", "z"}, {{"n", n}}}, {{{"-1", "0", "0", "0"},
                                                    {"0", "t^(2*n)", "0", "0"},
                                                    {"0", "0", "t^(2*n)", "0"},
                                                    {"0", "0", "0", "t^(2*n)"}}});
}

inline wcurv::MetricSpec minkowski() {
  return spec({{"t", "x", "y", "z"}, {}}, {{{"-1", "0", "0", "0"},
                                           {"0", "1", "0", "0"},
                                           {"0", "0", "1", "0"},
                                           {"0", "0", "0", "1"}}});
}

// A metric with every component populated and no symmetry, used to exercise
// identities away from diagonal special cases.
inline wcurv::MetricSpec generic() {
  return spec({{"t", "x", "y", "z"}, {{"a", 0.3}}},
              {{{"-(1 + a*x^2)", "a*sin(y)", "0.1*t*z", "0.05*x*y"},
                {"a*sin(y)", "1 + t^2/4", "0.2*z", "0.1*cos(t)"},
                {"0.1*t*z", "0.2*z", "exp(a*x)", "0.05*t"},
                {"0.05*x*y", "0.1*cos(t)", "0.05*t", "2 + sin(x*y)"}}});
}

inline oracle::MetricFn generic_fn() {
  return [](const oracle::Vec& p) {
    const double t = p[0], x = p[1], y = p[2], z = p[3], a = 0.3;
    oracle::Mat g{};
    g[0][0] = -(1 + a * x * x);
    g[0][1] = g[1][0] = a * std::sin(y);
    g[0][2] = g[2][0] = 0.1 * t * z;
    g[0][3] = g[3][0] = 0.05 * x * y;
    g[1][1] = 1 + t * t / 4;
    g[1][2] = g[2][1] = 0.2 * z;
    g[1][3] = g[3][1] = 0.1 * std::cos(t);
    g[2][2] = std::exp(a * x);
    g[2][3] = g[3][2] = 0.05 * t;
    g[3][3] = 2 + std::sin(x * y);
    return g;
  };
}

inline oracle::Mat as_mat(const wcurv::Tensor<2>& t) {
  oracle::Mat m{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a][b] = t(a, b).value;
  return m;
}

// Compiles a catalog metric and returns the compiled model.
inline wcurv::CompiledModel compiled(const std::string& name) {
  return wcurv::compile_model(wcurv::catalog_metric(name));
}

}  // namespace fixture
