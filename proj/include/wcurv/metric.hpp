#pragma once

#include <wcurv/expr.hpp>
#include <wcurv/tensor.hpp>

#include <array>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wcurv {

enum class Signature {
  MostlyPlus,   // -+++
  MostlyMinus,  // +---
};

std::string to_string(Signature s);
// Accepts "-+++" or "+---"; throws InputError otherwise.
Signature parse_signature(std::string_view text);

struct CoordinateChart {
  std::array<std::string, kDim> names;
  std::map<std::string, double> parameters;
};

using Point = std::array<double, kDim>;

std::string format_point(const Point& p, const CoordinateChart& chart);

using ComponentArray = std::array<std::array<expr::Expression, kDim>, kDim>;

// Closed-form metric components g_ab over a chart. Partial derivatives of each
// component up to third order are derived symbolically on first use and cached
// for the lifetime of the spec; the cache is safe for concurrent readers.
class MetricSpec {
 public:
  MetricSpec(CoordinateChart chart, ComponentArray components,
             Signature signature = Signature::MostlyPlus);

  const CoordinateChart& chart() const { return chart_; }
  const ComponentArray& components() const { return components_; }
  const expr::Expression& component(int a, int b) const { return components_[a][b]; }
  Signature signature() const { return signature_; }

  // Symbolic partial derivative of g_ab with respect to the listed coordinate
  // indices (order <= 3, any order of indices). Uses the (min, max) component.
  const expr::Expression& derivative(int a, int b, std::span<const int> wrt) const;

  expr::Bindings bindings(const Point& p) const;

 private:
  struct Cache;

  CoordinateChart chart_;
  ComponentArray components_;
  Signature signature_;
  std::shared_ptr<Cache> cache_;
};

struct ValidationIssue {
  enum class Kind { Chart, Symmetry, UnknownSymbol, Signature, Degenerate, Domain };
  Kind kind = Kind::Chart;
  std::string message;
  int a = -1;
  int b = -1;
  std::string symbol;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

// Symmetry, chart and symbol checks; with sample points, also determinant and
// signature checks at each point.
ValidationReport validate(const MetricSpec& spec, std::span<const Point> sample_points = {});

struct MetricValue {
  RealTensor<2> g;
  RealTensor<2> g_inv;
  RealTensor<3> dg;   // (c, a, b) = d_c g_ab
  RealTensor<4> d2g;  // (d, c, a, b) = d_d d_c g_ab
  RealTensor<5> d3g;  // (e, d, c, a, b)
  double det = 0.0;
};

// Throws DegenerateMetric when |det g| < 1e-14 * (max |g_ab|)^4 and propagates
// DomainError from component evaluation.
MetricValue evaluate_metric(const MetricSpec& spec, const Point& p);

struct Inverse4 {
  RealTensor<2> inverse;
  double det;
};
// Adjugate over determinant; no degeneracy test.
Inverse4 invert4(const RealTensor<2>& m);

// Number of negative eigenvalues of a symmetric 4x4 matrix.
int negative_eigenvalues(const RealTensor<2>& m);

}  // namespace wcurv
