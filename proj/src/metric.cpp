#include <wcurv/error.hpp>
#include <wcurv/metric.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace wcurv {

std::string to_string(Signature s) { return s == Signature::MostlyPlus ? "-+++" : "+---"; }

Signature parse_signature(std::string_view text) {
  if (text == "-+++") return Signature::MostlyPlus;
  if (text == "+---") return Signature::MostlyMinus;
  throw InputError("unknown signature '" + std::string(text) + "' (expected -+++ or +---)");
}

std::string format_point(const Point& p, const CoordinateChart& chart) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (int i = 0; i < kDim; ++i) {
    if (i) os << ", ";
    os << chart.names[i] << "=" << p[i];
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Derivative cache

namespace {

// Sorted multi-indices of length 0..3 over 4 coordinates: 1 + 4 + 10 + 20.
constexpr int kSlots = 35;

int slot_of(std::span<const int> sorted) {
  int base = 0;
  const int order = static_cast<int>(sorted.size());
  static constexpr int offsets[] = {0, 1, 5, 15};
  base = offsets[order];
  int rank = 0;
  // Enumerate non-decreasing sequences in lexicographic order.
  std::array<int, 3> idx{};
  int count = 0;
  auto matches = [&] {
    for (int k = 0; k < order; ++k) {
      if (idx[k] != sorted[k]) return false;
    }
    return true;
  };
  if (order == 0) return 0;
  for (idx[0] = 0; idx[0] < kDim; ++idx[0]) {
    if (order == 1) {
      if (matches()) rank = count;
      ++count;
      continue;
    }
    for (idx[1] = idx[0]; idx[1] < kDim; ++idx[1]) {
      if (order == 2) {
        if (matches()) rank = count;
        ++count;
        continue;
      }
      for (idx[2] = idx[1]; idx[2] < kDim; ++idx[2]) {
        if (matches()) rank = count;
        ++count;
      }
    }
  }
  return base + rank;
}

int component_slot(int a, int b) {
  if (a > b) std::swap(a, b);
  // Upper triangle, row-major: 10 entries.
  return a * kDim - a * (a - 1) / 2 + (b - a);
}

}  // namespace

struct MetricSpec::Cache {
  struct Entry {
    std::once_flag once;
    expr::Expression expression;
  };
  std::array<std::array<Entry, kSlots>, 10> entries;
};

MetricSpec::MetricSpec(CoordinateChart chart, ComponentArray components, Signature signature)
    : chart_(std::move(chart)),
      components_(std::move(components)),
      signature_(signature),
      cache_(std::make_shared<Cache>()) {}

const expr::Expression& MetricSpec::derivative(int a, int b, std::span<const int> wrt) const {
  if (wrt.size() > 3) throw std::invalid_argument("metric derivatives are cached up to order 3");
  std::array<int, 3> sorted{};
  std::copy(wrt.begin(), wrt.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(wrt.size()));
  std::span<const int> key(sorted.data(), wrt.size());

  auto& entry = cache_->entries[component_slot(a, b)][slot_of(key)];
  std::call_once(entry.once, [&] {
    if (key.empty()) {
      entry.expression = expr::simplify(components_[std::min(a, b)][std::max(a, b)]);
      return;
    }
    const expr::Expression& lower = derivative(a, b, key.first(key.size() - 1));
    const std::string& coord = chart_.names[key.back()];
    entry.expression = expr::simplify(expr::differentiate(lower, coord));
  });
  return entry.expression;
}

expr::Bindings MetricSpec::bindings(const Point& p) const {
  expr::Bindings b;
  for (const auto& [name, value] : chart_.parameters) b[name] = value;
  for (int i = 0; i < kDim; ++i) b[chart_.names[i]] = p[i];
  return b;
}

// ---------------------------------------------------------------------------
// Linear algebra

Inverse4 invert4(const RealTensor<2>& m) {
  auto a = [&](int i, int j) { return m(i, j); };
  // Cofactor expansion via 2x2 minors of the top and bottom row pairs.
  const double s0 = a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1);
  const double s1 = a(0, 0) * a(1, 2) - a(1, 0) * a(0, 2);
  const double s2 = a(0, 0) * a(1, 3) - a(1, 0) * a(0, 3);
  const double s3 = a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2);
  const double s4 = a(0, 1) * a(1, 3) - a(1, 1) * a(0, 3);
  const double s5 = a(0, 2) * a(1, 3) - a(1, 2) * a(0, 3);

  const double c5 = a(2, 2) * a(3, 3) - a(3, 2) * a(2, 3);
  const double c4 = a(2, 1) * a(3, 3) - a(3, 1) * a(2, 3);
  const double c3 = a(2, 1) * a(3, 2) - a(3, 1) * a(2, 2);
  const double c2 = a(2, 0) * a(3, 3) - a(3, 0) * a(2, 3);
  const double c1 = a(2, 0) * a(3, 2) - a(3, 0) * a(2, 2);
  const double c0 = a(2, 0) * a(3, 1) - a(3, 0) * a(2, 1);

  const double det = s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;

  RealTensor<2> adj;
  adj(0, 0) = a(1, 1) * c5 - a(1, 2) * c4 + a(1, 3) * c3;
  adj(0, 1) = -a(0, 1) * c5 + a(0, 2) * c4 - a(0, 3) * c3;
  adj(0, 2) = a(3, 1) * s5 - a(3, 2) * s4 + a(3, 3) * s3;
  adj(0, 3) = -a(2, 1) * s5 + a(2, 2) * s4 - a(2, 3) * s3;

  adj(1, 0) = -a(1, 0) * c5 + a(1, 2) * c2 - a(1, 3) * c1;
  adj(1, 1) = a(0, 0) * c5 - a(0, 2) * c2 + a(0, 3) * c1;
  adj(1, 2) = -a(3, 0) * s5 + a(3, 2) * s2 - a(3, 3) * s1;
  adj(1, 3) = a(2, 0) * s5 - a(2, 2) * s2 + a(2, 3) * s1;

  adj(2, 0) = a(1, 0) * c4 - a(1, 1) * c2 + a(1, 3) * c0;
  adj(2, 1) = -a(0, 0) * c4 + a(0, 1) * c2 - a(0, 3) * c0;
  adj(2, 2) = a(3, 0) * s4 - a(3, 1) * s2 + a(3, 3) * s0;
  adj(2, 3) = -a(2, 0) * s4 + a(2, 1) * s2 - a(2, 3) * s0;

  adj(3, 0) = -a(1, 0) * c3 + a(1, 1) * c1 - a(1, 2) * c0;
  adj(3, 1) = a(0, 0) * c3 - a(0, 1) * c1 + a(0, 2) * c0;
  adj(3, 2) = -a(3, 0) * s3 + a(3, 1) * s1 - a(3, 2) * s0;
  adj(3, 3) = a(2, 0) * s3 - a(2, 1) * s1 + a(2, 2) * s0;

  Inverse4 out{RealTensor<2>{}, det};
  if (det != 0.0) {
    for (int i = 0; i < kDim; ++i) {
      for (int j = 0; j < kDim; ++j) out.inverse(i, j) = adj(i, j) / det;
    }
  }
  return out;
}

int negative_eigenvalues(const RealTensor<2>& m) {
  Eigen::Matrix4d mat;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) mat(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(mat, Eigen::EigenvaluesOnly);
  int n = 0;
  for (int i = 0; i < kDim; ++i) {
    if (solver.eigenvalues()(i) < 0.0) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Evaluation

MetricValue evaluate_metric(const MetricSpec& spec, const Point& p) {
  const expr::Bindings b = spec.bindings(p);
  MetricValue mv;
  for (int a = 0; a < kDim; ++a) {
    for (int c = a; c < kDim; ++c) {
      const double v = expr::evaluate(spec.derivative(a, c, {}), b);
      mv.g(a, c) = v;
      mv.g(c, a) = v;
      for (int i = 0; i < kDim; ++i) {
        const int d1[] = {i};
        const double v1 = expr::evaluate(spec.derivative(a, c, d1), b);
        mv.dg(i, a, c) = v1;
        mv.dg(i, c, a) = v1;
        for (int j = i; j < kDim; ++j) {
          const int d2[] = {i, j};
          const double v2 = expr::evaluate(spec.derivative(a, c, d2), b);
          for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
            mv.d2g(x, y, a, c) = v2;
            mv.d2g(x, y, c, a) = v2;
          }
          for (int k = j; k < kDim; ++k) {
            const int d3[] = {i, j, k};
            const double v3 = expr::evaluate(spec.derivative(a, c, d3), b);
            const std::array<std::array<int, 3>, 6> perms{{
                {i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
            for (const auto& q : perms) {
              mv.d3g(q[0], q[1], q[2], a, c) = v3;
              mv.d3g(q[0], q[1], q[2], c, a) = v3;
            }
          }
        }
      }
    }
  }

  const double scale = max_abs(mv.g);
  Inverse4 inv = invert4(mv.g);
  mv.det = inv.det;
  if (!(std::abs(inv.det) >= 1e-14 * std::pow(scale, 4)) || scale == 0.0) {
    throw DegenerateMetric(format_point(p, spec.chart()), inv.det);
  }
  mv.g_inv = inv.inverse;
  return mv;
}

// ---------------------------------------------------------------------------
// Validation

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "\n";
    out += issue.message;
  }
  return out;
}

ValidationReport validate(const MetricSpec& spec, std::span<const Point> sample_points) {
  ValidationReport report;
  const auto& chart = spec.chart();
  auto add = [&report](ValidationIssue::Kind kind, std::string message) {
    ValidationIssue issue;
    issue.kind = kind;
    issue.message = std::move(message);
    report.issues.push_back(std::move(issue));
  };

  std::set<std::string> names;
  for (const auto& n : chart.names) {
    if (!expr::is_identifier(n)) {
      add(ValidationIssue::Kind::Chart, "invalid coordinate name '" + n + "'");
    }
    if (!names.insert(n).second) {
      add(ValidationIssue::Kind::Chart, "duplicate coordinate name '" + n + "'");
    }
  }
  for (const auto& [name, value] : chart.parameters) {
    if (names.count(name)) {
      add(ValidationIssue::Kind::Chart, "parameter '" + name + "' shadows a coordinate");
    }
    if (!std::isfinite(value)) {
      add(ValidationIssue::Kind::Chart, "parameter '" + name + "' is not finite");
    }
  }

  for (int a = 0; a < kDim; ++a) {
    for (int b = a + 1; b < kDim; ++b) {
      if (!expr::structurally_equal(spec.component(a, b), spec.component(b, a))) {
        ValidationIssue issue;
        issue.kind = ValidationIssue::Kind::Symmetry;
        issue.message = "metric not symmetric: g_" + std::to_string(a) + std::to_string(b) +
                                  " = '" + expr::to_string(spec.component(a, b)) + "' but g_" +
                                  std::to_string(b) + std::to_string(a) + " = '" +
                                  expr::to_string(spec.component(b, a)) + "'";
        issue.a = a;
        issue.b = b;
        report.issues.push_back(issue);
      }
    }
  }

  std::set<std::string> reported;
  for (int a = 0; a < kDim; ++a) {
    for (int b = 0; b < kDim; ++b) {
      for (const auto& s : expr::free_symbols(spec.component(a, b))) {
        if (names.count(s) || chart.parameters.count(s) || reported.count(s)) continue;
        reported.insert(s);
        ValidationIssue issue;
        issue.kind = ValidationIssue::Kind::UnknownSymbol;
        issue.message = "unknown symbol '" + s + "' in g_" + std::to_string(a) +
                                  std::to_string(b);
        issue.a = a;
        issue.b = b;
        issue.symbol = s;
        report.issues.push_back(issue);
      }
    }
  }

  if (!report.ok()) return report;

  const int expected_negative = spec.signature() == Signature::MostlyPlus ? 1 : 3;
  for (const auto& p : sample_points) {
    try {
      MetricValue mv = evaluate_metric(spec, p);
      int neg = negative_eigenvalues(mv.g);
      if (neg != expected_negative) {
        add(ValidationIssue::Kind::Signature, "signature mismatch at " + format_point(p, chart) + ": " +
                                     std::to_string(neg) + " negative eigenvalues, expected " +
                                     std::to_string(expected_negative) + " for " +
                                     to_string(spec.signature()));
      }
    } catch (const DegenerateMetric& e) {
      add(ValidationIssue::Kind::Degenerate, e.what());
    } catch (const DomainError& e) {
      add(ValidationIssue::Kind::Domain, std::string(e.what()) + " at " + format_point(p, chart));
    }
  }
  return report;
}

}  // namespace wcurv
