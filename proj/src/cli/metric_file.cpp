#include <wcurv/error.hpp>
#include <wcurv/metric_file.hpp>

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace wcurv {

namespace {

constexpr int N = kDim;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::string scalar(const YAML::Node& n, const std::string& where) {
  if (!n.IsScalar()) fail(where, "expected a scalar expression");
  try {
    return normalize_expression(n.as<std::string>());
  } catch (const SyntaxError& e) {
    fail(where, e.what());
  }
}

StringVector vector4(const YAML::Node& n, const std::string& where) {
  if (!n.IsSequence() || n.size() != N) fail(where, "expected a list of 4 entries");
  StringVector out;
  for (int i = 0; i < N; ++i) out[i] = scalar(n[i], where + "[" + std::to_string(i) + "]");
  return out;
}

// -e, folding a leading sign instead of stacking one.
expr::Expression negated(const expr::Expression& e) {
  using expr::Expression;
  if (const auto* n = e.as<expr::Negate>()) return n->child;
  if (const auto* q = e.as<expr::Quotient>()) {
    if (const auto* n = q->numerator.as<expr::Negate>()) return Expression::quotient(n->child, q->denominator);
  }
  return expr::simplify(Expression::negate(e));
}

// Full 4x4 or lower triangle (row i has i+1 entries).
StringMatrix matrix4(const YAML::Node& n, const std::string& where, bool antisymmetric) {
  if (!n.IsSequence() || n.size() != N) fail(where, "expected 4 rows");
  bool full = true, lower = true;
  for (int i = 0; i < N; ++i) {
    if (!n[i].IsSequence()) fail(where, "row " + std::to_string(i) + " is not a list");
    full = full && n[i].size() == N;
    lower = lower && n[i].size() == static_cast<std::size_t>(i + 1);
  }
  if (!full && !lower) fail(where, "rows must all have 4 entries or form a lower triangle");
  StringMatrix out;
  for (int i = 0; i < N; ++i) {
    const int len = full ? N : i + 1;
    for (int j = 0; j < len; ++j) {
      out[i][j] = scalar(n[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  if (lower) {
    for (int i = 0; i < N; ++i) {
      for (int j = i + 1; j < N; ++j) {
        out[i][j] = antisymmetric ? expr::to_string(negated(expr::parse(out[j][i]))) : out[j][i];
      }
    }
    if (antisymmetric) {
      for (int i = 0; i < N; ++i) {
        if (out[i][i] != "0") fail(where, "diagonal entries of an antisymmetric tensor must be 0");
      }
    }
  }
  return out;
}

double constant_value(const std::string& text, const std::map<std::string, double>& params,
                      const std::string& where, bool with_pi) {
  expr::Bindings b(params.begin(), params.end());
  if (with_pi) b["pi"] = std::numbers::pi;
  try {
    return expr::evaluate(expr::parse(text), b);
  } catch (const UnboundSymbol& e) {
    fail(where, e.what());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
}

std::size_t positive_count(const YAML::Node& n, const std::string& where) {
  long long v = 0;
  try {
    v = n.as<long long>();
  } catch (const YAML::Exception&) {
    fail(where, "count must be an integer");
  }
  if (v < 1) fail(where, "count must be at least 1");
  return static_cast<std::size_t>(v);
}

const std::set<std::string> kTopLevel = {
    "name",  "coordinates", "parameters", "signature", "metric",    "fluid_velocity",
    "mu",    "p",           "xi",         "faraday",   "constants", "evaluation"};

MetricFile from_node(const YAML::Node& root) {
  if (!root.IsMap()) throw InputError("metric file: top level must be a mapping");

  // A report produced by `wcurv analyze` carries its normalized input.
  if (root["schema_version"] && root["input"]) return from_node(root["input"]);

  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (!kTopLevel.count(key)) fail("metric file", "unknown key '" + key + "'");
  }

  MetricFile f;
  f.name = root["name"] ? root["name"].as<std::string>() : "unnamed";

  if (!root["coordinates"]) fail("coordinates", "missing");
  const auto coords = root["coordinates"];
  if (!coords.IsSequence() || coords.size() != N) fail("coordinates", "expected 4 names");
  for (int i = 0; i < N; ++i) f.coordinates[i] = coords[i].as<std::string>();

  if (const auto params = root["parameters"]) {
    if (!params.IsMap()) fail("parameters", "expected a mapping");
    for (const auto& kv : params) {
      const auto key = kv.first.as<std::string>();
      if (!expr::is_identifier(key)) fail("parameters", "invalid name '" + key + "'");
      const std::string text = scalar(kv.second, "parameters." + key);
      f.parameters[key] = constant_value(text, f.parameters, "parameters." + key, true);
    }
  }

  if (const auto sig = root["signature"]) {
    f.signature = parse_signature(sig.as<std::string>());
  }

  if (!root["metric"]) fail("metric", "missing");
  f.metric = matrix4(root["metric"], "metric", false);

  if (const auto u = root["fluid_velocity"]) f.fluid_velocity = vector4(u, "fluid_velocity");
  if (const auto mu = root["mu"]) f.mu = scalar(mu, "mu");
  if (const auto p = root["p"]) f.p = scalar(p, "p");
  if (const auto xi = root["xi"]) f.xi = vector4(xi, "xi");
  if (const auto F = root["faraday"]) f.faraday = matrix4(F, "faraday", true);

  if (const auto c = root["constants"]) {
    if (!c.IsMap()) fail("constants", "expected a mapping");
    for (const auto& kv : c) {
      const auto key = kv.first.as<std::string>();
      if (key == "lambda") {
        f.lambda = scalar(kv.second, "constants.lambda");
      } else if (key == "kappa") {
        f.kappa = scalar(kv.second, "constants.kappa");
      } else {
        fail("constants", "unknown key '" + key + "'");
      }
    }
  }

  if (const auto ev = root["evaluation"]) {
    if (!ev.IsMap()) fail("evaluation", "expected a mapping");
    for (const auto& kv : ev) {
      const auto key = kv.first.as<std::string>();
      if (key != "ranges" && key != "fixed" && key != "points" && key != "exclude") {
        fail("evaluation", "unknown key '" + key + "'");
      }
    }
    if (const auto ranges = ev["ranges"]) {
      if (!ranges.IsMap()) fail("evaluation.ranges", "expected a mapping");
      for (const auto& kv : ranges) {
        const auto c = kv.first.as<std::string>();
        const std::string where = "evaluation.ranges." + c;
        const auto& r = kv.second;
        if (!r.IsMap() || !r["min"] || !r["max"]) fail(where, "expected {min, max, count}");
        GridRange g;
        g.min = scalar(r["min"], where + ".min");
        g.max = scalar(r["max"], where + ".max");
        g.count = r["count"] ? positive_count(r["count"], where + ".count") : 1;
        f.evaluation.ranges[c] = g;
      }
    }
    if (const auto fixed = ev["fixed"]) {
      if (!fixed.IsMap()) fail("evaluation.fixed", "expected a mapping");
      for (const auto& kv : fixed) {
        const auto c = kv.first.as<std::string>();
        f.evaluation.fixed[c] = scalar(kv.second, "evaluation.fixed." + c);
      }
    }
    if (const auto pts = ev["points"]) {
      if (!pts.IsSequence()) fail("evaluation.points", "expected a list of points");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        f.evaluation.points.push_back(vector4(pts[i], "evaluation.points[" + std::to_string(i) + "]"));
      }
    }
    if (const auto ex = root["evaluation"]["exclude"]) {
      if (!ex.IsSequence()) fail("evaluation.exclude", "expected a list of expressions");
      for (std::size_t i = 0; i < ex.size(); ++i) {
        f.evaluation.exclude.push_back(scalar(ex[i], "evaluation.exclude[" + std::to_string(i) + "]"));
      }
    }
  }
  return f;
}

std::set<std::string> allowed_field_symbols(const MetricFile& f) {
  std::set<std::string> s(f.coordinates.begin(), f.coordinates.end());
  for (const auto& [k, v] : f.parameters) s.insert(k);
  return s;
}

void check_symbols(const std::string& text, const std::set<std::string>& allowed,
                   const std::string& where, std::vector<std::string>& out) {
  for (const auto& s : expr::free_symbols(expr::parse(text))) {
    if (!allowed.count(s)) out.push_back(where + ": unknown symbol '" + s + "'");
  }
}

std::array<expr::Expression, N> parse_vector(const StringVector& v) {
  std::array<expr::Expression, N> out;
  for (int i = 0; i < N; ++i) out[i] = expr::parse(v[i]);
  return out;
}

ComponentArray parse_matrix(const StringMatrix& m, bool negate) {
  ComponentArray out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const auto e = expr::parse(m[i][j]);
      out[i][j] = negate ? expr::simplify(expr::Expression::negate(e)) : e;
    }
  }
  return out;
}

}  // namespace

std::string normalize_expression(std::string_view text) {
  return expr::to_string(expr::parse(text));
}

MetricFile parse_metric_file(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw InputError(std::string("metric file: ") + e.what());
  }
  try {
    return from_node(root);
  } catch (const YAML::Exception& e) {
    throw InputError(std::string("metric file: ") + e.what());
  }
}

MetricFile load_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_metric_file(ss.str());
}

void apply_parameter(MetricFile& file, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw InputError("--param expects name=value");
  const std::string name(assignment.substr(0, eq));
  if (!expr::is_identifier(name)) throw InputError("--param: invalid name '" + name + "'");
  std::string value;
  try {
    value = normalize_expression(assignment.substr(eq + 1));
  } catch (const SyntaxError& e) {
    throw InputError("--param " + name + ": " + e.what());
  }
  file.parameters[name] = constant_value(value, file.parameters, "--param " + name, true);
}

void apply_grid(MetricFile& file, std::string_view range) {
  const auto eq = range.find('=');
  if (eq == std::string_view::npos) throw InputError("--grid expects coord=min:max:count");
  const std::string coord(range.substr(0, eq));
  const std::string rest(range.substr(eq + 1));
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : rest.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InputError("--grid " + coord + ": expected min:max:count");
  GridRange g;
  try {
    g.min = normalize_expression(rest.substr(0, c1));
    g.max = normalize_expression(rest.substr(c1 + 1, c2 - c1 - 1));
  } catch (const SyntaxError& e) {
    throw InputError("--grid " + coord + ": " + e.what());
  }
  const std::string count = rest.substr(c2 + 1);
  std::size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(count, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != count.size() || n < 1) throw InputError("--grid " + coord + ": bad count '" + count + "'");
  g.count = static_cast<std::size_t>(n);
  file.evaluation.ranges[coord] = g;
  file.evaluation.fixed.erase(coord);
}

std::vector<std::string> check_metric_file(const MetricFile& f) {
  std::vector<std::string> out;
  const std::set<std::string> coords(f.coordinates.begin(), f.coordinates.end());
  const auto allowed = allowed_field_symbols(f);
  auto with_pi = allowed;
  with_pi.insert("pi");
  std::set<std::string> params;
  for (const auto& [k, v] : f.parameters) params.insert(k);

  if (f.fluid_velocity) {
    for (int i = 0; i < N; ++i) {
      check_symbols((*f.fluid_velocity)[i], allowed, "fluid_velocity[" + std::to_string(i) + "]", out);
    }
  }
  if (f.mu.has_value() != f.p.has_value()) out.push_back("mu and p must be given together");
  if (f.mu && !f.fluid_velocity) out.push_back("mu and p require fluid_velocity");
  if (f.mu) check_symbols(*f.mu, allowed, "mu", out);
  if (f.p) check_symbols(*f.p, allowed, "p", out);
  if (f.xi) {
    for (int i = 0; i < N; ++i) check_symbols((*f.xi)[i], allowed, "xi[" + std::to_string(i) + "]", out);
  }
  if (f.faraday) {
    const auto& F = *f.faraday;
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        check_symbols(F[i][j], allowed, "faraday[" + std::to_string(i) + "][" + std::to_string(j) + "]", out);
      }
      for (int j = i; j < N; ++j) {
        const auto a = expr::simplify(expr::parse(F[i][j]));
        const auto b = expr::simplify(negated(expr::parse(F[j][i])));
        if (!expr::structurally_equal(a, b)) {
          out.push_back("faraday not antisymmetric at [" + std::to_string(i) + "][" +
                        std::to_string(j) + "]");
        }
      }
    }
  }
  check_symbols(f.lambda, params, "constants.lambda", out);
  check_symbols(f.kappa, params, "constants.kappa", out);

  for (const auto& [c, r] : f.evaluation.ranges) {
    if (!coords.count(c)) out.push_back("evaluation.ranges: unknown coordinate '" + c + "'");
    std::set<std::string> syms = params;
    syms.insert("pi");
    check_symbols(r.min, syms, "evaluation.ranges." + c + ".min", out);
    check_symbols(r.max, syms, "evaluation.ranges." + c + ".max", out);
  }
  for (const auto& [c, v] : f.evaluation.fixed) {
    if (!coords.count(c)) out.push_back("evaluation.fixed: unknown coordinate '" + c + "'");
    std::set<std::string> syms = params;
    syms.insert("pi");
    check_symbols(v, syms, "evaluation.fixed." + c, out);
  }
  for (const auto& ex : f.evaluation.exclude) check_symbols(ex, with_pi, "evaluation.exclude", out);
  return out;
}

CompiledModel compile_model(const MetricFile& f) {
  CoordinateChart chart{f.coordinates, f.parameters};
  auto diagnostics = check_metric_file(f);

  CompiledModel m;
  m.original = std::make_shared<MetricSpec>(chart, parse_matrix(f.metric, false), f.signature);
  const ValidationReport vr = validate(*m.original);
  for (const auto& issue : vr.issues) diagnostics.push_back(issue.message);
  if (!diagnostics.empty()) {
    std::string msg = "invalid metric file '" + f.name + "':";
    for (const auto& d : diagnostics) msg += "\n  " + d;
    throw InputError(msg);
  }

  const bool flip = f.signature == Signature::MostlyMinus;
  m.metric = flip ? std::make_shared<MetricSpec>(chart, parse_matrix(f.metric, true),
                                                 Signature::MostlyPlus)
                  : m.original;

  AnalysisInputs& in = m.inputs;
  in.metric = m.metric.get();
  if (f.fluid_velocity) in.fluid = FluidSpec{make_field_vector(parse_vector(*f.fluid_velocity), chart)};
  if (f.mu && f.p) {
    in.matter = MatterFieldSpec{FieldExpression(expr::parse(*f.mu), chart),
                                FieldExpression(expr::parse(*f.p), chart)};
  }
  if (f.xi) in.xi = VectorFieldSpec{make_field_vector(parse_vector(*f.xi), chart)};
  if (f.faraday) in.faraday = FaradaySpec{make_field_matrix(parse_matrix(*f.faraday, false), chart)};
  in.constants.lambda = constant_value(f.lambda, f.parameters, "constants.lambda", false);
  in.constants.kappa = constant_value(f.kappa, f.parameters, "constants.kappa", false);
  if (in.constants.kappa == 0.0) throw InputError("constants.kappa must be nonzero");
  return m;
}

std::vector<Point> build_grid(const MetricFile& f) {
  const auto& ev = f.evaluation;
  std::array<std::vector<double>, N> axes;
  const bool product = !ev.ranges.empty() || ev.points.empty();

  if (product) {
    for (int i = 0; i < N; ++i) {
      const std::string& c = f.coordinates[i];
      if (auto r = ev.ranges.find(c); r != ev.ranges.end()) {
        const double lo = constant_value(r->second.min, f.parameters, "evaluation.ranges." + c, true);
        const double hi = constant_value(r->second.max, f.parameters, "evaluation.ranges." + c, true);
        const std::size_t n = r->second.count;
        for (std::size_t k = 0; k < n; ++k) {
          axes[i].push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1));
        }
      } else if (auto x = ev.fixed.find(c); x != ev.fixed.end()) {
        axes[i].push_back(constant_value(x->second, f.parameters, "evaluation.fixed." + c, true));
      } else {
        throw InputError("evaluation: coordinate '" + c + "' has neither a range nor a fixed value");
      }
    }
  }

  std::vector<Point> candidates;
  if (product) {
    for (double a : axes[0])
      for (double b : axes[1])
        for (double c : axes[2])
          for (double d : axes[3]) candidates.push_back({a, b, c, d});
  }
  for (std::size_t k = 0; k < ev.points.size(); ++k) {
    Point p{};
    for (int i = 0; i < N; ++i) {
      p[i] = constant_value(ev.points[k][i], f.parameters,
                            "evaluation.points[" + std::to_string(k) + "]", true);
    }
    candidates.push_back(p);
  }

  std::vector<expr::Expression> exclude;
  for (const auto& e : ev.exclude) exclude.push_back(expr::parse(e));

  std::vector<Point> out;
  for (const auto& p : candidates) {
    expr::Bindings b(f.parameters.begin(), f.parameters.end());
    b["pi"] = std::numbers::pi;
    for (int i = 0; i < N; ++i) b[f.coordinates[i]] = p[i];
    bool keep = true;
    for (std::size_t k = 0; k < exclude.size() && keep; ++k) {
      try {
        keep = std::abs(expr::evaluate(exclude[k], b)) >= 1e-12;
      } catch (const DomainError& e) {
        CoordinateChart chart{f.coordinates, f.parameters};
        throw DomainError(e.subexpression(),
                          "exclusion predicate '" + ev.exclude[k] + "' at " + format_point(p, chart));
      }
    }
    if (keep) out.push_back(p);
  }
  if (out.empty()) throw InputError("evaluation: no points remain after exclusions");
  return out;
}

}  // namespace wcurv
