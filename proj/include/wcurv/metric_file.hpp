#pragma once

// Metric input files. The format is YAML (JSON documents are accepted as a
// subset). Every tensor component, field and constant is an expression string
// in the grammar of wcurv::expr; numbers may be written bare.
//
//   name: schwarzschild
//   coordinates: [t, r, theta, phi]
//   parameters: {M: 1}
//   signature: "-+++"
//   metric:                      # full 4x4 or lower triangle (rows of 1..4)
//     - ["-(1-2*M/r)"]
//     - [0, "1/(1-2*M/r)"]
//     - [0, 0, "r^2"]
//     - [0, 0, 0, "r^2*sin(theta)^2"]
//   fluid_velocity: ["1/sqrt(1-2*M/r)", 0, 0, 0]   # u^a, optional
//   mu: "..."                                       # optional, with p
//   p: "..."
//   xi: [1, 0, 0, 0]                                # optional
//   faraday: [[...4...], ...]                       # F_ab, optional
//   constants: {lambda: 0, kappa: 1}
//   evaluation:
//     ranges: {r: {min: 3, max: 10, count: 8}}
//     fixed: {t: 0, theta: "pi/2", phi: 0}
//     points: [[0, 4, "pi/2", 0]]
//     exclude: ["r-2*M", "sin(theta)"]
//
// Evaluation values may use the parameters and the constant `pi`.

#include <wcurv/classify.hpp>
#include <wcurv/metric.hpp>

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wcurv {

using StringVector = std::array<std::string, kDim>;
using StringMatrix = std::array<StringVector, kDim>;

struct GridRange {
  std::string min;
  std::string max;
  std::size_t count = 1;
};

struct EvaluationSpec {
  std::map<std::string, GridRange> ranges;   // keyed by coordinate name
  std::map<std::string, std::string> fixed;  // keyed by coordinate name
  std::vector<StringVector> points;
  std::vector<std::string> exclude;
};

// A metric file after normalization: expressions are re-printed from their
// parse trees and the metric is stored in full.
struct MetricFile {
  std::string name;
  StringVector coordinates;
  std::map<std::string, double> parameters;
  Signature signature = Signature::MostlyPlus;
  StringMatrix metric;
  std::optional<StringVector> fluid_velocity;
  std::optional<std::string> mu;
  std::optional<std::string> p;
  std::optional<StringVector> xi;
  std::optional<StringMatrix> faraday;
  std::string lambda = "0";
  std::string kappa = "1";
  EvaluationSpec evaluation;
};

// Throws InputError (malformed document, bad field) or SyntaxError.
MetricFile parse_metric_file(std::string_view text);
MetricFile load_metric_file(const std::string& path);

// Re-prints an expression from its parse tree. Throws SyntaxError.
std::string normalize_expression(std::string_view text);

// `name=value` where value is an expression in pi and earlier parameters.
void apply_parameter(MetricFile& file, std::string_view assignment);
// `coord=min:max:count`; replaces any fixed value for that coordinate.
void apply_grid(MetricFile& file, std::string_view range);

// Structural checks that need no evaluation: coordinate names, symbols
// used by each expression, antisymmetry of the Faraday tensor, mu/p pairing.
// Returns a list of messages; empty when the file is well formed.
std::vector<std::string> check_metric_file(const MetricFile& file);

// Executable form of a metric file. After conversion every tensor is in the
// -+++ signature; a +--- metric is negated component-wise.
struct CompiledModel {
  std::shared_ptr<MetricSpec> metric;   // convention used for computation
  std::shared_ptr<MetricSpec> original; // as written, for validation
  AnalysisInputs inputs;
};

// Throws InputError with every structural diagnostic, or SyntaxError.
CompiledModel compile_model(const MetricFile& file);

// Cartesian product of the ranges (coordinate order, last coordinate fastest)
// followed by the explicit points; points where an exclusion predicate
// evaluates to zero are dropped. Throws InputError when no point remains or a
// coordinate has neither a range nor a fixed value.
std::vector<Point> build_grid(const MetricFile& file);

}  // namespace wcurv
