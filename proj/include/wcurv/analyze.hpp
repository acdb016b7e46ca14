#pragma once

#include <wcurv/classify.hpp>
#include <wcurv/metric_file.hpp>

#include <vector>

namespace wcurv {

struct AnalyzeOptions {
  double tolerance = 1e-9;
  unsigned threads = 0;  // 0 selects the hardware concurrency
};

struct RunResult {
  MetricFile input;
  AnalyzeOptions options;
  std::vector<Point> points;
  std::vector<PointSummary> summaries;
  ClassificationReport classification;
  std::vector<TheoremVerdict> theorems;
  FrwAssessment frw;
  double wall_clock_seconds = 0.0;
};

// Compiles the file, builds the grid, checks the signature at every point and
// runs the full per-point pipeline followed by classification. Throws
// InputError for invalid input; DomainError, DegenerateMetric and
// NormalizationError propagate from the first failing point.
RunResult analyze(const MetricFile& file, const AnalyzeOptions& options = {});

}  // namespace wcurv
