#include <wcurv/analyze.hpp>
#include <wcurv/error.hpp>

#include <chrono>
#include <thread>

namespace wcurv {

RunResult analyze(const MetricFile& file, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!(options.tolerance > 0.0)) throw InputError("tolerance must be positive");

  RunResult run;
  run.input = file;
  run.options = options;
  const CompiledModel model = compile_model(file);
  run.points = build_grid(file);

  const int expected = file.signature == Signature::MostlyPlus ? 1 : 3;
  for (const auto& p : run.points) {
    const MetricValue mv = evaluate_metric(*model.original, p);
    const int neg = negative_eigenvalues(mv.g);
    if (neg != expected) {
      throw InputError("signature mismatch at " + format_point(p, model.original->chart()) + ": " +
                       std::to_string(neg) + " negative eigenvalues, expected " +
                       std::to_string(expected) + " for " + to_string(file.signature));
    }
  }

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  run.summaries = analyze_points(model.inputs, run.points, threads);
  run.classification = classify(model.inputs, run.summaries, options.tolerance);
  run.theorems = verify_theorems(run.classification, run.summaries, model.inputs);
  run.frw = frw_assessment(run.classification, run.summaries, model.inputs);

  run.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace wcurv
