#include <wcurv/analyze.hpp>
#include <wcurv/catalog.hpp>
#include <wcurv/error.hpp>
#include <wcurv/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run_analyze(const std::string& file, const std::string& catalog_name,
                const std::vector<std::string>& params, const std::vector<std::string>& grids,
                double tol, const std::string& format, const std::string& out_path,
                unsigned threads, bool summary) {
  using namespace wcurv;
  try {
    MetricFile mf;
    if (!catalog_name.empty()) {
      if (!file.empty()) throw InputError("give either a metric file or --catalog, not both");
      mf = catalog_metric(catalog_name);
    } else if (file.empty()) {
      throw InputError("a metric file or --catalog NAME is required");
    } else {
      mf = load_metric_file(file);
    }
    for (const auto& p : params) apply_parameter(mf, p);
    for (const auto& g : grids) apply_grid(mf, g);

    const RunResult run = analyze(mf, {tol, threads});
    const std::string text = format == "text" ? report_text(run) : report_json(run).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw InputError("cannot write '" + out_path + "'");
      out << text;
    }
    if (summary) std::cerr << report_text(run);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 1;
  } catch (const SyntaxError& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 1;
  } catch (const UnboundSymbol& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateMetric& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 2;
  } catch (const NormalizationError& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 2;
  }
}

int run_check_expr(const std::string& text, const std::string& wrt) {
  using namespace wcurv;
  try {
    const auto e = expr::parse(text);
    std::cout << "expression: " << expr::to_string(e) << "\n";
    if (!wrt.empty()) {
      if (!expr::is_identifier(wrt)) throw InputError("--wrt expects an identifier");
      std::cout << "d/d" << wrt << ": " << expr::to_string(expr::simplify(expr::differentiate(e, wrt)))
                << "\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "wcurv: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"W-curvature analysis of 4-dimensional Lorentzian metrics"};
  app.require_subcommand(1);

  std::string file, catalog_name, format = "json", out_path;
  std::vector<std::string> params, grids;
  double tol = 1e-9;
  unsigned threads = 0;
  bool summary = false;
  auto* analyze = app.add_subcommand("analyze", "analyze a metric file or a catalog metric");
  analyze->add_option("file", file, "metric file (YAML or JSON; a previous report also works)");
  analyze->add_option("--catalog", catalog_name, "built-in metric name");
  analyze->add_option("--param", params, "override a parameter, name=value")->take_all();
  analyze->add_option("--grid", grids, "override a coordinate range, coord=min:max:count")->take_all();
  analyze->add_option("--tol", tol, "relative tolerance")->capture_default_str();
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  analyze->add_option("--out", out_path, "write the report to PATH instead of standard output");
  analyze->add_option("--threads", threads, "worker threads, 0 for all cores")->capture_default_str();
  analyze->add_flag("--summary", summary, "also print a text summary to standard error");

  auto* cat = app.add_subcommand("catalog", "list built-in metrics");

  std::string expr_text, wrt;
  auto* check = app.add_subcommand("check-expr", "parse, print and differentiate an expression");
  check->add_option("expression", expr_text, "expression text")->required();
  check->add_option("--wrt", wrt, "differentiate with respect to this symbol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*analyze) {
    return run_analyze(file, catalog_name, params, grids, tol, format, out_path, threads, summary);
  }
  if (*cat) {
    for (const auto& e : wcurv::catalog()) {
      const auto mf = wcurv::parse_metric_file(e.document);
      std::cout << e.name;
      if (!mf.parameters.empty()) {
        std::cout << "(";
        bool first = true;
        for (const auto& [k, v] : mf.parameters) {
          std::cout << (first ? "" : ", ") << k << "=" << v;
          first = false;
        }
        std::cout << ")";
      }
      std::cout << ": " << e.description << "\n";
    }
    return 0;
  }
  return run_check_expr(expr_text, wrt);
}
