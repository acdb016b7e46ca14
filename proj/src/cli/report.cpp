#include <wcurv/report.hpp>

#include <cstdio>
#include <sstream>

namespace wcurv {

using nlohmann::ordered_json;

namespace {

ordered_json strings(const StringVector& v) { return ordered_json(std::vector<std::string>(v.begin(), v.end())); }

ordered_json strings(const StringMatrix& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) out.push_back(strings(row));
  return out;
}

ordered_json optional_index(const std::optional<std::size_t>& i) {
  return i ? ordered_json(*i) : ordered_json(nullptr);
}

ordered_json flag_record(const FlagRecord& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["worst_residual"] = r.worst_residual;
  j["worst_point"] = optional_index(r.worst_point);
  return j;
}

ordered_json audit_record(const AuditRecord& a) {
  ordered_json j;
  j["name"] = a.name;
  j["hypothesis"] = a.hypothesis;
  j["verdict"] = std::string(to_string(a.verdict));
  j["points_checked"] = a.points_checked;
  j["worst_point"] = optional_index(a.worst_point);
  j["worst_residual"] = a.worst_residual;
  j["worst_abs"] = a.worst_abs;
  return j;
}

ordered_json point_json(const PointSummary& s, const StringVector& coords) {
  ordered_json j;
  j["index"] = s.index;
  ordered_json at;
  for (int i = 0; i < kDim; ++i) at[coords[i]] = s.point[i];
  j["coordinates"] = at;

  ordered_json norms;
  for (const auto& [name, v] : s.norms) norms[name] = v;
  j["norms"] = norms;

  ordered_json flags = ordered_json::object();
  for (std::size_t f = 0; f < kFlagCount; ++f) {
    if (s.flags[f]) flags[std::string(flag_name(static_cast<Flag>(f)))] = *s.flags[f];
  }
  j["flag_residuals"] = flags;

  ordered_json ids = ordered_json::object();
  for (std::size_t k = 0; k < kIdentityCount; ++k) {
    if (s.identities[k]) ids[std::string(identity_name(static_cast<Identity>(k)))] = *s.identities[k];
  }
  j["identity_residuals"] = ids;

  if (s.fluid) {
    const auto& f = *s.fluid;
    j["fluid"] = {{"mu", f.mu},
                  {"p", f.p},
                  {"theta", f.theta},
                  {"mu_minus_3p", f.mu_minus_3p},
                  {"max_abs_acceleration", f.accel_norm},
                  {"energy_residual", f.energy_residual},
                  {"force_residual", f.force_residual},
                  {"force_printed_residual", f.force_printed_residual}};
  }
  if (s.omega) j["conformal_factor"] = *s.omega;

  ordered_json audit = ordered_json::object();
  for (const auto& a : s.audit) audit[a.name] = {{"max_abs", a.max_abs}, {"relative", a.relative}};
  j["audit"] = audit;
  return j;
}

ordered_json theorem_json(const TheoremVerdict& t) {
  ordered_json j;
  j["id"] = t.id;
  j["statement"] = t.statement;
  j["form"] = t.biconditional ? "biconditional" : "implication";
  j["status"] = std::string(to_string(t.status));
  j["hypothesis_satisfied"] = t.hypothesis_satisfied;
  j["conclusion_satisfied"] = t.conclusion_satisfied;
  j["hypothesis_points"] = t.hypothesis_points;
  j["counterexample"] = optional_index(t.counterexample);
  j["detail"] = t.detail;
  ordered_json audit = ordered_json::array();
  for (const auto& a : t.audit) audit.push_back(audit_record(a));
  j["audit"] = audit;
  return j;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

ordered_json metric_file_json(const MetricFile& f) {
  ordered_json j;
  j["name"] = f.name;
  j["coordinates"] = strings(f.coordinates);
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : f.parameters) params[k] = v;
  j["parameters"] = params;
  j["signature"] = to_string(f.signature);
  j["metric"] = strings(f.metric);
  if (f.fluid_velocity) j["fluid_velocity"] = strings(*f.fluid_velocity);
  if (f.mu) j["mu"] = *f.mu;
  if (f.p) j["p"] = *f.p;
  if (f.xi) j["xi"] = strings(*f.xi);
  if (f.faraday) j["faraday"] = strings(*f.faraday);
  j["constants"] = {{"lambda", f.lambda}, {"kappa", f.kappa}};

  ordered_json ev;
  ordered_json ranges = ordered_json::object();
  for (const auto& [c, r] : f.evaluation.ranges) {
    ranges[c] = {{"min", r.min}, {"max", r.max}, {"count", r.count}};
  }
  ev["ranges"] = ranges;
  ordered_json fixed = ordered_json::object();
  for (const auto& [c, v] : f.evaluation.fixed) fixed[c] = v;
  ev["fixed"] = fixed;
  ordered_json pts = ordered_json::array();
  for (const auto& p : f.evaluation.points) pts.push_back(strings(p));
  ev["points"] = pts;
  ev["exclude"] = f.evaluation.exclude;
  j["evaluation"] = ev;
  return j;
}

ordered_json report_json(const RunResult& run) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = metric_file_json(run.input);
  j["tolerance"] = run.options.tolerance;

  ordered_json points = ordered_json::array();
  for (const auto& s : run.summaries) points.push_back(point_json(s, run.input.coordinates));
  j["points"] = points;

  const auto& c = run.classification;
  ordered_json cls;
  ordered_json flags;
  for (const auto& f : c.flags) flags[f.name] = flag_record(f);
  cls["flags"] = flags;
  cls["fitted_coupling"] = c.fitted_coupling ? ordered_json(*c.fitted_coupling) : ordered_json(nullptr);
  j["classification"] = cls;

  ordered_json ids;
  for (const auto& f : c.identities) ids[f.name] = flag_record(f);
  j["identities"] = ids;

  ordered_json audit = ordered_json::array();
  for (const auto& a : c.audit) audit.push_back(audit_record(a));
  j["audit"] = audit;

  ordered_json theorems = ordered_json::array();
  for (const auto& t : run.theorems) theorems.push_back(theorem_json(t));
  j["theorems"] = theorems;

  const auto& a = run.frw;
  j["frw_assessment"] = {{"verdict", a.verdict},
                         {"hypothesis_points", a.hypothesis_points},
                         {"einstein_branch", a.einstein_branch},
                         {"frw_branch", a.frw_branch},
                         {"counterexample", optional_index(a.counterexample)},
                         {"mu_minus_3p_spread", a.mu_minus_3p_spread}};
  j["wall_clock_seconds"] = run.wall_clock_seconds;
  return j;
}

std::string report_text(const RunResult& run) {
  std::ostringstream out;
  const auto& c = run.classification;
  out << "metric: " << run.input.name << " (" << run.points.size() << " points, tolerance "
      << format_double(c.tolerance) << ")\n";
  if (c.fitted_coupling) out << "fitted electromagnetic coupling k = " << *c.fitted_coupling << "\n";

  auto table = [&out](const char* title, const std::vector<FlagRecord>& recs) {
    out << "\n" << title << ":\n";
    for (const auto& r : recs) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-36s %-15s %s\n", r.name.c_str(),
                    std::string(to_string(r.verdict)).c_str(),
                    r.verdict == Verdict::NotApplicable ? "" : format_double(r.worst_residual).c_str());
      out << line;
    }
  };
  table("flags", c.flags);
  table("identities", c.identities);

  out << "\ntheorems:\n";
  for (const auto& t : run.theorems) {
    char line[200];
    std::snprintf(line, sizeof line, "  %-66s %s\n", t.id.c_str(), std::string(to_string(t.status)).c_str());
    out << line;
  }
  out << "\nfluid dichotomy: " << run.frw.verdict << "\n";

  bool any_audit = false;
  for (const auto& a : c.audit) {
    if (a.verdict != Verdict::Fails) continue;
    if (!any_audit) out << "\naudit residuals above tolerance:\n";
    any_audit = true;
    char line[160];
    std::snprintf(line, sizeof line, "  %-36s %s\n", a.name.c_str(), format_double(a.worst_residual).c_str());
    out << line;
  }
  return out.str();
}

}  // namespace wcurv
