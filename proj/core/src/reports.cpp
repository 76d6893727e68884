#include "pmfp/reports.hpp"

#include <json.hpp>

namespace pmfp::reports {

namespace {

using Json = nlohmann::ordered_json;

Json point_to_json(const Point& p) {
  Json j;
  j["carrier"] = std::string(carrier_name(p.carrier()));
  if (p.is_index()) {
    j["index"] = p.index();
  } else {
    j["value"] = p.value();
  }
  return j;
}

Point point_from_json(const Json& j) {
  const std::string carrier = j.at("carrier").get<std::string>();
  if (carrier == "tabulated") return Point::tabulated(j.at("index").get<std::size_t>());
  if (carrier == "max_halfline") return Point::max_halfline(j.at("value").get<double>());
  if (carrier == "metric_lift") return Point::metric_lift(j.at("value").get<double>());
  throw InputError("bad point carrier in report: " + carrier);
}

Json pair_to_json(const std::pair<Point, Point>& p) {
  Json j;
  j["x"] = point_to_json(p.first);
  j["y"] = point_to_json(p.second);
  return j;
}

std::pair<Point, Point> pair_from_json(const Json& j) {
  return {point_from_json(j.at("x")), point_from_json(j.at("y"))};
}

Json parse(std::string_view text) {
  return Json::parse(text);  // throws nlohmann's parse_error on bad input
}

}  // namespace

std::string to_json(const AxiomReport& report) {
  Json j;
  j["passed"] = report.passed;
  j["violations"] = Json::array();
  for (const AxiomViolation& v : report.violations) {
    Json jv;
    jv["axiom"] = std::string(axiom_name(v.axiom));
    jv["witness"] = Json::array();
    for (const Point& p : v.witness) jv["witness"].push_back(point_to_json(p));
    jv["lhs"] = v.lhs;
    jv["rhs"] = v.rhs;
    j["violations"].push_back(std::move(jv));
  }
  j["sample_size"] = report.sample_size;
  return j.dump(2) + "\n";
}

AxiomReport axiom_report_from_json(std::string_view text) {
  const Json j = parse(text);
  AxiomReport report;
  report.passed = j.at("passed").get<bool>();
  report.sample_size = j.at("sample_size").get<std::size_t>();
  for (const Json& jv : j.at("violations")) {
    AxiomViolation v{axiom_from_name(jv.at("axiom").get<std::string>()),
                     {},
                     jv.at("lhs").get<double>(),
                     jv.at("rhs").get<double>()};
    for (const Json& jp : jv.at("witness")) v.witness.push_back(point_from_json(jp));
    report.violations.push_back(std::move(v));
  }
  return report;
}

std::string to_json(const ConvergenceCertificate& certificate) {
  Json j;
  j["status"] = std::string(solve_status_name(certificate.status));
  if (certificate.fixed_point) j["fixed_point"] = pair_to_json(*certificate.fixed_point);
  j["iterations"] = certificate.iterations;
  j["final_residual"] = certificate.final_residual;
  if (certificate.delta) j["delta"] = *certificate.delta;
  if (certificate.a_priori_bound_iters) j["a_priori_bound_iters"] = *certificate.a_priori_bound_iters;
  j["d0"] = certificate.d0;
  return j.dump(2) + "\n";
}

ConvergenceCertificate certificate_from_json(std::string_view text) {
  const Json j = parse(text);
  ConvergenceCertificate cert;
  cert.status = solve_status_from_name(j.at("status").get<std::string>());
  if (j.contains("fixed_point")) cert.fixed_point = pair_from_json(j.at("fixed_point"));
  cert.iterations = j.at("iterations").get<std::size_t>();
  cert.final_residual = j.at("final_residual").get<double>();
  if (j.contains("delta")) cert.delta = j.at("delta").get<double>();
  if (j.contains("a_priori_bound_iters"))
    cert.a_priori_bound_iters = j.at("a_priori_bound_iters").get<std::size_t>();
  cert.d0 = j.at("d0").get<double>();
  return cert;
}

std::string to_json(const IterationTrace& trace) {
  Json j;
  j["steps"] = Json::array();
  for (const TraceStep& s : trace.steps) {
    Json js;
    js["n"] = s.n;
    js["x_n"] = point_to_json(s.x);
    js["y_n"] = point_to_json(s.y);
    js["d_n"] = s.d;
    js["ps_step"] = s.ps_step;
    j["steps"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

IterationTrace trace_from_json(std::string_view text) {
  const Json j = parse(text);
  IterationTrace trace;
  for (const Json& js : j.at("steps")) {
    trace.steps.push_back({js.at("n").get<std::size_t>(), point_from_json(js.at("x_n")),
                           point_from_json(js.at("y_n")), js.at("d_n").get<double>(),
                           js.at("ps_step").get<double>()});
  }
  return trace;
}

std::string to_json(const ProbeReport& report) {
  Json j;
  j["distinct_points"] = Json::array();
  for (const auto& p : report.distinct_points) j["distinct_points"].push_back(pair_to_json(p));
  j["pairwise_ps"] = report.pairwise_ps;
  j["runs"] = Json::array();
  for (const ProbeRun& r : report.runs) {
    Json jr;
    jr["status"] = std::string(solve_status_name(r.status));
    if (r.terminal) jr["terminal"] = pair_to_json(*r.terminal);
    jr["iterations"] = r.iterations;
    j["runs"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

ProbeReport probe_report_from_json(std::string_view text) {
  const Json j = parse(text);
  ProbeReport report;
  for (const Json& jp : j.at("distinct_points")) report.distinct_points.push_back(pair_from_json(jp));
  report.pairwise_ps = j.at("pairwise_ps").get<std::vector<std::vector<double>>>();
  for (const Json& jr : j.at("runs")) {
    ProbeRun run;
    run.status = solve_status_from_name(jr.at("status").get<std::string>());
    if (jr.contains("terminal")) run.terminal = pair_from_json(jr.at("terminal"));
    run.iterations = jr.at("iterations").get<std::size_t>();
    report.runs.push_back(std::move(run));
  }
  return report;
}

std::string violations_to_json(std::span<const ContractionViolation> violations) {
  Json j;
  j["violations"] = Json::array();
  for (const ContractionViolation& v : violations) {
    Json jv;
    jv["quadruple"]["x"] = point_to_json(v.q.x);
    jv["quadruple"]["y"] = point_to_json(v.q.y);
    jv["quadruple"]["u"] = point_to_json(v.q.u);
    jv["quadruple"]["v"] = point_to_json(v.q.v);
    jv["lhs"] = v.lhs;
    jv["rhs"] = v.rhs;
    j["violations"].push_back(std::move(jv));
  }
  j["count"] = violations.size();
  return j.dump(2) + "\n";
}

std::vector<ContractionViolation> violations_from_json(std::string_view text) {
  const Json j = parse(text);
  std::vector<ContractionViolation> out;
  for (const Json& jv : j.at("violations")) {
    const Json& q = jv.at("quadruple");
    out.push_back({{point_from_json(q.at("x")), point_from_json(q.at("y")),
                    point_from_json(q.at("u")), point_from_json(q.at("v"))},
                   jv.at("lhs").get<double>(),
                   jv.at("rhs").get<double>()});
  }
  return out;
}

}  // namespace pmfp::reports
