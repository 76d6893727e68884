#include "pmfp/solver.hpp"

#include <cmath>

namespace pmfp {

std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "CONVERGED";
    case SolveStatus::StationaryNoCert: return "STATIONARY_NO_CERT";
    case SolveStatus::MaxIters: return "MAX_ITERS";
    case SolveStatus::Diverging: return "DIVERGING";
  }
  return "?";
}

SolveStatus solve_status_from_name(std::string_view name) {
  if (name == "CONVERGED") return SolveStatus::Converged;
  if (name == "STATIONARY_NO_CERT") return SolveStatus::StationaryNoCert;
  if (name == "MAX_ITERS") return SolveStatus::MaxIters;
  if (name == "DIVERGING") return SolveStatus::Diverging;
  throw InputError("unknown solve status: " + std::string(name));
}

std::pair<Point, Point> step(const CoupledMap& map, const PartialMetricSpace& space,
                             const Point& x, const Point& y) {
  Point fx = map.apply(space, x, y);
  Point fy = map.apply(space, y, x);
  return {fx, fy};
}

double residual(const PartialMetricSpace& space, const Point& x_n, const Point& x_next,
                const Point& y_n, const Point& y_next) {
  return space.eval(x_n, x_next) + space.eval(y_n, y_next);
}

std::size_t a_priori_iters(double d0, double delta, double tol) {
  if (!std::isfinite(d0) || d0 < 0.0) throw InputError("a_priori_iters: d0 must be >= 0");
  if (!std::isfinite(delta) || delta < 0.0 || delta >= 1.0) {
    throw InputError("a_priori_iters: delta must lie in [0, 1)");
  }
  if (!std::isfinite(tol) || tol <= 0.0) throw InputError("a_priori_iters: tol must be > 0");
  const double head = d0 / (1.0 - delta);
  if (head <= tol) return 0;
  if (delta == 0.0) return 1;
  const auto tail = [&](std::size_t m) {
    return std::pow(delta, static_cast<double>(m)) * head;
  };
  // log-based first guess, then settle on the exact smallest m
  const double est = std::ceil(std::log(tol / head) / std::log(delta));
  std::size_t m = est > 1.0 ? static_cast<std::size_t>(est) : 1;
  while (tail(m) > tol) ++m;
  while (m > 1 && tail(m - 1) <= tol) --m;
  return m;
}

namespace {

ConvergenceCertificate make_certificate(SolveStatus status,
                                        std::optional<std::pair<Point, Point>> fixed_point,
                                        std::size_t iterations, double final_residual,
                                        const std::optional<ContractionSpec>& spec, double d0,
                                        double tol) {
  ConvergenceCertificate cert;
  cert.status = status;
  cert.fixed_point = std::move(fixed_point);
  cert.iterations = iterations;
  cert.final_residual = final_residual;
  cert.d0 = d0;
  if (spec) {
    cert.delta = delta_of(*spec);
    cert.a_priori_bound_iters = a_priori_iters(d0, *cert.delta, tol);
  }
  return cert;
}

}  // namespace

SolveResult solve(const CoupledMap& map, const PartialMetricSpace& space, const Point& x0,
                  const Point& y0, std::optional<ContractionSpec> spec,
                  const SolveConfig& config) {
  if (spec) validate_spec(*spec);
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) {
    throw InputError("solve: tol must be positive and finite");
  }

  SolveResult result;
  Point x = x0;
  Point y = y0;
  double d0 = 0.0;
  double prev_d = 0.0;

  for (std::size_t n = 0; n < config.max_iters; ++n) {
    const auto [x_next, y_next] = step(map, space, x, y);
    const double d = residual(space, x, x_next, y, y_next);
    const double ps = space.induced(x, x_next) + space.induced(y, y_next);
    if (!std::isfinite(d) || !std::isfinite(ps)) {
      throw NonFiniteError("solve: non-finite residual at iteration " + std::to_string(n));
    }
    result.trace.steps.push_back({n, x, y, d, ps});
    if (n == 0) {
      d0 = d;
      // d0 = 0 forces x1 = x0 and y1 = y0, so the start is already a
      // coupled fixed point.
      if (d0 == 0.0) {
        result.certificate = make_certificate(
            spec ? SolveStatus::Converged : SolveStatus::StationaryNoCert,
            std::make_pair(x, y), 0, d, spec, d0, config.tol);
        return result;
      }
    }
    if (spec && d <= config.tol) {
      result.certificate = make_certificate(SolveStatus::Converged,
                                            std::make_pair(x_next, y_next), n + 1, d, spec, d0,
                                            config.tol);
      return result;
    }
    // Stationary in p^s: a fixed point, possibly with positive
    // self-distance, which no contraction certificate can cover. With a
    // spec in hand a converging run can graze ps_step <= tol one step
    // before d_n <= tol, so certification keeps priority until the
    // residual stops improving (at a genuine positive-self-distance fixed
    // point d_n freezes).
    if (ps <= config.tol && (!spec || (n > 0 && d >= prev_d))) {
      result.certificate = make_certificate(SolveStatus::StationaryNoCert,
                                            std::make_pair(x_next, y_next), n + 1, d, spec, d0,
                                            config.tol);
      return result;
    }
    if (d > config.divergence_cap) {
      result.certificate = make_certificate(SolveStatus::Diverging, std::nullopt, n + 1, d,
                                            spec, d0, config.tol);
      return result;
    }
    prev_d = d;
    x = x_next;
    y = y_next;
  }

  const double last_d = result.trace.steps.empty() ? 0.0 : result.trace.steps.back().d;
  result.certificate = make_certificate(SolveStatus::MaxIters, std::nullopt, config.max_iters,
                                        last_d, spec, d0, config.tol);
  return result;
}

bool verify_coupled_fixed_point(const CoupledMap& map, const PartialMetricSpace& space,
                                const Point& x, const Point& y, double tol) {
  const auto [fx, fy] = step(map, space, x, y);
  return space.induced(fx, x) <= tol && space.induced(fy, y) <= tol;
}

double pair_induced_distance(const PartialMetricSpace& space, const std::pair<Point, Point>& a,
                             const std::pair<Point, Point>& b) {
  return space.induced(a.first, b.first) + space.induced(a.second, b.second);
}

ProbeReport probe_uniqueness(const CoupledMap& map, const PartialMetricSpace& space,
                             std::span<const std::pair<Point, Point>> starts,
                             std::optional<ContractionSpec> spec, const SolveConfig& config) {
  if (starts.empty()) throw InputError("probe_uniqueness needs at least one start");
  ProbeReport report;
  for (const auto& start : starts) {
    SolveResult r = solve(map, space, start.first, start.second, spec, config);
    report.runs.push_back(
        {r.certificate.status, r.certificate.fixed_point, r.certificate.iterations});
    if (!r.certificate.fixed_point) continue;
    const auto& terminal = *r.certificate.fixed_point;
    bool clustered = false;
    for (const auto& rep : report.distinct_points) {
      if (pair_induced_distance(space, rep, terminal) <= config.tol) {
        clustered = true;
        break;
      }
    }
    if (!clustered) report.distinct_points.push_back(terminal);
  }
  const std::size_t k = report.distinct_points.size();
  report.pairwise_ps.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      report.pairwise_ps[i][j] =
          pair_induced_distance(space, report.distinct_points[i], report.distinct_points[j]);
  return report;
}

std::vector<Quadruple> trace_quadruples(const IterationTrace& trace) {
  std::vector<Quadruple> out;
  if (trace.steps.size() < 2) return out;
  out.reserve(2 * (trace.steps.size() - 1));
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    const TraceStep& prev = trace.steps[i - 1];
    const TraceStep& cur = trace.steps[i];
    out.push_back({prev.x, prev.y, cur.x, cur.y});
    out.push_back({prev.y, prev.x, cur.y, cur.x});
  }
  return out;
}

}  // namespace pmfp
