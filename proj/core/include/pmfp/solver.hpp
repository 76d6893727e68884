#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pmfp/contraction.hpp"
#include "pmfp/coupled_map.hpp"
#include "pmfp/point.hpp"
#include "pmfp/space.hpp"

namespace pmfp {

// One record of the coupled Picard scheme x_{n+1} = F(x_n, y_n),
// y_{n+1} = F(y_n, x_n). Stores the iterate the step started from; d is the
// residual d_n = p(x_n, x_{n+1}) + p(y_n, y_{n+1}) and ps_step the same sum
// under the induced metric p^s.
struct TraceStep {
  std::size_t n;
  Point x;
  Point y;
  double d;
  double ps_step;
};

struct IterationTrace {
  std::vector<TraceStep> steps;
};

enum class SolveStatus {
  Converged,        // spec supplied and d_n <= tol: certified fixed point
  StationaryNoCert, // ps_step <= tol but d_n not: fixed point, no certificate
  MaxIters,
  Diverging,
};

std::string_view solve_status_name(SolveStatus s);
SolveStatus solve_status_from_name(std::string_view name);

struct ConvergenceCertificate {
  SolveStatus status;
  std::optional<std::pair<Point, Point>> fixed_point;  // present when located
  std::size_t iterations = 0;                          // map applications performed
  double final_residual = 0.0;                         // last recorded d_n
  std::optional<double> delta;                         // present when a spec was given
  std::optional<std::size_t> a_priori_bound_iters;     // ditto
  double d0 = 0.0;
};

struct SolveConfig {
  double tol = 1e-9;
  std::size_t max_iters = 10000;
  double divergence_cap = 1e12;
};

// One Picard step (F(x,y), F(y,x)). Throws DomainEscapeError when the map
// leaves the carrier.
std::pair<Point, Point> step(const CoupledMap& map, const PartialMetricSpace& space,
                             const Point& x, const Point& y);

// d = p(x_n, x_next) + p(y_n, y_next).
double residual(const PartialMetricSpace& space, const Point& x_n, const Point& x_next,
                const Point& y_n, const Point& y_next);

// Smallest m >= 0 with delta^m * d0 / (1 - delta) <= tol, the a priori
// iteration count from the geometric tail bound. Requires d0 >= 0,
// 0 <= delta < 1, tol > 0.
std::size_t a_priori_iters(double d0, double delta, double tol);

struct SolveResult {
  ConvergenceCertificate certificate;
  IterationTrace trace;
};

// Runs the coupled Picard iteration from (x0, y0).
//
// Two stopping criteria, deliberately separate:
//   - with a validated spec, d_n <= tol certifies convergence (a valid
//     contractive condition forces the limit's self-distance to 0, so
//     d_n -> 0 at a genuine fixed point);
//   - ps_step <= tol detects stationarity without a certificate. Fixed
//     points with positive self-distance keep d_n bounded away from zero, so
//     this is the only stop that can find them; it never upgrades to
//     Converged. When a spec is present this stop yields to certification
//     until the residual stops shrinking, since a converging run can touch
//     ps_step <= tol one step before d_n <= tol.
// If d0 = 0 the start is already a coupled fixed point and is returned with
// zero iterations. Diverging fires when a residual exceeds divergence_cap.
SolveResult solve(const CoupledMap& map, const PartialMetricSpace& space, const Point& x0,
                  const Point& y0, std::optional<ContractionSpec> spec = std::nullopt,
                  const SolveConfig& config = {});

// True iff p^s(F(x,y), x) <= tol and p^s(F(y,x), y) <= tol. Uses p^s rather
// than p because p^s(a,b) = 0 <=> a = b while p(a,a) may be positive.
bool verify_coupled_fixed_point(const CoupledMap& map, const PartialMetricSpace& space,
                                const Point& x, const Point& y, double tol = 1e-9);

// p^s(a.first, b.first) + p^s(a.second, b.second): the induced distance
// between two candidate coupled fixed points.
double pair_induced_distance(const PartialMetricSpace& space,
                             const std::pair<Point, Point>& a,
                             const std::pair<Point, Point>& b);

struct ProbeRun {
  SolveStatus status;
  std::optional<std::pair<Point, Point>> terminal;
  std::size_t iterations = 0;
};

struct ProbeReport {
  // Cluster representatives: terminal points of the runs, deduplicated by
  // pair_induced_distance <= tol.
  std::vector<std::pair<Point, Point>> distinct_points;
  // pairwise_ps[i][j] = pair_induced_distance(distinct_points[i], [j]).
  std::vector<std::vector<double>> pairwise_ps;
  std::vector<ProbeRun> runs;
};

// Solves from every start and clusters the located fixed points. With a
// valid spec and all runs converged, exactly one cluster is expected.
ProbeReport probe_uniqueness(const CoupledMap& map, const PartialMetricSpace& space,
                             std::span<const std::pair<Point, Point>> starts,
                             std::optional<ContractionSpec> spec = std::nullopt,
                             const SolveConfig& config = {});

// The consecutive quadruples (x_{n-1}, y_{n-1}, x_n, y_n) realized by a
// trace, the ones the contraction inequality acts on during the iteration.
// Includes the swapped (y, x) orientation used for the y-sequence bound.
std::vector<Quadruple> trace_quadruples(const IterationTrace& trace);

}  // namespace pmfp
