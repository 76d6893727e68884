#include "commands.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "config.hpp"
#include "pmfp/axiom_check.hpp"
#include "pmfp/reports.hpp"
#include "pmfp/sampling.hpp"
#include "pmfp/solver.hpp"

namespace pmfp::cli {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("short write to " + path.string());
}

ProblemConfig load_with_overrides(const CliOptions& opts, bool tol_is_axiom_tol = false) {
  ProblemConfig cfg = load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.tol) {
    if (tol_is_axiom_tol) cfg.axiom_tol = *opts.tol;
    else cfg.tol = *opts.tol;
  }
  if (opts.max_iters) cfg.max_iters = *opts.max_iters;
  return cfg;
}

int status_exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return kExitOk;
    case SolveStatus::StationaryNoCert: return kExitStationary;
    case SolveStatus::MaxIters:
    case SolveStatus::Diverging: return kExitNoConvergence;
  }
  return kExitNoConvergence;
}

SolveConfig solve_config(const ProblemConfig& cfg) {
  return SolveConfig{cfg.tol, cfg.max_iters, cfg.divergence_cap};
}

void print_point_pair(std::ostream& os, const std::pair<Point, Point>& p) {
  os << "(" << p.first.scalar() << ", " << p.second.scalar() << ")";
}

// Shared by solve/probe/demo: run the sampled contraction check and warn.
std::size_t warn_on_spec_violations(const CoupledMap& map, const PartialMetricSpace& space,
                                    const ContractionSpec& spec, const ProblemConfig& cfg) {
  const auto quadruples = sample_quadruples(space, cfg.seed, cfg.sample_quadruples);
  const auto violations = verify_contraction(map, space, spec, quadruples, cfg.tol);
  if (!violations.empty()) {
    std::cerr << "warning: contractive condition " << mode_name(spec.mode) << " (k = " << spec.k
              << ", l = " << spec.l << ") fails on " << violations.size() << " of "
              << quadruples.size() << " sampled quadruples; any certificate is void\n";
  }
  return violations.size();
}

int guarded(int (*body)(const CliOptions&), const CliOptions& opts) {
  try {
    return body(opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const AxiomViolationError& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const SpecInvalidError& e) {
    std::cerr << "invalid contraction spec: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    // runtime failures: domain escape, non-finite values, eval errors
    std::cerr << "run failed: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int do_check_axioms(const CliOptions& opts) {
  const ProblemConfig cfg = load_with_overrides(opts, /*tol_is_axiom_tol=*/true);
  const PartialMetricSpace space = build_space(cfg, /*validated=*/false);
  const std::vector<Point> sample = default_sample(space, cfg.seed, cfg.sample_points);

  const std::array<AxiomReport, 3> parts = {
      check_axioms(space, sample, cfg.axiom_tol),
      check_zero_implies_equal(space, sample, cfg.axiom_tol),
      check_induced_metric(space, sample, cfg.axiom_tol),
  };
  const AxiomReport combined = merge_reports(parts);

  write_file(opts.out_dir, "axiom_report.json", reports::to_json(combined));
  write_file(opts.out_dir, "effective_config.txt", effective_config_text(cfg));

  std::cout << "checked " << combined.sample_size << " points on " << space.label() << ": "
            << (combined.passed ? "all axioms hold" : "violations found") << "\n";
  if (!combined.passed) {
    std::cout << combined.violations.size() << " violation(s); first: "
              << axiom_name(combined.violations.front().axiom) << ", lhs "
              << combined.violations.front().lhs << " vs rhs " << combined.violations.front().rhs
              << "\n";
  }
  std::cout << "report: " << (fs::path(opts.out_dir) / "axiom_report.json").string() << "\n";
  return combined.passed ? kExitOk : kExitViolation;
}

int do_verify(const CliOptions& opts) {
  const ProblemConfig cfg = load_with_overrides(opts);
  const PartialMetricSpace space = build_space(cfg, /*validated=*/true);
  const CoupledMap map = build_map(cfg);
  const auto spec = build_spec(cfg);
  if (!spec) throw ConfigError("verify needs a spec section (spec.mode, spec.k, spec.l)");

  const auto quadruples = sample_quadruples(space, cfg.seed, cfg.sample_quadruples);
  const auto violations = verify_contraction(map, space, *spec, quadruples, cfg.tol);

  write_file(opts.out_dir, "verify_report.json", reports::violations_to_json(violations));
  write_file(opts.out_dir, "effective_config.txt", effective_config_text(cfg));

  std::cout << "checked " << quadruples.size() << " quadruples: " << violations.size()
            << " violation(s) of " << mode_name(spec->mode) << " (k = " << spec->k
            << ", l = " << spec->l << ")\n";
  std::cout << "report: " << (fs::path(opts.out_dir) / "verify_report.json").string() << "\n";
  return violations.empty() ? kExitOk : kExitViolation;
}

int do_solve(const CliOptions& opts) {
  const ProblemConfig cfg = load_with_overrides(opts);
  const PartialMetricSpace space = build_space(cfg, /*validated=*/true);
  const CoupledMap map = build_map(cfg);
  const auto spec = build_spec(cfg);
  if (cfg.starts.empty()) throw ConfigError("solve needs a start = <x> <y> line");
  if (spec) warn_on_spec_violations(map, space, *spec, cfg);

  const Point x0 = space.point(cfg.starts.front().first);
  const Point y0 = space.point(cfg.starts.front().second);
  const SolveResult result = solve(map, space, x0, y0, spec, solve_config(cfg));

  write_file(opts.out_dir, "certificate.json", reports::to_json(result.certificate));
  write_file(opts.out_dir, "trace.json", reports::to_json(result.trace));
  write_file(opts.out_dir, "effective_config.txt", effective_config_text(cfg));

  std::cout << solve_status_name(result.certificate.status) << " after "
            << result.certificate.iterations << " iteration(s), final residual "
            << result.certificate.final_residual;
  if (result.certificate.fixed_point) {
    std::cout << ", fixed point ";
    print_point_pair(std::cout, *result.certificate.fixed_point);
  }
  std::cout << "\n";
  std::cout << "certificate: " << (fs::path(opts.out_dir) / "certificate.json").string()
            << "\ntrace: " << (fs::path(opts.out_dir) / "trace.json").string() << "\n";
  return status_exit_code(result.certificate.status);
}

int do_probe(const CliOptions& opts) {
  const ProblemConfig cfg = load_with_overrides(opts);
  const PartialMetricSpace space = build_space(cfg, /*validated=*/true);
  const CoupledMap map = build_map(cfg);
  const auto spec = build_spec(cfg);
  if (cfg.starts.empty()) throw ConfigError("probe needs at least one start = <x> <y> line");
  if (spec) warn_on_spec_violations(map, space, *spec, cfg);

  std::vector<std::pair<Point, Point>> starts;
  starts.reserve(cfg.starts.size());
  for (const auto& [a, b] : cfg.starts) starts.emplace_back(space.point(a), space.point(b));

  const ProbeReport report = probe_uniqueness(map, space, starts, spec, solve_config(cfg));

  write_file(opts.out_dir, "probe_report.json", reports::to_json(report));
  write_file(opts.out_dir, "effective_config.txt", effective_config_text(cfg));

  std::cout << report.runs.size() << " run(s), " << report.distinct_points.size()
            << " distinct fixed point(s)\n";
  for (const auto& p : report.distinct_points) {
    std::cout << "  ";
    print_point_pair(std::cout, p);
    std::cout << "\n";
  }
  std::cout << "report: " << (fs::path(opts.out_dir) / "probe_report.json").string() << "\n";

  int worst = kExitOk;
  for (const ProbeRun& run : report.runs) worst = std::max(worst, status_exit_code(run.status));
  return worst;
}

}  // namespace

int run_check_axioms(const CliOptions& opts) { return guarded(do_check_axioms, opts); }
int run_verify(const CliOptions& opts) { return guarded(do_verify, opts); }
int run_solve(const CliOptions& opts) { return guarded(do_solve, opts); }
int run_probe(const CliOptions& opts) { return guarded(do_probe, opts); }

int run_demo(const std::string& out_dir, std::optional<std::uint64_t> seed,
             std::optional<double> tol) {
  try {
    const std::uint64_t the_seed = seed.value_or(42);
    const double the_tol = tol.value_or(1e-9);
    const PartialMetricSpace space = PartialMetricSpace::max_halfline();
    SolveConfig config;
    config.tol = the_tol;

    // Part 1: F(x,y) = (x+y)/6 satisfies the mixed-argument condition with
    // k = l = 1/6, so the iteration from (1, 2) must converge to (0, 0)
    // with a certificate.
    const CoupledMap f6 = CoupledMap::from_expr("(x + y) / 6");
    const ContractionSpec spec{Mode::MixedArg, 1.0 / 6.0, 1.0 / 6.0};
    const auto quadruples = sample_quadruples(space, the_seed, 256);
    const auto pre = verify_contraction(f6, space, spec, quadruples, the_tol);
    const SolveResult run1 =
        solve(f6, space, Point::max_halfline(1.0), Point::max_halfline(2.0), spec, config);

    write_file(out_dir, "demo_example_certificate.json", reports::to_json(run1.certificate));
    write_file(out_dir, "demo_example_trace.json", reports::to_json(run1.trace));

    std::cout << "part 1: F(x,y) = (x+y)/6 on the max partial metric, start (1, 2)\n";
    std::cout << "  sampled contraction check: " << pre.size() << " violation(s) on "
              << quadruples.size() << " quadruples\n";
    std::cout << "  " << solve_status_name(run1.certificate.status) << " after "
              << run1.certificate.iterations << " iterations (a priori bound "
              << (run1.certificate.a_priori_bound_iters
                      ? std::to_string(*run1.certificate.a_priori_bound_iters)
                      : std::string("-"))
              << "), final residual " << run1.certificate.final_residual << "\n";
    if (run1.certificate.fixed_point) {
      std::cout << "  fixed point ";
      print_point_pair(std::cout, *run1.certificate.fixed_point);
      std::cout << "\n";
    }

    // Part 2: F(x,y) = (x+y)/2 only satisfies the condition at k + l = 1,
    // and both (0,0) and (1,1) stay fixed: starting at each finds two
    // distinct stationary points, so no uniqueness without k + l < 1.
    const CoupledMap f2 = CoupledMap::from_expr("(x + y) / 2");
    const std::vector<std::pair<Point, Point>> starts = {
        {Point::max_halfline(0.0), Point::max_halfline(0.0)},
        {Point::max_halfline(1.0), Point::max_halfline(1.0)},
    };
    const ProbeReport run2 = probe_uniqueness(f2, space, starts, std::nullopt, config);
    write_file(out_dir, "demo_boundary_probe.json", reports::to_json(run2));

    std::cout << "part 2: F(x,y) = (x+y)/2 on the same space, starts (0, 0) and (1, 1)\n";
    std::cout << "  " << run2.distinct_points.size() << " distinct fixed point(s):";
    for (const auto& p : run2.distinct_points) {
      std::cout << " ";
      print_point_pair(std::cout, p);
    }
    std::cout << "\n";

    const bool part1_ok =
        run1.certificate.status == SolveStatus::Converged && run1.certificate.fixed_point &&
        run1.certificate.fixed_point->first.value() <= the_tol &&
        run1.certificate.fixed_point->second.value() <= the_tol && pre.empty();
    const bool part2_ok = run2.distinct_points.size() == 2;

    std::cout << "moral: the strict constants are what buy uniqueness; at k + l = 1 the "
                 "fixed point splits, at k + l = 1/3 it is unique and certified.\n";
    std::cout << "reports: " << (fs::path(out_dir) / "demo_example_certificate.json").string()
              << ", " << (fs::path(out_dir) / "demo_example_trace.json").string() << ", "
              << (fs::path(out_dir) / "demo_boundary_probe.json").string() << "\n";
    std::cout << (part1_ok && part2_ok ? "demo: OK" : "demo: FAILED") << "\n";
    return part1_ok && part2_ok ? kExitOk : kExitNoConvergence;
  } catch (const Error& e) {
    std::cerr << "demo failed: " << e.what() << "\n";
    return kExitNoConvergence;
  }
}

}  // namespace pmfp::cli
