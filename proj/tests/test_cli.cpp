#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "pmfp/reports.hpp"

using namespace pmfp;
using namespace pmfp::cli;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kExampleConfig =
    "space.kind = max\n"
    "map.expr = (x + y) / 6\n"
    "start = 1 2\n"
    "spec.mode = mixed_arg\n"
    "spec.k = 0.16666666666666666\n"
    "spec.l = 0.16666666666666666\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config parsing and defaults") {
  const ProblemConfig cfg = parse_config_text(kExampleConfig, "test");
  CHECK(cfg.space_kind == "max");
  CHECK(cfg.map_expr == "(x + y) / 6");
  REQUIRE(cfg.starts.size() == 1);
  CHECK(cfg.starts[0].first == 1.0);
  CHECK(cfg.starts[0].second == 2.0);
  CHECK(cfg.spec_mode == "mixed_arg");
  CHECK(cfg.tol == 1e-9);
  CHECK(cfg.max_iters == 10000);
  CHECK(cfg.seed == 42);
  CHECK(cfg.divergence_cap == 1e12);
}

TEST_CASE("config errors carry the line and key") {
  CHECK_THROWS_WITH_AS(parse_config_text("space.kind = euclid\n", "t"),
                       doctest::Contains("space.kind"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("nonsense.key = 1\n", "t"),
                       doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("tol\n", "t"), doctest::Contains("key = value"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("tol = fast\n", "t"), doctest::Contains("decimal"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("start = 1\n", "t"), doctest::Contains("two decimals"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("tol = 1\ntol = 2\n", "t"),
                       doctest::Contains("duplicate"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("max_iters = 1.5\n", "t"), ConfigError);
}

TEST_CASE("start repeats accumulate, comments and blanks are skipped") {
  const ProblemConfig cfg = parse_config_text(
      "# probe setup\n\nspace.kind = max\nmap.expr = x\nstart = 0 0\nstart = 1 1  # second\n",
      "test");
  REQUIRE(cfg.starts.size() == 2);
  CHECK(cfg.starts[1].first == 1.0);
}

TEST_CASE("effective config round-trips to the same configuration") {
  ProblemConfig cfg = parse_config_text(kExampleConfig, "test");
  const std::string text = effective_config_text(cfg);
  const ProblemConfig back = parse_config_text(text, "effective");
  CHECK(back.space_kind == cfg.space_kind);
  CHECK(back.map_expr == cfg.map_expr);
  CHECK(back.starts == cfg.starts);
  CHECK(back.spec_mode == cfg.spec_mode);
  CHECK(back.spec_k == cfg.spec_k);
  CHECK(back.spec_l == cfg.spec_l);
  CHECK(back.tol == cfg.tol);
  CHECK(back.axiom_tol == cfg.axiom_tol);
  CHECK(back.max_iters == cfg.max_iters);
  CHECK(back.divergence_cap == cfg.divergence_cap);
  CHECK(back.seed == cfg.seed);
  CHECK(back.sample_points == cfg.sample_points);
  CHECK(back.sample_quadruples == cfg.sample_quadruples);
  // and the effective text is a fixed point
  CHECK(effective_config_text(back) == text);
}

TEST_CASE("builders reject missing sections") {
  const ProblemConfig none = parse_config_text("tol = 1e-9\n", "t");
  CHECK_THROWS_AS(build_space(none, true), ConfigError);
  CHECK_THROWS_AS(build_map(none), ConfigError);
  CHECK(build_spec(none) == std::nullopt);

  const ProblemConfig bad_spec =
      parse_config_text("spec.mode = mixed_arg\nspec.k = 0.5\nspec.l = 0.5\n", "t");
  CHECK_THROWS_AS(build_spec(bad_spec), ConfigError);

  const ProblemConfig bad_expr = parse_config_text("map.expr = x +\n", "t");
  CHECK_THROWS_WITH_AS(build_map(bad_expr), doctest::Contains("map.expr"), ConfigError);

  const ProblemConfig both =
      parse_config_text("map.expr = x\nmap.family = constant\nmap.c = 1\n", "t");
  CHECK_THROWS_AS(build_map(both), ConfigError);
}

TEST_CASE("weighted_sum family builds the affine map") {
  const ProblemConfig cfg = parse_config_text(
      "map.family = weighted_sum\nmap.a = 0.25\nmap.b = 0\nmap.c = 0\n", "t");
  const CoupledMap f = build_map(cfg);
  CHECK(f.raw(8, 3) == 2.0);
}

TEST_CASE("solve command: worked example exits 0 and writes parseable reports") {
  const fs::path dir = fresh_dir("pmfp_cli_solve");
  const fs::path cfg = write(dir / "problem.cfg", kExampleConfig);
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_solve(opts) == kExitOk);

  const auto cert = reports::certificate_from_json(slurp(dir / "out" / "certificate.json"));
  CHECK(cert.status == SolveStatus::Converged);
  CHECK(cert.iterations <= 21);
  REQUIRE(cert.fixed_point.has_value());
  CHECK(cert.fixed_point->first.value() <= 1e-9);

  const auto trace = reports::trace_from_json(slurp(dir / "out" / "trace.json"));
  CHECK(trace.steps.size() == cert.iterations);
}

TEST_CASE("solve command: stationary boundary case exits 3") {
  const fs::path dir = fresh_dir("pmfp_cli_stationary");
  const fs::path cfg =
      write(dir / "problem.cfg", "space.kind = max\nmap.expr = (x + y) / 2\nstart = 1 1\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_solve(opts) == kExitStationary);
}

TEST_CASE("solve command: divergence exits 4") {
  const fs::path dir = fresh_dir("pmfp_cli_diverge");
  const fs::path cfg =
      write(dir / "problem.cfg", "space.kind = max\nmap.expr = x + y + 1\nstart = 1 1\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_solve(opts) == kExitNoConvergence);
}

TEST_CASE("solve command: config problems exit 64") {
  const fs::path dir = fresh_dir("pmfp_cli_cfgerr");
  CliOptions opts;
  opts.config_path = (dir / "missing.cfg").string();
  CHECK(run_solve(opts) == kExitConfig);

  const fs::path no_space = write(dir / "no_space.cfg", "map.expr = x\nstart = 1 1\n");
  opts.config_path = no_space.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_solve(opts) == kExitConfig);

  const fs::path bad_key = write(dir / "bad_key.cfg", "space.sort = max\n");
  opts.config_path = bad_key.string();
  CHECK(run_solve(opts) == kExitConfig);
}

TEST_CASE("solve command: invalid tabulated space exits 2") {
  const fs::path dir = fresh_dir("pmfp_cli_badtab");
  write(dir / "m.txt", "2\n2 1\n1 1\n");
  const fs::path cfg = write(dir / "problem.cfg",
                             "space.kind = tabulated\nspace.matrix = " + (dir / "m.txt").string() +
                                 "\nmap.expr = min(x, y)\nstart = 0 1\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_solve(opts) == kExitViolation);
}

TEST_CASE("check-axioms command on the max space exits 0") {
  const fs::path dir = fresh_dir("pmfp_cli_axioms_ok");
  const fs::path cfg = write(dir / "space.cfg", "space.kind = max\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_check_axioms(opts) == kExitOk);
  const auto report = reports::axiom_report_from_json(slurp(dir / "out" / "axiom_report.json"));
  CHECK(report.passed);
  CHECK(report.sample_size == 75);  // 11 grid + 64 random
}

TEST_CASE("check-axioms command flags a bad matrix with exit 2") {
  const fs::path dir = fresh_dir("pmfp_cli_axioms_bad");
  write(dir / "m.txt", "2\n2 1\n1 1\n");
  const fs::path cfg = write(
      dir / "space.cfg", "space.kind = tabulated\nspace.matrix = " + (dir / "m.txt").string() + "\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_check_axioms(opts) == kExitViolation);
  const auto report = reports::axiom_report_from_json(slurp(dir / "out" / "axiom_report.json"));
  REQUIRE_FALSE(report.passed);
  CHECK(report.violations.front().axiom == Axiom::P2);
  CHECK(report.violations.front().lhs == 2.0);
  CHECK(report.violations.front().rhs == 1.0);
}

TEST_CASE("check-axioms without a space section exits 64") {
  const fs::path dir = fresh_dir("pmfp_cli_axioms_nospace");
  const fs::path cfg = write(dir / "space.cfg", "tol = 1e-9\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_check_axioms(opts) == kExitConfig);
}

TEST_CASE("verify command reports violations with exit 2") {
  const fs::path dir = fresh_dir("pmfp_cli_verify");
  const fs::path clean = write(dir / "clean.cfg", kExampleConfig);
  CliOptions opts;
  opts.config_path = clean.string();
  opts.out_dir = (dir / "out_clean").string();
  CHECK(run_verify(opts) == kExitOk);

  const fs::path dirty = write(dir / "dirty.cfg",
                               "space.kind = max\nmap.expr = (x + y) / 2\nstart = 1 1\n"
                               "spec.mode = mixed_arg\nspec.k = 0.4\nspec.l = 0.4\n");
  opts.config_path = dirty.string();
  opts.out_dir = (dir / "out_dirty").string();
  CHECK(run_verify(opts) == kExitViolation);
  const auto violations =
      reports::violations_from_json(slurp(dir / "out_dirty" / "verify_report.json"));
  CHECK_FALSE(violations.empty());

  const fs::path no_spec = write(dir / "nospec.cfg", "space.kind = max\nmap.expr = x\n");
  opts.config_path = no_spec.string();
  CHECK(run_verify(opts) == kExitConfig);
}

TEST_CASE("probe command clusters the boundary fixed points and exits 3") {
  const fs::path dir = fresh_dir("pmfp_cli_probe");
  const fs::path cfg = write(dir / "probe.cfg",
                             "space.kind = max\nmap.expr = (x + y) / 2\n"
                             "start = 0 0\nstart = 1 1\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_probe(opts) == kExitStationary);
  const auto report = reports::probe_report_from_json(slurp(dir / "out" / "probe_report.json"));
  CHECK(report.distinct_points.size() == 2);
  CHECK(report.pairwise_ps[0][1] >= 0.5);
}

TEST_CASE("probe command with a certified contraction exits 0") {
  const fs::path dir = fresh_dir("pmfp_cli_probe_ok");
  const fs::path cfg = write(dir / "probe.cfg", kExampleConfig + "start = 5 0\nstart = 10 10\n");
  CliOptions opts;
  opts.config_path = cfg.string();
  opts.out_dir = (dir / "out").string();
  CHECK(run_probe(opts) == kExitOk);
  const auto report = reports::probe_report_from_json(slurp(dir / "out" / "probe_report.json"));
  CHECK(report.distinct_points.size() == 1);
  CHECK(report.runs.size() == 3);
}

TEST_CASE("effective config reruns to identical outputs") {
  const fs::path dir = fresh_dir("pmfp_cli_roundtrip");
  const fs::path cfg = write(dir / "problem.cfg", kExampleConfig);
  CliOptions first;
  first.config_path = cfg.string();
  first.out_dir = (dir / "a").string();
  REQUIRE(run_solve(first) == kExitOk);

  CliOptions second;
  second.config_path = (dir / "a" / "effective_config.txt").string();
  second.out_dir = (dir / "b").string();
  REQUIRE(run_solve(second) == kExitOk);

  CHECK(slurp(dir / "a" / "certificate.json") == slurp(dir / "b" / "certificate.json"));
  CHECK(slurp(dir / "a" / "trace.json") == slurp(dir / "b" / "trace.json"));
  CHECK(slurp(dir / "a" / "effective_config.txt") == slurp(dir / "b" / "effective_config.txt"));
}

TEST_CASE("demo runs green and its reports parse") {
  const fs::path dir = fresh_dir("pmfp_cli_demo");
  CHECK(run_demo((dir / "out").string(), std::nullopt, std::nullopt) == kExitOk);
  const auto cert = reports::certificate_from_json(
      slurp(dir / "out" / "demo_example_certificate.json"));
  CHECK(cert.status == SolveStatus::Converged);
  const auto probe =
      reports::probe_report_from_json(slurp(dir / "out" / "demo_boundary_probe.json"));
  CHECK(probe.distinct_points.size() == 2);
}

TEST_CASE("demo keeps its qualitative outcome at a tighter tolerance") {
  const fs::path dir = fresh_dir("pmfp_cli_demo_tight");
  CHECK(run_demo((dir / "out").string(), std::nullopt, 1e-12) == kExitOk);
  const auto cert = reports::certificate_from_json(
      slurp(dir / "out" / "demo_example_certificate.json"));
  CHECK(cert.status == SolveStatus::Converged);
  CHECK(cert.final_residual <= 1e-12);
  const auto probe =
      reports::probe_report_from_json(slurp(dir / "out" / "demo_boundary_probe.json"));
  CHECK(probe.distinct_points.size() == 2);
}

}  // TEST_SUITE
