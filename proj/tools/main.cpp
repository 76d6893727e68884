#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, pmfp::cli::CliOptions& opts, bool needs_config = true) {
  auto* config = cmd->add_option("--config", opts.config_path, "problem config file");
  if (needs_config) config->required();
  cmd->add_option("--out", opts.out_dir, "directory for report files (default .)");
  cmd->add_option("--seed", opts.seed, "override the sampling seed");
  cmd->add_option("--tol", opts.tol, "override the tolerance");
  cmd->add_option("--max-iters", opts.max_iters, "override the iteration cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled fixed-point toolkit on partial metric spaces"};
  app.require_subcommand(1);

  pmfp::cli::CliOptions check_opts, verify_opts, solve_opts, probe_opts;
  std::string demo_out = ".";
  std::optional<std::uint64_t> demo_seed;
  std::optional<double> demo_tol;

  auto* check = app.add_subcommand("check-axioms", "validate a space against the axioms");
  add_common(check, check_opts);
  auto* verify = app.add_subcommand("verify", "check a contractive condition on samples");
  add_common(verify, verify_opts);
  auto* solve = app.add_subcommand("solve", "run the coupled Picard iteration");
  add_common(solve, solve_opts);
  auto* probe = app.add_subcommand("probe", "solve from several starts and cluster the limits");
  add_common(probe, probe_opts);
  auto* demo = app.add_subcommand("demo", "the built-in worked example and counterexample");
  demo->add_option("--out", demo_out, "directory for report files (default .)");
  demo->add_option("--seed", demo_seed, "override the sampling seed");
  demo->add_option("--tol", demo_tol, "override the tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the usage error
    return e.get_exit_code() == 0 ? 0 : pmfp::cli::kExitConfig;
  }

  if (check->parsed()) return pmfp::cli::run_check_axioms(check_opts);
  if (verify->parsed()) return pmfp::cli::run_verify(verify_opts);
  if (solve->parsed()) return pmfp::cli::run_solve(solve_opts);
  if (probe->parsed()) return pmfp::cli::run_probe(probe_opts);
  return pmfp::cli::run_demo(demo_out, demo_seed, demo_tol);
}
