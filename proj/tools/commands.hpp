#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pmfp::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;     // axiom or contraction violation found
inline constexpr int kExitStationary = 3;    // stationary point, no certificate
inline constexpr int kExitNoConvergence = 4; // max-iters, divergence, runtime failure
inline constexpr int kExitConfig = 64;       // config/usage problem

struct CliOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;      // solver tol; axiom tolerance for check-axioms
  std::optional<std::size_t> max_iters;
};

int run_check_axioms(const CliOptions& opts);
int run_verify(const CliOptions& opts);
int run_solve(const CliOptions& opts);
int run_probe(const CliOptions& opts);
// The built-in demonstration: the (x + y) / 6 certified solve and the
// (x + y) / 2 boundary case with two coexisting fixed points.
int run_demo(const std::string& out_dir, std::optional<std::uint64_t> seed,
             std::optional<double> tol);

}  // namespace pmfp::cli
