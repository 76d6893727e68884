#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmfp/contraction.hpp"
#include "pmfp/coupled_map.hpp"
#include "pmfp/space.hpp"

namespace pmfp::cli {

// A problem description read from a flat key-value file with dotted keys:
//
//   # comment
//   space.kind = max            # max | metric_lift | tabulated
//   space.metric = abs_diff     # metric_lift only: abs_diff | discrete
//   space.matrix = dist.txt     # tabulated only: matrix file path
//   map.expr = (x + y) / 6      # or map.family = weighted_sum | constant
//   map.a = 0.25                # weighted_sum: F = a*x + b*y + c
//   map.b = 0
//   map.c = 0                   # constant: F = c
//   start = 1 2                 # repeat the key for multiple starts
//   spec.mode = mixed_arg       # mixed_arg | self_displacement | cross_displacement
//   spec.k = 0.2
//   spec.l = 0.3
//   tol = 1e-9
//   axiom_tol = 1e-12
//   max_iters = 10000
//   divergence_cap = 1e12
//   seed = 42
//   sample.points = 64
//   sample.quadruples = 256
//
// Omitted numerics take the defaults above. Unknown keys are errors.
struct ProblemConfig {
  std::optional<std::string> space_kind;
  std::string space_metric = "abs_diff";
  std::optional<std::string> space_matrix;

  std::optional<std::string> map_expr;
  std::optional<std::string> map_family;
  double map_a = 0.0;
  double map_b = 0.0;
  double map_c = 0.0;

  std::vector<std::pair<double, double>> starts;

  std::optional<std::string> spec_mode;
  double spec_k = 0.0;
  double spec_l = 0.0;

  double tol = 1e-9;
  double axiom_tol = 1e-12;
  std::size_t max_iters = 10000;
  double divergence_cap = 1e12;
  std::uint64_t seed = 42;
  std::size_t sample_points = 64;
  std::size_t sample_quadruples = 256;
};

// Throws ConfigError with the offending line and key.
ProblemConfig parse_config_text(std::string_view text, const std::string& source_name);
ProblemConfig load_config(const std::filesystem::path& path);

// The config with all defaults filled in, serialized so that re-parsing it
// reproduces the exact same configuration. Deterministic byte-for-byte.
std::string effective_config_text(const ProblemConfig& cfg);

// Builders from the config to module inputs; throw ConfigError on missing or
// inconsistent sections. When `validated` is false a tabulated space skips
// the construction-time axiom gate (used by check-axioms, which wants to
// report violations rather than refuse the input).
PartialMetricSpace build_space(const ProblemConfig& cfg, bool validated);
CoupledMap build_map(const ProblemConfig& cfg);
std::optional<ContractionSpec> build_spec(const ProblemConfig& cfg);

}  // namespace pmfp::cli
