#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pmfp/point.hpp"

namespace pmfp {

class PartialMetricSpace;

// Deterministic uniform doubles from a seeded mt19937_64. The mapping from
// raw bits to [0,1) is spelled out here instead of going through
// uniform_real_distribution, so identical seeds give identical samples on
// every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : rng_(seed) {}

  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t next_u64() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

// Default point sample for axiom checks:
//   - tabulated carriers: every index, exhaustively;
//   - continuous carriers: the grid {0, 0.5, 1, ..., 5} plus `random_points`
//     seeded uniform draws from [0, 10).
std::vector<Point> default_sample(const PartialMetricSpace& space, std::uint64_t seed = 42,
                                  std::size_t random_points = 64);

}  // namespace pmfp
