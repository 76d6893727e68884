#include "pmfp/sampling.hpp"

#include "pmfp/space.hpp"

namespace pmfp {

std::vector<Point> default_sample(const PartialMetricSpace& space, std::uint64_t seed,
                                  std::size_t random_points) {
  std::vector<Point> sample;
  if (space.carrier() == Carrier::Tabulated) {
    sample.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) sample.push_back(Point::tabulated(i));
    return sample;
  }
  sample.reserve(11 + random_points);
  for (int i = 0; i <= 10; ++i) sample.push_back(space.point(0.5 * i));
  SampleRng rng(seed);
  for (std::size_t i = 0; i < random_points; ++i) sample.push_back(space.point(rng.uniform(0.0, 10.0)));
  return sample;
}

}  // namespace pmfp
