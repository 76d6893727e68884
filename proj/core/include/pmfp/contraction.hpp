#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pmfp/coupled_map.hpp"
#include "pmfp/point.hpp"
#include "pmfp/space.hpp"

namespace pmfp {

// The three contractive conditions on p(F(x,y), F(u,v)):
//   MixedArg:          <= k p(x,u)      + l p(y,v),        requires k + l  < 1
//   SelfDisplacement:  <= k p(F(x,y),x) + l p(F(u,v),u),   requires k + l  < 1
//   CrossDisplacement: <= k p(F(x,y),u) + l p(F(u,v),x),   requires k + 2l < 1
enum class Mode { MixedArg, SelfDisplacement, CrossDisplacement };

std::string_view mode_name(Mode m);
Mode mode_from_name(std::string_view name);

struct ContractionSpec {
  Mode mode;
  double k = 0.0;
  double l = 0.0;
};

// Throws SpecInvalidError naming the violated constraint. The constraints
// are strict and checked with exact floating comparison: the boundary cases
// (k + l = 1 and so on) break uniqueness and must be excluded.
void validate_spec(const ContractionSpec& spec);
bool spec_is_valid(const ContractionSpec& spec) noexcept;

// The geometric decay rate of the residual sequence:
//   MixedArg -> k + l, SelfDisplacement -> k / (1 - l),
//   CrossDisplacement -> l / (1 - l - k).
// Always in [0, 1) for a valid spec.
double delta_of(const ContractionSpec& spec);

// Same mode with both constants replaced by their average (k + l) / 2. Any
// map satisfying the original inequality on all quadruples also satisfies
// the symmetrized one (add the inequality at (x,y,u,v) to the one at
// (u,v,x,y) and halve). Throws SpecInvalidError when the symmetrized
// constants violate the mode's constraint, which can happen only for
// CrossDisplacement with k + l >= 2/3.
ContractionSpec symmetrize(const ContractionSpec& spec);

struct Quadruple {
  Point x, y, u, v;
};

// A quadruple where lhs > rhs + tol for the mode's inequality.
struct ContractionViolation {
  Quadruple q;
  double lhs;
  double rhs;
};

// Evaluates the mode's inequality on every quadruple and returns the
// violations, in input order.
std::vector<ContractionViolation> verify_contraction(const CoupledMap& map,
                                                     const PartialMetricSpace& space,
                                                     const ContractionSpec& spec,
                                                     std::span<const Quadruple> quadruples,
                                                     double tol = 1e-9);

// Default quadruple sample: all ordered index quadruples for tabulated
// carriers up to 16 points (seeded random beyond that), `count` seeded
// random quadruples from [0, 10)^4 for continuous carriers.
std::vector<Quadruple> sample_quadruples(const PartialMetricSpace& space,
                                         std::uint64_t seed = 42, std::size_t count = 256);

}  // namespace pmfp
