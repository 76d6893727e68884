#include "pmfp/contraction.hpp"

#include <cmath>
#include <sstream>

#include "pmfp/sampling.hpp"

namespace pmfp {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::MixedArg: return "MIXED_ARG";
    case Mode::SelfDisplacement: return "SELF_DISPLACEMENT";
    case Mode::CrossDisplacement: return "CROSS_DISPLACEMENT";
  }
  return "?";
}

Mode mode_from_name(std::string_view name) {
  if (name == "MIXED_ARG" || name == "mixed_arg") return Mode::MixedArg;
  if (name == "SELF_DISPLACEMENT" || name == "self_displacement") return Mode::SelfDisplacement;
  if (name == "CROSS_DISPLACEMENT" || name == "cross_displacement")
    return Mode::CrossDisplacement;
  throw InputError("unknown contraction mode: " + std::string(name));
}

void validate_spec(const ContractionSpec& spec) {
  if (!std::isfinite(spec.k) || !std::isfinite(spec.l) || spec.k < 0.0 || spec.l < 0.0) {
    throw SpecInvalidError("contraction constants must be finite and nonnegative");
  }
  std::ostringstream os;
  switch (spec.mode) {
    case Mode::MixedArg:
    case Mode::SelfDisplacement:
      if (spec.k + spec.l < 1.0) return;
      os << mode_name(spec.mode) << " requires k + l < 1, got k + l = " << spec.k + spec.l;
      break;
    case Mode::CrossDisplacement:
      if (spec.k + 2.0 * spec.l < 1.0) return;
      os << "CROSS_DISPLACEMENT requires k + 2l < 1, got k + 2l = " << spec.k + 2.0 * spec.l;
      break;
  }
  throw SpecInvalidError(os.str());
}

bool spec_is_valid(const ContractionSpec& spec) noexcept {
  if (!std::isfinite(spec.k) || !std::isfinite(spec.l) || spec.k < 0.0 || spec.l < 0.0)
    return false;
  if (spec.mode == Mode::CrossDisplacement) return spec.k + 2.0 * spec.l < 1.0;
  return spec.k + spec.l < 1.0;
}

double delta_of(const ContractionSpec& spec) {
  validate_spec(spec);
  switch (spec.mode) {
    case Mode::MixedArg: return spec.k + spec.l;
    case Mode::SelfDisplacement: return spec.k / (1.0 - spec.l);
    case Mode::CrossDisplacement: return spec.l / (1.0 - spec.l - spec.k);
  }
  throw SpecInvalidError("bad mode");
}

ContractionSpec symmetrize(const ContractionSpec& spec) {
  validate_spec(spec);
  const double avg = (spec.k + spec.l) / 2.0;
  const ContractionSpec out{spec.mode, avg, avg};
  validate_spec(out);
  return out;
}

std::vector<ContractionViolation> verify_contraction(const CoupledMap& map,
                                                     const PartialMetricSpace& space,
                                                     const ContractionSpec& spec,
                                                     std::span<const Quadruple> quadruples,
                                                     double tol) {
  validate_spec(spec);
  std::vector<ContractionViolation> out;
  for (const Quadruple& q : quadruples) {
    const Point fxy = map.apply(space, q.x, q.y);
    const Point fuv = map.apply(space, q.u, q.v);
    const double lhs = space.eval(fxy, fuv);
    double rhs = 0.0;
    switch (spec.mode) {
      case Mode::MixedArg:
        rhs = spec.k * space.eval(q.x, q.u) + spec.l * space.eval(q.y, q.v);
        break;
      case Mode::SelfDisplacement:
        rhs = spec.k * space.eval(fxy, q.x) + spec.l * space.eval(fuv, q.u);
        break;
      case Mode::CrossDisplacement:
        rhs = spec.k * space.eval(fxy, q.u) + spec.l * space.eval(fuv, q.x);
        break;
    }
    if (lhs > rhs + tol) out.push_back({q, lhs, rhs});
  }
  return out;
}

std::vector<Quadruple> sample_quadruples(const PartialMetricSpace& space, std::uint64_t seed,
                                         std::size_t count) {
  std::vector<Quadruple> out;
  if (space.carrier() == Carrier::Tabulated) {
    const std::size_t n = space.size();
    if (n <= 16) {
      out.reserve(n * n * n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d)
              out.push_back({Point::tabulated(a), Point::tabulated(b), Point::tabulated(c),
                             Point::tabulated(d)});
      return out;
    }
    SampleRng rng(seed);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto draw = [&] { return Point::tabulated(rng.next_u64() % n); };
      Point x = draw(), y = draw(), u = draw(), v = draw();
      out.push_back({x, y, u, v});
    }
    return out;
  }
  SampleRng rng(seed);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto draw = [&] { return space.point(rng.uniform(0.0, 10.0)); };
    Point x = draw(), y = draw(), u = draw(), v = draw();
    out.push_back({x, y, u, v});
  }
  return out;
}

}  // namespace pmfp
