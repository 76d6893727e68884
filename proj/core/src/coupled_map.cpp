#include "pmfp/coupled_map.hpp"

#include <cmath>
#include <sstream>

namespace pmfp {

CoupledMap CoupledMap::from_expr(std::string_view text) {
  return from_ast(expr::parse_expr(text));
}

CoupledMap CoupledMap::from_ast(expr::Ast ast) {
  std::string printed = expr::to_string(ast);
  return CoupledMap([ast = std::move(ast)](double x, double y) { return expr::eval_expr(ast, x, y); },
                    "expr:" + printed);
}

CoupledMap CoupledMap::weighted_sum(double a, double b, double c) {
  std::ostringstream os;
  os << "family:weighted_sum(" << a << ", " << b << ", " << c << ")";
  return CoupledMap([a, b, c](double x, double y) { return a * x + b * y + c; }, os.str());
}

CoupledMap CoupledMap::constant(double c) {
  std::ostringstream os;
  os << "family:constant(" << c << ")";
  return CoupledMap([c](double, double) { return c; }, os.str());
}

CoupledMap CoupledMap::custom(std::function<double(double, double)> fn, std::string label) {
  if (!fn) throw InputError("custom coupled map needs an evaluator");
  return CoupledMap(std::move(fn), "custom:" + label);
}

Point CoupledMap::apply(const PartialMetricSpace& space, const Point& x, const Point& y) const {
  if (x.carrier() != space.carrier() || y.carrier() != space.carrier()) {
    throw InputError("carrier mismatch between map arguments and space");
  }
  const double r = fn_(x.scalar(), y.scalar());
  switch (space.carrier()) {
    case Carrier::MaxHalfline:
    case Carrier::MetricLift:
      if (!std::isfinite(r) || r < 0.0) {
        throw DomainEscapeError("map left the carrier: F = " + std::to_string(r) + " on " +
                                std::string(carrier_name(space.carrier())));
      }
      return space.point(r);
    case Carrier::Tabulated: {
      const double n = static_cast<double>(space.size());
      if (!std::isfinite(r) || r != std::floor(r) || r < 0.0 || r >= n) {
        throw DomainEscapeError("map left the carrier: F = " + std::to_string(r) +
                                " is not an index in [0, " + std::to_string(space.size()) + ")");
      }
      return Point::tabulated(static_cast<std::size_t>(r));
    }
  }
  throw InputError("bad carrier");
}

}  // namespace pmfp
