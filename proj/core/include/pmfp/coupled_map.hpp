#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "pmfp/exprmap.hpp"
#include "pmfp/point.hpp"
#include "pmfp/space.hpp"

namespace pmfp {

// A deterministic evaluator for F : X x X -> X. The map itself works on raw
// coordinates; apply() converts the result back into the space's carrier and
// throws DomainEscapeError when it does not land there (negative or
// non-finite value on a continuous carrier, non-integer or out-of-range
// result on a tabulated one).
class CoupledMap {
 public:
  // Parses `text` with the exprmap grammar.
  static CoupledMap from_expr(std::string_view text);
  static CoupledMap from_ast(expr::Ast ast);
  // F(x,y) = a*x + b*y + c.
  static CoupledMap weighted_sum(double a, double b, double c = 0.0);
  // F(x,y) = c.
  static CoupledMap constant(double c);
  // Arbitrary function, labeled for provenance.
  static CoupledMap custom(std::function<double(double, double)> fn, std::string label);

  double raw(double x, double y) const { return fn_(x, y); }
  Point apply(const PartialMetricSpace& space, const Point& x, const Point& y) const;

  // "expr:(x + y) / 6", "family:weighted_sum(...)", "custom:<label>".
  const std::string& provenance() const { return provenance_; }

 private:
  CoupledMap(std::function<double(double, double)> fn, std::string provenance)
      : fn_(std::move(fn)), provenance_(std::move(provenance)) {}

  std::function<double(double, double)> fn_;
  std::string provenance_;
};

}  // namespace pmfp
