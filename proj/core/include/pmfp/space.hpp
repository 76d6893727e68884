#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pmfp/point.hpp"

namespace pmfp {

// Named ordinary metrics available for the MetricLift carrier.
enum class BaseMetric {
  AbsDiff,   // d(x,y) = |x - y|
  Discrete,  // d(x,y) = 0 if x == y else 1
};

std::string_view base_metric_name(BaseMetric m);
BaseMetric base_metric_from_name(std::string_view name);

using Matrix = std::vector<std::vector<double>>;

// A carrier set together with a distance evaluator p claimed to satisfy the
// partial-metric axioms (p1)-(p4):
//   (p1) x = y  <=>  p(x,x) = p(x,y) = p(y,y)
//   (p2) p(x,x) <= p(x,y)
//   (p3) p(x,y) = p(y,x)
//   (p4) p(x,y) <= p(x,z) + p(z,y) - p(z,z)
//
// The built-in continuous carriers satisfy the axioms analytically and are
// never rejected. Tabulated spaces are checked exhaustively at construction
// (O(n^3) for (p4)); `tabulated_unchecked` and `candidate` skip that gate so
// that the axiom checker has raw material to report on.
class PartialMetricSpace {
 public:
  static PartialMetricSpace max_halfline();
  static PartialMetricSpace metric_lift(BaseMetric metric = BaseMetric::AbsDiff);
  // Validates the matrix against (p1)-(p4); throws AxiomViolationError with
  // the first witness on failure, InputError on a malformed matrix.
  static PartialMetricSpace tabulated(Matrix matrix);
  // Shape-checked only; axioms may not hold. For validation workflows.
  static PartialMetricSpace tabulated_unchecked(Matrix matrix);
  // An arbitrary distance candidate on a continuous carrier, for validation
  // workflows and tests. No axioms are assumed.
  static PartialMetricSpace candidate(std::function<double(double, double)> fn,
                                      std::string label);

  Carrier carrier() const { return carrier_; }
  // Tabulated carriers only: number of points.
  std::size_t size() const;
  // True when construction ran (or did not need) the axiom gate.
  bool validated() const { return validated_; }
  const std::string& label() const { return label_; }
  const Matrix& matrix() const;

  // p(x,y). Throws InputError on carrier mismatch or out-of-range index,
  // NonFiniteError if the evaluator returns a non-finite value.
  double eval(const Point& x, const Point& y) const;

  // p^s(x,y) = 2 p(x,y) - p(x,x) - p(y,y), computed exactly in that order.
  double induced(const Point& x, const Point& y) const;

  // A point of this space's carrier kind from a raw coordinate; bounds are
  // not checked here (eval does that).
  Point point(double scalar) const;

 private:
  PartialMetricSpace(Carrier c, std::string label) : carrier_(c), label_(std::move(label)) {}

  Carrier carrier_;
  std::string label_;
  BaseMetric base_metric_ = BaseMetric::AbsDiff;
  Matrix matrix_;
  std::function<double(double, double)> custom_;
  bool validated_ = true;
};

// Reads a tabulated matrix from a plain-text file: first line n, then n rows
// of n nonnegative decimals, whitespace-separated.
Matrix load_matrix(const std::filesystem::path& path);

}  // namespace pmfp
