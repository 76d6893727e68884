#pragma once

#include <compare>
#include <cstddef>
#include <string_view>

#include "pmfp/errors.hpp"

namespace pmfp {

// Which carrier set a point (or space) lives on.
enum class Carrier {
  MaxHalfline,  // [0, inf) with p(x,y) = max{x,y}
  MetricLift,   // [0, inf) with p = a named ordinary metric (zero self-distance)
  Tabulated,    // finite set {0,...,n-1} with p given by an n x n matrix
};

std::string_view carrier_name(Carrier c);

// An element of a carrier set. Points are tagged with their carrier kind;
// using a point with a space of a different kind is an input error, never a
// silent coercion.
class Point {
 public:
  static Point max_halfline(double value);
  static Point metric_lift(double value);
  static Point tabulated(std::size_t index);

  Carrier carrier() const { return carrier_; }
  bool is_index() const { return carrier_ == Carrier::Tabulated; }

  // Continuous carriers only.
  double value() const;
  // Tabulated carriers only.
  std::size_t index() const;

  // The raw coordinate fed to coupled maps: the value, or the index as a
  // double (exact for any practical table size).
  double scalar() const { return v_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.carrier_ == b.carrier_ && a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  Point(Carrier c, double v) : carrier_(c), v_(v) {}

  Carrier carrier_;
  double v_;
};

}  // namespace pmfp
