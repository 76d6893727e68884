#include "pmfp/point.hpp"

#include <cmath>

namespace pmfp {

std::string_view carrier_name(Carrier c) {
  switch (c) {
    case Carrier::MaxHalfline: return "max_halfline";
    case Carrier::MetricLift: return "metric_lift";
    case Carrier::Tabulated: return "tabulated";
  }
  return "?";
}

namespace {

double require_halfline(double v, const char* what) {
  if (!std::isfinite(v)) throw InputError(std::string(what) + ": value must be finite");
  if (v < 0.0) throw InputError(std::string(what) + ": value must be nonnegative");
  return v;
}

}  // namespace

Point Point::max_halfline(double value) {
  return Point(Carrier::MaxHalfline, require_halfline(value, "max_halfline point"));
}

Point Point::metric_lift(double value) {
  return Point(Carrier::MetricLift, require_halfline(value, "metric_lift point"));
}

Point Point::tabulated(std::size_t index) {
  return Point(Carrier::Tabulated, static_cast<double>(index));
}

double Point::value() const {
  if (is_index()) throw InputError("point is an index into a tabulated carrier, not a value");
  return v_;
}

std::size_t Point::index() const {
  if (!is_index()) throw InputError("point is a continuous value, not a tabulated index");
  return static_cast<std::size_t>(v_);
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.carrier_ != b.carrier_) return a.carrier_ <=> b.carrier_;
  if (a.v_ < b.v_) return std::strong_ordering::less;
  if (a.v_ > b.v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace pmfp
