#include "pmfp/space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pmfp/axiom_check.hpp"

namespace pmfp {

std::string_view base_metric_name(BaseMetric m) {
  switch (m) {
    case BaseMetric::AbsDiff: return "abs_diff";
    case BaseMetric::Discrete: return "discrete";
  }
  return "?";
}

BaseMetric base_metric_from_name(std::string_view name) {
  if (name == "abs_diff") return BaseMetric::AbsDiff;
  if (name == "discrete") return BaseMetric::Discrete;
  throw InputError("unknown base metric: " + std::string(name));
}

namespace {

void require_square_nonnegative(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("tabulated matrix must have at least one row");
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("tabulated matrix must be square");
    for (double v : row) {
      if (!std::isfinite(v)) throw InputError("tabulated matrix entries must be finite");
      if (v < 0.0) throw InputError("tabulated matrix entries must be nonnegative");
    }
  }
}

std::string describe_witness(const AxiomViolation& v) {
  std::ostringstream os;
  os << axiom_name(v.axiom) << " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) os << ", ";
    os << v.witness[i].index();
  }
  os << "): lhs = " << v.lhs << ", rhs = " << v.rhs;
  return os.str();
}

}  // namespace

PartialMetricSpace PartialMetricSpace::max_halfline() {
  return PartialMetricSpace(Carrier::MaxHalfline, "max_halfline");
}

PartialMetricSpace PartialMetricSpace::metric_lift(BaseMetric metric) {
  PartialMetricSpace s(Carrier::MetricLift,
                       "metric_lift(" + std::string(base_metric_name(metric)) + ")");
  s.base_metric_ = metric;
  return s;
}

PartialMetricSpace PartialMetricSpace::tabulated_unchecked(Matrix matrix) {
  require_square_nonnegative(matrix);
  PartialMetricSpace s(Carrier::Tabulated, "tabulated");
  s.matrix_ = std::move(matrix);
  s.validated_ = false;
  return s;
}

PartialMetricSpace PartialMetricSpace::tabulated(Matrix matrix) {
  PartialMetricSpace s = tabulated_unchecked(std::move(matrix));
  std::vector<Point> all;
  all.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) all.push_back(Point::tabulated(i));
  AxiomReport report = check_axioms(s, all);
  if (!report.passed) {
    throw AxiomViolationError("tabulated matrix is not a partial metric: " +
                              describe_witness(report.violations.front()));
  }
  s.validated_ = true;
  return s;
}

PartialMetricSpace PartialMetricSpace::candidate(std::function<double(double, double)> fn,
                                                 std::string label) {
  if (!fn) throw InputError("candidate space needs an evaluator");
  PartialMetricSpace s(Carrier::MaxHalfline, "candidate(" + label + ")");
  s.custom_ = std::move(fn);
  s.validated_ = false;
  return s;
}

std::size_t PartialMetricSpace::size() const {
  if (carrier_ != Carrier::Tabulated) throw InputError("size() is for tabulated carriers");
  return matrix_.size();
}

const Matrix& PartialMetricSpace::matrix() const {
  if (carrier_ != Carrier::Tabulated) throw InputError("matrix() is for tabulated carriers");
  return matrix_;
}

double PartialMetricSpace::eval(const Point& x, const Point& y) const {
  if (x.carrier() != carrier_ || y.carrier() != carrier_) {
    throw InputError("carrier mismatch: " + std::string(carrier_name(x.carrier())) + "/" +
                     std::string(carrier_name(y.carrier())) + " point(s) in a " +
                     std::string(carrier_name(carrier_)) + " space");
  }
  double p = 0.0;
  switch (carrier_) {
    case Carrier::MaxHalfline:
      p = custom_ ? custom_(x.value(), y.value()) : std::max(x.value(), y.value());
      break;
    case Carrier::MetricLift:
      if (custom_) {
        p = custom_(x.value(), y.value());
      } else if (base_metric_ == BaseMetric::AbsDiff) {
        p = std::abs(x.value() - y.value());
      } else {
        p = x.value() == y.value() ? 0.0 : 1.0;
      }
      break;
    case Carrier::Tabulated: {
      const std::size_t i = x.index(), j = y.index();
      const std::size_t n = matrix_.size();
      if (i >= n || j >= n) {
        throw InputError("tabulated index out of range: size " + std::to_string(n));
      }
      p = matrix_[i][j];
      break;
    }
  }
  if (!std::isfinite(p)) {
    throw NonFiniteError("distance evaluator returned a non-finite value in " + label_);
  }
  return p;
}

double PartialMetricSpace::induced(const Point& x, const Point& y) const {
  return 2.0 * eval(x, y) - eval(x, x) - eval(y, y);
}

Point PartialMetricSpace::point(double scalar) const {
  switch (carrier_) {
    case Carrier::MaxHalfline: return Point::max_halfline(scalar);
    case Carrier::MetricLift: return Point::metric_lift(scalar);
    case Carrier::Tabulated:
      if (!std::isfinite(scalar) || scalar != std::floor(scalar) || scalar < 0.0 ||
          scalar >= static_cast<double>(matrix_.size())) {
        throw InputError("tabulated point must be an integer index in [0, " +
                         std::to_string(matrix_.size()) + ")");
      }
      return Point::tabulated(static_cast<std::size_t>(scalar));
  }
  throw InputError("bad carrier");
}

Matrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path.string());
  long long n = 0;
  if (!(in >> n)) throw InputError("matrix file must start with the size n");
  if (n <= 0) throw InputError("matrix size must be positive");
  Matrix m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& row : m) {
    for (double& v : row) {
      if (!(in >> v)) throw InputError("matrix file ended early or has a non-numeric entry");
    }
  }
  std::string rest;
  if (in >> rest) throw InputError("trailing content after the matrix: '" + rest + "'");
  require_square_nonnegative(m);
  return m;
}

}  // namespace pmfp
