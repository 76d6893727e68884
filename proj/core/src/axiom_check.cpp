#include "pmfp/axiom_check.hpp"

#include <algorithm>
#include <cmath>

namespace pmfp {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::P1: return "P1";
    case Axiom::P2: return "P2";
    case Axiom::P3: return "P3";
    case Axiom::P4: return "P4";
    case Axiom::ZeroImpliesEqual: return "ZERO_IMPLIES_EQUAL";
    case Axiom::PsTriangle: return "PS_TRIANGLE";
  }
  return "?";
}

Axiom axiom_from_name(std::string_view name) {
  if (name == "P1") return Axiom::P1;
  if (name == "P2") return Axiom::P2;
  if (name == "P3") return Axiom::P3;
  if (name == "P4") return Axiom::P4;
  if (name == "ZERO_IMPLIES_EQUAL") return Axiom::ZeroImpliesEqual;
  if (name == "PS_TRIANGLE") return Axiom::PsTriangle;
  throw InputError("unknown axiom name: " + std::string(name));
}

namespace {

using DistTable = std::vector<std::vector<double>>;

DistTable pair_table(const PartialMetricSpace& space, std::span<const Point> sample,
                     double (PartialMetricSpace::*dist)(const Point&, const Point&) const) {
  const std::size_t s = sample.size();
  DistTable t(s, std::vector<double>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) t[i][j] = (space.*dist)(sample[i], sample[j]);
  return t;
}

void require_sample(std::span<const Point> sample) {
  if (sample.empty()) throw InputError("axiom check needs a nonempty sample");
}

bool violation_less(const AxiomViolation& a, const AxiomViolation& b) {
  if (a.axiom != b.axiom) return a.axiom < b.axiom;
  return std::lexicographical_compare(a.witness.begin(), a.witness.end(), b.witness.begin(),
                                      b.witness.end());
}

AxiomReport finish(std::vector<AxiomViolation> violations, std::size_t sample_size) {
  std::sort(violations.begin(), violations.end(), violation_less);
  AxiomReport report;
  report.passed = violations.empty();
  report.violations = std::move(violations);
  report.sample_size = sample_size;
  return report;
}

}  // namespace

AxiomReport check_axioms(const PartialMetricSpace& space, std::span<const Point> sample,
                         double tol) {
  require_sample(sample);
  const std::size_t s = sample.size();
  const DistTable p = pair_table(space, sample, &PartialMetricSpace::eval);
  std::vector<AxiomViolation> out;

  // (p1) both directions, on unordered pairs.
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      const bool points_equal = sample[i] == sample[j];
      const bool sides_equal =
          std::abs(p[i][i] - p[i][j]) <= tol && std::abs(p[j][j] - p[i][j]) <= tol;
      if (points_equal && !sides_equal) {
        const double rhs = std::abs(p[i][i] - p[i][j]) > tol ? p[i][i] : p[j][j];
        out.push_back({Axiom::P1, {sample[i], sample[j]}, p[i][j], rhs});
      } else if (!points_equal && sides_equal) {
        out.push_back({Axiom::P1, {sample[i], sample[j]}, p[i][j], p[i][i]});
      }
    }
  }

  // (p2) on ordered pairs.
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      if (p[i][i] > p[i][j] + tol) {
        out.push_back({Axiom::P2, {sample[i], sample[j]}, p[i][i], p[i][j]});
      }
    }
  }

  // (p3) on unordered pairs.
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      if (std::abs(p[i][j] - p[j][i]) > tol) {
        out.push_back({Axiom::P3, {sample[i], sample[j]}, p[i][j], p[j][i]});
      }
    }
  }

  // (p4) on all ordered triples including repeats; the degenerate cases
  // (z = x or z = y) reduce to (p2) and catch sign errors.
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t m = 0; m < s; ++m) {
        const double rhs = p[i][m] + p[m][j] - p[m][m];
        if (p[i][j] > rhs + tol) {
          out.push_back({Axiom::P4, {sample[i], sample[j], sample[m]}, p[i][j], rhs});
        }
      }
    }
  }

  return finish(std::move(out), s);
}

AxiomReport check_zero_implies_equal(const PartialMetricSpace& space,
                                     std::span<const Point> sample, double tol) {
  require_sample(sample);
  const std::size_t s = sample.size();
  const DistTable p = pair_table(space, sample, &PartialMetricSpace::eval);
  std::vector<AxiomViolation> out;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      if (p[i][j] <= tol && !(sample[i] == sample[j])) {
        out.push_back({Axiom::ZeroImpliesEqual, {sample[i], sample[j]}, p[i][j], 0.0});
      }
    }
  }
  return finish(std::move(out), s);
}

AxiomReport check_induced_metric(const PartialMetricSpace& space,
                                 std::span<const Point> sample, double tol) {
  require_sample(sample);
  const std::size_t s = sample.size();
  const DistTable ps = pair_table(space, sample, &PartialMetricSpace::induced);
  std::vector<AxiomViolation> out;

  for (std::size_t i = 0; i < s; ++i) {
    if (std::abs(ps[i][i]) > tol) {
      out.push_back({Axiom::P1, {sample[i], sample[i]}, ps[i][i], 0.0});
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      if (std::abs(ps[i][j] - ps[j][i]) > tol) {
        out.push_back({Axiom::P3, {sample[i], sample[j]}, ps[i][j], ps[j][i]});
      }
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      if (ps[i][j] <= tol && !(sample[i] == sample[j])) {
        out.push_back({Axiom::ZeroImpliesEqual, {sample[i], sample[j]}, ps[i][j], 0.0});
      }
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t m = 0; m < s; ++m) {
        const double rhs = ps[i][m] + ps[m][j];
        if (ps[i][j] > rhs + tol) {
          out.push_back({Axiom::PsTriangle, {sample[i], sample[j], sample[m]}, ps[i][j], rhs});
        }
      }
    }
  }
  return finish(std::move(out), s);
}

AxiomReport merge_reports(std::span<const AxiomReport> reports) {
  AxiomReport merged;
  for (const AxiomReport& r : reports) {
    merged.violations.insert(merged.violations.end(), r.violations.begin(), r.violations.end());
    merged.sample_size = std::max(merged.sample_size, r.sample_size);
  }
  return finish(std::move(merged.violations), merged.sample_size);
}

}  // namespace pmfp
