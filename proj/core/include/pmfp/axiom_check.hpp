#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pmfp/space.hpp"

namespace pmfp {

// What a violation record is about. P1-P4 are the partial-metric axioms of
// the distance p itself. In reports produced by check_induced_metric the
// labels refer to the corresponding property of p^s: P1 for p^s(x,x) = 0,
// P3 for p^s symmetry, ZERO_IMPLIES_EQUAL for p^s(x,y) = 0 => x = y, and
// PS_TRIANGLE for the ordinary triangle inequality.
enum class Axiom {
  P1,
  P2,
  P3,
  P4,
  ZeroImpliesEqual,
  PsTriangle,
};

std::string_view axiom_name(Axiom a);
Axiom axiom_from_name(std::string_view name);

// One concrete counterexample. Witness tuples are ordered like the axiom is
// written: pairs are (x, y); triples are (x, y, z) with z the midpoint, so a
// (p4) record reads lhs = p(x,y), rhs = p(x,z) + p(z,y) - p(z,z). lhs and
// rhs are reproducible bit-for-bit by re-evaluating the space at the witness.
struct AxiomViolation {
  Axiom axiom;
  std::vector<Point> witness;
  double lhs;
  double rhs;
};

struct AxiomReport {
  bool passed = true;                     // <=> violations.empty()
  std::vector<AxiomViolation> violations; // sorted by (axiom, witness)
  std::size_t sample_size = 0;
};

// Evaluates (p1) on all pairs (both directions of the biconditional, the
// equality sides within tol), (p2) and (p3) on all pairs, and (p4) on all
// ordered triples including repeats. Returns every violation found.
AxiomReport check_axioms(const PartialMetricSpace& space, std::span<const Point> sample,
                         double tol = 1e-12);

// For every pair with p(x,y) <= tol, asserts the points are equal.
AxiomReport check_zero_implies_equal(const PartialMetricSpace& space,
                                     std::span<const Point> sample, double tol = 1e-12);

// Verifies that p^s is a metric on the sample: symmetric, zero on the
// diagonal, zero only on the diagonal, and triangle on all ordered triples.
AxiomReport check_induced_metric(const PartialMetricSpace& space,
                                 std::span<const Point> sample, double tol = 1e-12);

// Union of several reports over the same sample.
AxiomReport merge_reports(std::span<const AxiomReport> reports);

}  // namespace pmfp
