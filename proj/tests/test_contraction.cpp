#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pmfp/contraction.hpp"
#include "test_util.hpp"

using namespace pmfp;

namespace {

Quadruple quad(double x, double y, double u, double v) {
  return {Point::max_halfline(x), Point::max_halfline(y), Point::max_halfline(u),
          Point::max_halfline(v)};
}

// Rejection-sample a valid spec for the mode.
ContractionSpec random_valid_spec(test::Rng& rng, Mode mode) {
  for (;;) {
    const ContractionSpec s{mode, rng.uniform(0, 1), rng.uniform(0, 1)};
    if (spec_is_valid(s)) return s;
  }
}

}  // namespace

TEST_SUITE("contraction") {

TEST_CASE("constraints are strict") {
  CHECK_THROWS_AS(validate_spec({Mode::MixedArg, 0.5, 0.5}), SpecInvalidError);  // k+l = 1
  CHECK_NOTHROW(validate_spec({Mode::MixedArg, 0.5, 0.49}));
  CHECK_NOTHROW(validate_spec({Mode::CrossDisplacement, 0.2, 0.3}));  // k+2l = 0.8
  CHECK_THROWS_AS(validate_spec({Mode::CrossDisplacement, 0.4, 0.35}), SpecInvalidError);  // 1.1
  CHECK_THROWS_AS(validate_spec({Mode::SelfDisplacement, 1.0, 0.0}), SpecInvalidError);
  CHECK_THROWS_AS(validate_spec({Mode::MixedArg, -0.1, 0.5}), SpecInvalidError);
  CHECK_THROWS_AS(validate_spec({Mode::MixedArg, std::nan(""), 0.1}), SpecInvalidError);
  CHECK_NOTHROW(validate_spec({Mode::MixedArg, 0.0, 0.0}));
}

TEST_CASE("rates per mode") {
  // k = l = 1/6 gives the equal-constant condition with total 1/3, exactly
  CHECK(delta_of({Mode::MixedArg, 1.0 / 6.0, 1.0 / 6.0}) == 1.0 / 3.0);
  CHECK(delta_of({Mode::SelfDisplacement, 0.2, 0.5}) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(delta_of({Mode::CrossDisplacement, 0.2, 0.3}) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(delta_of({Mode::MixedArg, 0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(delta_of({Mode::MixedArg, 0.6, 0.6}), SpecInvalidError);
}

TEST_CASE("valid specs always have delta below one") {
  test::Rng rng(101);
  for (Mode mode : {Mode::MixedArg, Mode::SelfDisplacement, Mode::CrossDisplacement}) {
    for (int i = 0; i < 500; ++i) {
      const auto s = random_valid_spec(rng, mode);
      const double d = delta_of(s);
      CAPTURE(s.k);
      CAPTURE(s.l);
      CHECK(d >= 0.0);
      CHECK(d < 1.0);
    }
  }
}

TEST_CASE("symmetrize averages the constants") {
  const auto s = symmetrize({Mode::SelfDisplacement, 0.2, 0.5});
  CHECK(s.k == 0.35);
  CHECK(s.l == 0.35);

  const auto c = symmetrize({Mode::CrossDisplacement, 0.2, 0.3});
  CHECK(c.k == 0.25);
  CHECK(c.l == 0.25);
  CHECK_NOTHROW(validate_spec(c));  // 0.25 + 0.5 < 1

  const auto m = symmetrize({Mode::MixedArg, 0.1, 0.5});
  CHECK(m.k == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(m.l == m.k);
}

TEST_CASE("symmetrize rejects cross specs with k + l >= 2/3") {
  // valid cross spec (k + 2l = 0.9 < 1) whose average breaks k + 2l < 1
  CHECK_THROWS_AS(symmetrize({Mode::CrossDisplacement, 0.5, 0.2}), SpecInvalidError);
  test::Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_valid_spec(rng, Mode::CrossDisplacement);
    if (s.k + s.l >= 2.0 / 3.0) {
      CHECK_THROWS_AS(symmetrize(s), SpecInvalidError);
    } else {
      const auto sym = symmetrize(s);
      CHECK(spec_is_valid(sym));
      CHECK(delta_of(sym) < 1.0);
    }
  }
}

TEST_CASE("symmetrize keeps the mixed-arg rate and the validity of the others") {
  test::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto m = random_valid_spec(rng, Mode::MixedArg);
    // halving and re-adding equal halves is exact
    CHECK(delta_of(symmetrize(m)) == delta_of(m));

    const auto s = random_valid_spec(rng, Mode::SelfDisplacement);
    const auto sym = symmetrize(s);
    CHECK(spec_is_valid(sym));
    const double d = delta_of(sym);
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
  }
}

TEST_CASE("verify_contraction on the worked example map") {
  const auto space = PartialMetricSpace::max_halfline();
  const auto f = CoupledMap::from_expr("(x + y) / 6");
  const ContractionSpec spec{Mode::MixedArg, 1.0 / 6.0, 1.0 / 6.0};
  const auto quadruples = sample_quadruples(space, 42, 256);
  CHECK(verify_contraction(f, space, spec, quadruples).empty());
}

TEST_CASE("verify_contraction reports a concrete violation") {
  const auto space = PartialMetricSpace::max_halfline();
  const auto f = CoupledMap::from_expr("(x + y) / 2");
  const ContractionSpec spec{Mode::MixedArg, 0.4, 0.4};
  const std::vector<Quadruple> qs = {quad(1, 1, 0, 0)};
  const auto violations = verify_contraction(f, space, spec, qs);
  REQUIRE(violations.size() == 1);
  // lhs = p(F(1,1), F(0,0)) = p(1, 0) = 1; rhs = 0.4*p(1,0) + 0.4*p(1,0) = 0.8
  CHECK(violations[0].lhs == 1.0);
  CHECK(violations[0].rhs == 0.8);
}

TEST_CASE("constant maps satisfy the zero spec on a metric lift") {
  const auto space = PartialMetricSpace::metric_lift();
  const auto f = CoupledMap::constant(3.0);
  const auto quadruples = sample_quadruples(space, 7, 64);
  CHECK(verify_contraction(f, space, {Mode::MixedArg, 0.0, 0.0}, quadruples).empty());
}

TEST_CASE("self-displacement rhs uses the displacements") {
  const auto space = PartialMetricSpace::metric_lift();
  const auto f = CoupledMap::from_expr("x / 4");
  // p(F(x,y), F(u,v)) = |x-u|/4 <= (3/4)(x+u)/3 holds with k = l = 1/3
  const ContractionSpec spec{Mode::SelfDisplacement, 1.0 / 3.0, 1.0 / 3.0};
  const auto quadruples = sample_quadruples(space, 42, 256);
  CHECK(verify_contraction(f, space, spec, quadruples).empty());
  // with constants below 1/3 the inequality breaks somewhere
  const ContractionSpec weak{Mode::SelfDisplacement, 0.05, 0.05};
  CHECK_FALSE(verify_contraction(f, space, weak, quadruples).empty());
}

TEST_CASE("cross-displacement rhs uses the crossed displacements") {
  const auto space = PartialMetricSpace::max_halfline();
  const auto f = CoupledMap::constant(2.0);
  // lhs = p(2,2) = 2; rhs = k*p(F,u) + l*p(F,x) = k*max(2,u) + l*max(2,x)
  const std::vector<Quadruple> qs = {quad(0, 0, 0, 0)};
  const auto violations =
      verify_contraction(f, space, {Mode::CrossDisplacement, 0.3, 0.3}, qs);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].lhs == 2.0);
  CHECK(violations[0].rhs == doctest::Approx(1.2).epsilon(1e-15));
}

TEST_CASE("verification is monotone in the constants") {
  const auto space = PartialMetricSpace::max_halfline();
  const auto f = CoupledMap::from_expr("(x + y) / 3");
  const auto quadruples = sample_quadruples(space, 5, 128);
  test::Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    auto small = random_valid_spec(rng, Mode::MixedArg);
    auto large = small;
    // grow within validity
    large.k += rng.uniform(0, 1.0 - (small.k + small.l)) / 2;
    large.l += rng.uniform(0, 1.0 - (large.k + small.l)) / 2;
    if (!spec_is_valid(large)) continue;
    const auto v_small = verify_contraction(f, space, small, quadruples);
    const auto v_large = verify_contraction(f, space, large, quadruples);
    CHECK(v_large.size() <= v_small.size());
  }
}

TEST_CASE("a clean verification stays clean after symmetrize plus swap") {
  const auto space = PartialMetricSpace::metric_lift();
  const auto f = CoupledMap::from_expr("x / 4");
  const ContractionSpec spec{Mode::SelfDisplacement, 0.4, 1.0 / 3.0};
  auto quadruples = sample_quadruples(space, 42, 128);
  REQUIRE(verify_contraction(f, space, spec, quadruples).empty());

  std::vector<Quadruple> with_swaps = quadruples;
  for (const Quadruple& q : quadruples) with_swaps.push_back({q.u, q.v, q.x, q.y});
  CHECK(verify_contraction(f, space, symmetrize(spec), with_swaps).empty());
}

TEST_CASE("tabulated quadruple sampling is exhaustive for small tables") {
  const auto space = PartialMetricSpace::tabulated({{1, 3}, {3, 2}});
  CHECK(sample_quadruples(space, 42).size() == 16);
}

}  // TEST_SUITE
