#include <benchmark/benchmark.h>

#include "pmfp/axiom_check.hpp"
#include "pmfp/sampling.hpp"
#include "pmfp/solver.hpp"

using namespace pmfp;

namespace {

void BM_SolveWorkedExample(benchmark::State& state) {
  const auto space = PartialMetricSpace::max_halfline();
  const auto f = CoupledMap::from_expr("(x + y) / 6");
  const ContractionSpec spec{Mode::MixedArg, 1.0 / 6.0, 1.0 / 6.0};
  for (auto _ : state) {
    auto r = solve(f, space, Point::max_halfline(1), Point::max_halfline(2), spec);
    benchmark::DoNotOptimize(r.certificate.final_residual);
  }
}
BENCHMARK(BM_SolveWorkedExample);

void BM_SolveWeightedSum(benchmark::State& state) {
  const auto space = PartialMetricSpace::metric_lift();
  const auto f = CoupledMap::weighted_sum(0.25, 0.0, 0.0);
  const ContractionSpec spec{Mode::SelfDisplacement, 1.0 / 3.0, 1.0 / 3.0};
  for (auto _ : state) {
    auto r = solve(f, space, Point::metric_lift(1), Point::metric_lift(2), spec);
    benchmark::DoNotOptimize(r.certificate.iterations);
  }
}
BENCHMARK(BM_SolveWeightedSum);

void BM_CheckAxiomsGrid(benchmark::State& state) {
  const auto space = PartialMetricSpace::max_halfline();
  const auto sample = default_sample(space, 42, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto report = check_axioms(space, sample);
    benchmark::DoNotOptimize(report.passed);
  }
  state.SetComplexityN(static_cast<int64_t>(sample.size()));
}
BENCHMARK(BM_CheckAxiomsGrid)->Arg(16)->Arg(32)->Arg(64)->Complexity(benchmark::oNCubed);

void BM_VerifyContraction(benchmark::State& state) {
  const auto space = PartialMetricSpace::max_halfline();
  const auto f = CoupledMap::from_expr("(x + y) / 6");
  const ContractionSpec spec{Mode::MixedArg, 1.0 / 6.0, 1.0 / 6.0};
  const auto quadruples = sample_quadruples(space, 42, 256);
  for (auto _ : state) {
    auto v = verify_contraction(f, space, spec, quadruples);
    benchmark::DoNotOptimize(v.size());
  }
}
BENCHMARK(BM_VerifyContraction);

void BM_ParseEval(benchmark::State& state) {
  for (auto _ : state) {
    const auto ast = expr::parse_expr("max(x, y) / 6 + min(x, y) * 0.125");
    benchmark::DoNotOptimize(expr::eval_expr(ast, 3.5, 1.25));
  }
}
BENCHMARK(BM_ParseEval);

}  // namespace

BENCHMARK_MAIN();
