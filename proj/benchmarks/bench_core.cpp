#include <benchmark/benchmark.h>

#include "clusterf/explorer.hpp"
#include "clusterf/invariant.hpp"
#include "clusterf/principal.hpp"
#include "clusterf/verifier.hpp"

using namespace clusterf;

namespace {

// (1 + x1 + x2 + x3)^d
LaurentPoly dense(std::size_t d) {
  const auto base = LaurentPoly::from_terms(3, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  return base.pow(d);
}

MutationSequence alternating(std::size_t n, std::size_t len) {
  std::vector<std::size_t> steps;
  for (std::size_t i = 0; i < len; ++i) steps.push_back(i % n);
  return MutationSequence(steps);
}

}  // namespace

static void BM_PolyMultiply(benchmark::State& state) {
  const auto a = dense(state.range(0));
  const auto b = dense(state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->DenseRange(2, 8, 2);

static void BM_PolyExactDivide(benchmark::State& state) {
  const auto a = dense(state.range(0));
  const auto b = dense(3);
  const auto prod = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(poly_divide_exact(prod, b));
}
BENCHMARK(BM_PolyExactDivide)->DenseRange(2, 8, 2);

static void BM_TropicalEval(benchmark::State& state) {
  const auto f = dense(state.range(0));
  const IntVector r{-2, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(tropical_eval(f, r));
}
BENCHMARK(BM_TropicalEval)->Arg(4)->Arg(16)->Arg(32);

static void BM_SeedWalk(benchmark::State& state) {
  const auto b = *gallery_matrix("Markov");
  const auto path = alternating(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_sequence(Seed::root(b), path));
}
BENCHMARK(BM_SeedWalk)->DenseRange(2, 6, 1);

static void BM_PrincipalWalk(benchmark::State& state) {
  const auto b = *gallery_matrix("Markov");
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto s = PrincipalSeed::make_root(b);
    for (std::size_t i = 0; i < len; ++i) s = mutate_principal(s, i % 3);
    benchmark::DoNotOptimize(f_polynomial_of(s, (len - 1) % 3));
  }
}
BENCHMARK(BM_PrincipalWalk)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_Explore(benchmark::State& state, const char* name) {
  const auto b = *gallery_matrix(name);
  for (auto _ : state) benchmark::DoNotOptimize(explore(b).nodes.size());
}
BENCHMARK_CAPTURE(BM_Explore, A3, "A3");
BENCHMARK_CAPTURE(BM_Explore, G2, "G2");
BENCHMARK_CAPTURE(BM_Explore, C3, "C3")->Unit(benchmark::kMillisecond);

static void BM_FInvariant(benchmark::State& state) {
  const auto b = *gallery_matrix("G2");
  const auto vars = distinct_variables(b, 8);
  for (auto _ : state) {
    clear_pattern_caches();
    std::int64_t total = 0;
    for (const auto& u : vars)
      for (const auto& v : vars) total += f_invariant(b, u, v, {}, std::nullopt).value;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_FInvariant)->Unit(benchmark::kMillisecond);

static void BM_Suite(benchmark::State& state, const char* suite) {
  SuiteConfig c{*gallery_matrix("B2")};
  c.depth = 4;
  c.trials = 50;
  for (auto _ : state) {
    clear_pattern_caches();
    benchmark::DoNotOptimize(run_suite(suite, c).assertions);
  }
}
BENCHMARK_CAPTURE(BM_Suite, involution, "involution")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, f_exchange, "f-exchange")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, finv_recurrence, "finv-recurrence")->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
