#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lgdual/adc.hpp"
#include "lgdual/draft.hpp"
#include "lgdual/lgroup.hpp"
#include "lgdual/pwl.hpp"

using namespace lgdual;

namespace {

Rat random_rat(std::mt19937_64& rng, long lo, long hi, long max_den) {
  long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  long p = std::uniform_int_distribution<long>(lo * q, hi * q)(rng);
  return Rat{Int(p), Int(q)};
}

FinASpace unit_space(std::size_t n) {
  std::vector<FinASpace::Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({"x" + std::to_string(i), DivNat(1ul)});
  return FinASpace(std::move(pts));
}

void BM_AdcMembership(benchmark::State& state) {
  std::mt19937_64 rng(7);
  RatRegion region;
  for (long i = 0; i < state.range(0); ++i) {
    Rat a = random_rat(rng, 0, 1, 40);
    Rat b = random_rat(rng, 0, 1, 40);
    region.add_interval(min(a, b), max(a, b));
  }
  AdcSet s = adc(region);
  unsigned long n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(adc_contains(s, DivNat(n)));
    n = n % 1000 + 1;
  }
}
BENCHMARK(BM_AdcMembership)->Arg(1)->Arg(8)->Arg(64);

void BM_AdcOfRegion(benchmark::State& state) {
  std::mt19937_64 rng(11);
  RatRegion region;
  for (long i = 0; i < state.range(0); ++i) {
    Rat a = random_rat(rng, 0, 1, 40);
    Rat b = random_rat(rng, 0, 1, 40);
    region.add_interval(min(a, b), max(a, b));
  }
  for (auto _ : state) benchmark::DoNotOptimize(adc(region));
}
BENCHMARK(BM_AdcOfRegion)->Arg(1)->Arg(8)->Arg(64);

void BM_RefineSequence(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<FinASpace::Point> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({"x" + std::to_string(i), DivNat(static_cast<unsigned long>(i % 4))});
  FinASpace x(std::move(pts));
  PointSet a = x.none();
  PointSet b = x.none();
  for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? a : b).insert(i);
  Draft d{x, Rat(0), Rat(1), {}};
  d.levels.emplace(Rat(0), Level{a, x.all()});
  d.levels.emplace(Rat(1), Level{x.all(), b});
  std::vector<Rat> lambdas;
  for (long k = 1; k < 16; ++k) lambdas.push_back(Rat{Int(k), Int(16)});
  for (auto _ : state) benchmark::DoNotOptimize(refine_sequence(d, lambdas));
}
BENCHMARK(BM_RefineSequence)->Arg(4)->Arg(32)->Arg(256);

void BM_SwApproximate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(13);
  FnGroup g{unit_space(n), {}};
  for (int j = 0; j < 2; ++j) {
    FnValues v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rat(rng, -2, 2, 6));
    g.generators.push_back(std::move(v));
  }
  std::vector<FinASpace::Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({"x" + std::to_string(i), value_group(g, i)});
  g.space = FinASpace(std::move(pts));
  FnValues target;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = g.space.zeta(i).value();
    long p = std::uniform_int_distribution<long>(-3, 3)(rng);
    target.push_back(Rat{Int(p), d});
  }
  for (auto _ : state) benchmark::DoNotOptimize(sw_approximate(g, target, Rat{Int(1), Int(100)}));
}
BENCHMARK(BM_SwApproximate)->Arg(2)->Arg(4)->Arg(8);

void BM_PwlCombine(benchmark::State& state) {
  std::mt19937_64 rng(17);
  auto affine = [&] {
    std::uniform_int_distribution<long> c(-9, 9);
    return IntPwl::affine(Int(c(rng)), Int(c(rng)));
  };
  IntPwl f = affine();
  IntPwl g = affine();
  for (long i = 0; i < state.range(0); ++i) {
    f = pwl_combine(f, affine(), i % 2 == 0 ? PwlOp::kJoin : PwlOp::kMeet);
    g = pwl_combine(g, affine(), i % 2 == 0 ? PwlOp::kMeet : PwlOp::kJoin);
  }
  for (auto _ : state) benchmark::DoNotOptimize(pwl_combine(f, g, PwlOp::kAdd));
}
BENCHMARK(BM_PwlCombine)->Arg(1)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
