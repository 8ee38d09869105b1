#include "f4/structure.hpp"
#include "f4/suites.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace f4;

F4Elt seeded_elt(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  MatQ a(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      a(i, j) = Rat(num(rng), den(rng));
      a(j, i) = -a(i, j);
    }
  }
  Octonion x, y, z;
  for (auto* o : {&x, &y, &z})
    for (auto& c : o->c) c = Rat(num(rng), den(rng));
  return F4Elt::from_parts(std::move(a), x, y, z);
}

void BM_OctonionMul(benchmark::State& state) {
  const Octonion a = seeded_elt(1).x;
  const Octonion b = seeded_elt(2).y;
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_OctonionMul);

void BM_BracketDirect(benchmark::State& state) {
  const F4Elt p = seeded_elt(3);
  const F4Elt q = seeded_elt(4);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_nc(p, q));
}
BENCHMARK(BM_BracketDirect);

void BM_BracketTable(benchmark::State& state) {
  const StructureTable& t = StructureTable::builtin(Algebra::noncompact);
  const Vec p = to_vec52(seeded_elt(5));
  const Vec q = to_vec52(seeded_elt(6));
  for (auto _ : state) benchmark::DoNotOptimize(t.bracket_vec(p, q));
}
BENCHMARK(BM_BracketTable);

void BM_JacobiSweep(benchmark::State& state) {
  for (auto _ : state) {
    const SuiteResult r = run_suite("jacobi", Algebra::compact, {});
    benchmark::DoNotOptimize(r.checks);
  }
}
BENCHMARK(BM_JacobiSweep)->Unit(benchmark::kMillisecond);

void BM_IdealClosure(benchmark::State& state) {
  const F4Elt seed = F4Elt::basis(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_closure(Algebra::compact, seed).dim());
}
BENCHMARK(BM_IdealClosure)->Arg(0)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<Vec> rows;
  for (int r = 0; r < 26; ++r) {
    Vec v(kF4Dim);
    for (auto& c : v) c = Rat(num(rng));
    rows.push_back(std::move(v));
  }
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(kF4Dim, rows).dim());
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
