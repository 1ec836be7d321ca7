#include <benchmark/benchmark.h>

#include "sympindex/errors.hpp"
#include "sympindex/index_iteration.hpp"
#include "sympindex/index_jump.hpp"
#include "sympindex/reeb_count.hpp"

using namespace sympindex;

namespace {

IndexProfile rational_profile() {
  IndexProfile p;
  p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(2, 7))));
  p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(3, 11))));
  p.base_index = 3;
  return p;
}

IndexProfile irrational_profile() {
  IndexProfile p;
  p.dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.61803398874989484820", "0.00000001")));
  p.dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.31830988618379067154", "0.00000001")));
  p.base_index = 3;
  return p;
}

void BM_mu_minus_rational(benchmark::State& state) {
  IndexProfile p = rational_profile();
  Int m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu_minus_iter(p, m));
    m = m % 5000 + 1;
  }
}
BENCHMARK(BM_mu_minus_rational);

void BM_mu_minus_irrational(benchmark::State& state) {
  IndexProfile p = irrational_profile();
  Int m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu_minus_iter(p, m));
    m = m % 5000 + 1;
  }
}
BENCHMARK(BM_mu_minus_irrational);

void BM_gap_check(benchmark::State& state) {
  IndexProfile p = rational_profile();
  for (auto _ : state) benchmark::DoNotOptimize(check_gap_inequality(p, state.range(0)));
}
BENCHMARK(BM_gap_check)->Arg(50)->Arg(200);

void BM_tuple_scan(benchmark::State& state) {
  IndexProfile p;
  p.dec.blocks.push_back(NormalFormBlock::rot(Angle::rational(Rat(1, 41))));
  p.base_index = 1;
  SearchConfig sc;
  sc.n_max = state.range(0);
  sc.want = 1;
  sc.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(find_tuples({p}, sc));
    } catch (const NoTupleFound&) {
    }
  }
}
BENCHMARK(BM_tuple_scan)->Args({20000, 1})->Args({20000, 4});

void BM_betti_sum(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(betti_alternating_sum(3, state.range(0)));
}
BENCHMARK(BM_betti_sum)->Arg(400);

void BM_morse_fixture(benchmark::State& state) {
  Configuration cfg;
  cfg.ambient_n = 3;
  OrbitDescriptor x;
  x.label = "b";
  x.action = Rat(1);
  x.profile.dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.61803398874989484820", "0.00000001")));
  x.profile.dec.blocks.push_back(
      NormalFormBlock::rot(Angle::irrational("0.41421356237309504880", "0.00000001")));
  x.profile.base_index = 2;
  cfg.orbits.push_back(std::move(x));
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(morse_check(cfg, Int(state.range(0))));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_morse_fixture)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
