#include <benchmark/benchmark.h>

#include "nilorbit/counting.hpp"
#include "nilorbit/indicator.hpp"
#include "nilorbit/invariants.hpp"

using namespace nilorbit;

static void BM_FieldMul(benchmark::State& state) {
  Field F = Field::gf(2, 7);
  auto elems = F.elements();
  size_t i = 0;
  for (auto _ : state) {
    Fe x = F.mul(elems[i % elems.size()], elems[(i * 7 + 3) % elems.size()]);
    benchmark::DoNotOptimize(x);
    ++i;
  }
}
BENCHMARK(BM_FieldMul);

static void BM_Canonicalize(benchmark::State& state) {
  Field F = Field::gf(3);
  auto nil = enumerate_nilpotent2(F);
  uint64_t t = 0;
  const uint64_t total = 81 * 81;
  for (auto _ : state) {
    NilTuple T;
    uint64_t idx = t % total;
    T.mats = {nil[idx % 81 % nil.size()], nil[(idx / 81) % nil.size()]};
    benchmark::DoNotOptimize(canonicalize(F, T).form);
    ++t;
  }
}
BENCHMARK(BM_Canonicalize);

static void BM_OrbitCountBruteForce(benchmark::State& state) {
  Field F = Field::gf(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        brute_force_orbit_count(F, 2, 3, OrbitMethod::full_group, 1'000'000'000).count);
}
BENCHMARK(BM_OrbitCountBruteForce);

static void BM_OrbitCountN3(benchmark::State& state) {
  Field F = Field::gf(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_orbit_count(F, 3, 2).count);
}
BENCHMARK(BM_OrbitCountN3);

static void BM_KappaPoly(benchmark::State& state) {
  for (auto _ : state)
    for (int m = 1; m <= 8; ++m) benchmark::DoNotOptimize(kappa_poly(m));
}
BENCHMARK(BM_KappaPoly);

static void BM_BuildHSet(benchmark::State& state) {
  Field F = Field::gf(3);
  for (auto _ : state) benchmark::DoNotOptimize(build_h_set(F, 2).polys.size());
}
BENCHMARK(BM_BuildHSet);

static void BM_CheckSeparating(benchmark::State& state) {
  Field F = Field::gf(5);
  InvariantSet H = build_set(SetKind::H, F, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_separating(H, F, 3).separating);
}
BENCHMARK(BM_CheckSeparating);

BENCHMARK_MAIN();
