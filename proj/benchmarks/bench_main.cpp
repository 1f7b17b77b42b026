#include <random>

#include <benchmark/benchmark.h>

#include "cfrac/expansion.hpp"
#include "cfrac/families.hpp"
#include "cfrac/transport.hpp"
#include "cfrac/word.hpp"

using namespace cfrac;

namespace {

Polynomial random_poly(const PrimeField& f, std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Coeff> c(degree + 1);
  for (auto& v : c) v = static_cast<Coeff>(rng() % f.modulus());
  c.back() = 1;
  return Polynomial(f, std::move(c));
}

FamilySpec family(FamilyName name, std::uint32_t p) {
  FamilySpec s;
  s.name = name;
  s.p = p;
  return s;
}

// Spans the schoolbook, Karatsuba and NTT tiers.
void BM_Multiply(benchmark::State& state) {
  const PrimeField f(2147483647);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polynomial a = random_poly(f, n, 1), b = random_poly(f, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(16, 1 << 18)->Complexity();

void BM_DivRem(benchmark::State& state) {
  const PrimeField f(13);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polynomial a = random_poly(f, 2 * n, 3), b = random_poly(f, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(divrem(a, b));
}
BENCHMARK(BM_DivRem)->RangeMultiplier(8)->Range(64, 1 << 18);

void BM_Euclid(benchmark::State& state) {
  const PrimeField f(17);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polynomial a = random_poly(f, n + 1, 5), b = random_poly(f, n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(euclid_cf(a, b));
}
BENCHMARK(BM_Euclid)->RangeMultiplier(4)->Range(16, 4096);

void BM_RobbinsDirect(benchmark::State& state) {
  const auto eq = family_equation(family(FamilyName::robbins, static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(expand_root_direct(eq, 300));
}
BENCHMARK(BM_RobbinsDirect)->Arg(3)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_RobbinsCertified(benchmark::State& state) {
  const auto eq = family_equation(family(FamilyName::robbins, static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(expand_root_certified(eq, 100));
}
BENCHMARK(BM_RobbinsCertified)->Arg(3)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_ThetaTransport(benchmark::State& state) {
  FamilySpec s = family(FamilyName::theta, 7);
  s.a = 1;
  s.b = 2;
  const auto t = family_transport(s);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_hyperquadratic(t->data, n));
}
BENCHMARK(BM_ThetaTransport)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
