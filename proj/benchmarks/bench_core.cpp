#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "klein4/automorphism.hpp"
#include "klein4/chevalley.hpp"
#include "klein4/fixed_points.hpp"
#include "klein4/matrix.hpp"
#include "klein4/real_form.hpp"

using klein4::Automorphism;
using klein4::CartanType;
using klein4::ChevalleyAlgebra;
using klein4::RatMatrix;
using klein4::Vec;

namespace {

RatMatrix seeded_matrix(std::size_t n) {
  std::mt19937 rng(12345);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = klein4::ratio(int(rng() % 9) - 4, 1 + int(rng() % 3));
  return m;
}

void bm_rref(benchmark::State& state) {
  RatMatrix m = seeded_matrix(std::size_t(state.range(0)));
  for (auto _ : state) {
    RatMatrix c = m;
    benchmark::DoNotOptimize(c.rref());
  }
}
BENCHMARK(bm_rref)->Arg(20)->Arg(40)->Arg(78);

// shared instances so the per-iteration cost is the operation, not the build
const ChevalleyAlgebra& exceptional(int rank) {
  static const ChevalleyAlgebra e6 = ChevalleyAlgebra::build({'E', 6});
  static const ChevalleyAlgebra e7 = ChevalleyAlgebra::build({'E', 7});
  static const ChevalleyAlgebra e8 = ChevalleyAlgebra::build({'E', 8});
  return rank == 6 ? e6 : rank == 7 ? e7 : e8;
}

Vec seeded_element(const ChevalleyAlgebra& alg, unsigned seed) {
  std::mt19937 rng(seed);
  Vec x(std::size_t(alg.dim()));
  for (auto& c : x) c = klein4::ratio(int(rng() % 7) - 3, 1 + int(rng() % 2));
  return x;
}

// construction end to end, certification included
void bm_build(benchmark::State& state) {
  CartanType t{'E', int(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ChevalleyAlgebra::build(t));
}
BENCHMARK(bm_build)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_bracket(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(int(state.range(0)));
  Vec x = seeded_element(alg, 7u);
  Vec y = seeded_element(alg, 11u);
  for (auto _ : state) benchmark::DoNotOptimize(alg.bracket(x, y));
}
BENCHMARK(bm_bracket)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_jacobi_sample(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(6);
  for (auto _ : state) alg.certify_jacobi_sample(int(state.range(0)), 2024u);
}
BENCHMARK(bm_jacobi_sample)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void bm_compact_form(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(6);
  for (auto _ : state) benchmark::DoNotOptimize(klein4::compact_form(alg));
}
BENCHMARK(bm_compact_form)->Unit(benchmark::kMillisecond);

void bm_compose_certify(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(6);
  const Automorphism flip = Automorphism::diagram(alg, alg.roots().diagram_involution());
  const Automorphism tr = Automorphism::transpose_involution(alg);
  for (auto _ : state) {
    Automorphism c = flip.compose(tr);
    c.certify_bracket_preservation();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_compose_certify)->Unit(benchmark::kMillisecond);

void bm_fixed_subalgebra(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(6);
  const Automorphism flip = Automorphism::diagram(alg, alg.roots().diagram_involution());
  for (auto _ : state) benchmark::DoNotOptimize(klein4::fixed_subalgebra(alg, {&flip}));
}
BENCHMARK(bm_fixed_subalgebra)->Unit(benchmark::kMillisecond);

void bm_inner_pool(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(6);
  for (auto _ : state) benchmark::DoNotOptimize(klein4::inner_involution_pool(alg));
}
BENCHMARK(bm_inner_pool)->Unit(benchmark::kMillisecond);

// full identification pipeline: fixed algebra, decomposition, signature, label
void bm_real_form(benchmark::State& state) {
  const ChevalleyAlgebra& alg = exceptional(6);
  const Automorphism flip = Automorphism::diagram(alg, alg.roots().diagram_involution());
  for (auto _ : state) benchmark::DoNotOptimize(klein4::real_form(alg, flip));
}
BENCHMARK(bm_real_form)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
