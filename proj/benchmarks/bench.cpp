#include <benchmark/benchmark.h>

#include "nlie/classifier.hpp"
#include "nlie/invariants.hpp"
#include "nlie/rng.hpp"

using namespace nlie;

namespace {

Mat random_square(const FieldSpec& f, size_t d, uint64_t seed) {
  SplitMix64 rng(seed);
  Mat m(f, d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

void BM_rref_gf5(benchmark::State& state) {
  Mat m = random_square(FieldSpec::GF(5), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_gf5)->Arg(20)->Arg(40);

void BM_rref_rational(benchmark::State& state) {
  Mat m = random_square(FieldSpec::Q(), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_rational)->Arg(20);

void BM_filippov_check(benchmark::State& state) {
  NLieAlgebra a = build(Label::A(5, 10, 6), FieldSpec::GF(5));
  for (auto _ : state) benchmark::DoNotOptimize(check_filippov(a).ok);
}
BENCHMARK(BM_filippov_check);

void BM_center(benchmark::State& state) {
  SplitMix64 rng(3);
  NLieAlgebra a = apply_basis_change(build(Label::A(4, 9, 6), FieldSpec::GF(5)),
                                     random_invertible(FieldSpec::GF(5), 9, rng));
  for (auto _ : state) benchmark::DoNotOptimize(center(a).dim());
}
BENCHMARK(BM_center);

void BM_ad_rank_profile_gf3(benchmark::State& state) {
  NLieAlgebra a = build(Label::A(4, 9, 5), FieldSpec::GF(3));
  for (auto _ : state) benchmark::DoNotOptimize(ad_rank_profile(a, 30000));
}
BENCHMARK(BM_ad_rank_profile_gf3);

void BM_classify_gf5(benchmark::State& state) {
  SplitMix64 rng(11);
  NLieAlgebra a = apply_basis_change(build(Label::A(4, 9, 6), FieldSpec::GF(5)),
                                     random_invertible(FieldSpec::GF(5), 9, rng));
  for (auto _ : state) benchmark::DoNotOptimize(classify(a).label);
}
BENCHMARK(BM_classify_gf5);

void BM_classify_rational(benchmark::State& state) {
  SplitMix64 rng(13);
  NLieAlgebra a =
      apply_basis_change(build(Label::A387(), FieldSpec::Q()), random_unimodular_integral(8, rng));
  for (auto _ : state) benchmark::DoNotOptimize(classify(a).label);
}
BENCHMARK(BM_classify_rational);

void BM_heisenberg_split(benchmark::State& state) {
  SplitMix64 rng(17);
  NLieAlgebra a = apply_basis_change(build(Label::H(4, 2), FieldSpec::GF(5)),
                                     random_invertible(FieldSpec::GF(5), 9, rng));
  for (auto _ : state) benchmark::DoNotOptimize(classify(a).label);
}
BENCHMARK(BM_heisenberg_split);

}  // namespace

BENCHMARK_MAIN();
