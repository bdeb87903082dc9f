// SPDX-License-Identifier: MIT
#include <benchmark/benchmark.h>

#include "skewroots/lowdeg.hpp"
#include "skewroots/oracle.hpp"

using namespace skewroots;

namespace {

std::shared_ptr<const Field> tower() { return Field::create(3, 1, 4, 1); }

LinearizedPoly sample_poly(const std::shared_ptr<const Field>& f, unsigned d) {
  std::vector<FieldElement> coeffs;
  for (unsigned i = 0; i <= d; ++i)
    coeffs.push_back(f->element(1 + (i * 7 + 3) % (f->order() - 1)));
  return LinearizedPoly(f, std::move(coeffs));
}

void bm_field_mul(benchmark::State& state) {
  auto f = tower();
  FieldElement x = f->element(5), y = f->element(23);
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_field_mul);

void bm_frobenius(benchmark::State& state) {
  auto f = tower();
  FieldElement x = f->element(17);
  for (auto _ : state) {
    x = f->frobenius(x, 1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_frobenius);

void bm_a_matrix_deg2(benchmark::State& state) {
  auto f = tower();
  LinearizedPoly l = sample_poly(f, 2);
  for (auto _ : state) {
    SqMatrix m = a_matrix(l);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_a_matrix_deg2);

void bm_closed_form_deg2(benchmark::State& state) {
  auto f = tower();
  LinearizedPoly l = sample_poly(f, 2);
  for (auto _ : state) {
    SqMatrix m = a_matrix_deg2(l);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_closed_form_deg2);

void bm_classify_deg3(benchmark::State& state) {
  auto f = tower();
  LinearizedPoly l = sample_poly(f, 3);
  for (auto _ : state) {
    ProjClassification pc = classify_proj_deg3(l);
    benchmark::DoNotOptimize(pc.count);
  }
}
BENCHMARK(bm_classify_deg3);

void bm_brute_proj(benchmark::State& state) {
  auto f = tower();
  LinearizedPoly l = sample_poly(f, 3);
  for (auto _ : state) {
    uint64_t n = brute_roots_proj(l);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_brute_proj);

}  // namespace

BENCHMARK_MAIN();
