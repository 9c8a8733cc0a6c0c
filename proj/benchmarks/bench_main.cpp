#include <benchmark/benchmark.h>

#include "sectio/annihilator.hpp"
#include "sectio/automaton.hpp"

namespace {

using namespace sectio;

Branch pascal_branch(int64_t p) {
  const Field F = make_field(p);
  // (1 - t1 - t2) y - 1
  MultiPoly E = poly_from_terms(F, 2,
                                {{{0, 0, 1}, 1}, {{1, 0, 1}, -1}, {{0, 1, 1}, -1}, {{0, 0, 0}, -1}});
  return make_branch(std::move(E), F.one());
}

Branch catalan_branch(int64_t p) {
  const Field F = make_field(p);
  // t1 t2 y^2 - y + 1
  MultiPoly E = poly_from_terms(F, 2, {{{1, 1, 2}, 1}, {{0, 0, 1}, -1}, {{0, 0, 0}, 1}});
  return make_branch(std::move(E), F.one());
}

void BM_coeff_query(benchmark::State& state) {
  const auto ctx = SectionContext::make(pascal_branch(2));
  const mpz_class big = mpz_class(1) << static_cast<unsigned>(state.range(0));
  const std::vector<mpz_class> index{big, big - 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_query(ctx, index));
  }
}
BENCHMARK(BM_coeff_query)->Arg(64)->Arg(256)->Arg(1024);

void BM_apply_section(benchmark::State& state) {
  const auto ctx = SectionContext::make(catalan_branch(state.range(0)));
  const Representation rep = embed_f(ctx);
  const std::vector<int32_t> r(2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_section_rep(rep, r));
  }
}
BENCHMARK(BM_apply_section)->Arg(3)->Arg(5)->Arg(7);

void BM_hensel_solve(benchmark::State& state) {
  const Branch b = catalan_branch(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hensel_solve(b, static_cast<int32_t>(state.range(0))));
  }
}
BENCHMARK(BM_hensel_solve)->Arg(16)->Arg(32)->Arg(64);

void BM_count_box_points(benchmark::State& state) {
  const Branch b = catalan_branch(3);
  const MultiPoly E5 = poly_pow(b.E, static_cast<uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_box_points(E5));
  }
}
BENCHMARK(BM_count_box_points)->Arg(1)->Arg(2)->Arg(3);

void BM_build_dfao(benchmark::State& state) {
  const auto ctx = SectionContext::make(pascal_branch(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_dfao(ctx, 100000));
  }
}
BENCHMARK(BM_build_dfao)->Arg(2)->Arg(3);

void BM_diagonal_pipeline(benchmark::State& state) {
  const Branch b = pascal_branch(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonal_pipeline(b, static_cast<int32_t>(state.range(0))));
  }
}
BENCHMARK(BM_diagonal_pipeline)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
