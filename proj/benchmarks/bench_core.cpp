#include <benchmark/benchmark.h>

#include <random>

#include "cy3/algebra/jordan.hpp"
#include "cy3/algebra/restriction.hpp"
#include "cy3/linalg/eliminate.hpp"
#include "cy3/mf/morphisms.hpp"

using namespace cy3;

namespace {

poly::SparsePoly random_cubic(std::mt19937_64& rng, const poly::RingDescriptor& r) {
  std::vector<poly::SparsePoly::Term> t;
  for (int i = 0; i < 40; ++i) {
    std::vector<unsigned> e(r.num_vars, 0);
    for (int k = 0; k < 3; ++k) ++e[rng() % r.num_vars];
    t.push_back({poly::Monomial::from_exponents(e), static_cast<long>(rng() % r.characteristic)});
  }
  return poly::SparsePoly::from_terms(r, std::move(t));
}

}  // namespace

static void BM_PolyMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const poly::RingDescriptor r{9, 313, "x"};
  const auto a = random_cubic(rng, r), b = random_cubic(rng, r);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply);

static void BM_DetExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(algebra::e6_cubic());
}
BENCHMARK(BM_DetExpansion)->Unit(benchmark::kMillisecond);

static void BM_Hessian(benchmark::State& state) {
  const auto det = algebra::e6_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(algebra::hessian(det));
}
BENCHMARK(BM_Hessian)->Unit(benchmark::kMillisecond);

static void BM_SparseRank(benchmark::State& state) {
  // Band-plus-noise matrix, a rough stand-in for the morphism systems.
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  linalg::SparseMatrixFp A(n, n, 313);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    for (std::size_t k = 0; k < 8; ++k) {
      const auto c = static_cast<std::uint32_t>((r + (k < 4 ? k : rng() % n)) % n);
      row.emplace_back(c, static_cast<std::int64_t>(rng() % 313));
    }
    A.set_row(r, row);
  }
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(A));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SparseRank)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_RestrictAndAdjugate(benchmark::State& state) {
  const auto det = algebra::e6_cubic();
  const auto M = algebra::hessian(det);
  const auto spec = algebra::random_restriction(313, 0, 30);
  const auto f = algebra::restrict(det, spec);
  const auto m = algebra::restrict(M, spec);
  for (auto _ : state) benchmark::DoNotOptimize(mf::adjugate_partner(m, f));
}
BENCHMARK(BM_RestrictAndAdjugate)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_SmallHom(benchmark::State& state) {
  const poly::RingDescriptor r{2, 313, "x"};
  const auto x = poly::SparsePoly::variable(r, 0), y = poly::SparsePoly::variable(r, 1);
  poly::PolyMatrix d1(r, 2, 2), d0(r, 2, 2);
  d1(0, 0) = x;
  d1(0, 1) = y;
  d1(1, 1) = x + y;
  d0(0, 0) = x * (x + y);
  d0(0, 1) = -(x * y);
  d0(1, 1) = x * x;
  const auto g = mf::GradedMF::uniform(x * x * (x + y), d1, d0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::hom_degree0(g));
    benchmark::DoNotOptimize(mf::ext1(g));
  }
}
BENCHMARK(BM_SmallHom);
BENCHMARK_MAIN();
