#include <benchmark/benchmark.h>

#include <random>

#include "gersh/geometry.hpp"
#include "gersh/homotopy.hpp"
#include "gersh/matching.hpp"
#include "gersh/matrix.hpp"
#include "gersh/winding.hpp"

namespace {

gersh::ComplexMatrix random_matrix(std::size_t n, double off_scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<gersh::Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double s = i == j ? static_cast<double>(n) : off_scale;
      const double re = u(rng);
      e[i * n + j] = s * gersh::Complex{re, u(rng)};
    }
  }
  return gersh::ComplexMatrix(n, std::move(e));
}

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gersh::characteristic_polynomial(a));
}
BENCHMARK(BM_CharacteristicPolynomial)->DenseRange(4, 20, 4);

void BM_EigenvaluesOracle(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gersh::eigenvalues_oracle(a));
}
BENCHMARK(BM_EigenvaluesOracle)->DenseRange(4, 20, 4);

void BM_MatchingDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = gersh::eigenvalues_oracle(random_matrix(n, 1.0, 3));
  const auto y = gersh::eigenvalues_oracle(random_matrix(n, 1.0, 4));
  for (auto _ : state) benchmark::DoNotOptimize(gersh::matching_distance(x, y));
}
BENCHMARK(BM_MatchingDistance)->DenseRange(4, 20, 4);

void BM_CountInside(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 0.1, 5);
  const auto rs = gersh::connected_regions(gersh::gershgorin_disks(a));
  const auto contour = gersh::region_contour(rs, 0);
  for (auto _ : state) benchmark::DoNotOptimize(gersh::count_inside(a, contour));
}
BENCHMARK(BM_CountInside)->DenseRange(4, 16, 4);

void BM_Track(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 0.1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(gersh::track(a));
}
BENCHMARK(BM_Track)->DenseRange(4, 12, 4);

}  // namespace
BENCHMARK_MAIN();
