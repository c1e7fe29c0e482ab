#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gersh/error.hpp"
#include "gersh/homotopy.hpp"
#include "gersh/matching.hpp"
#include "oracles.hpp"

using namespace gersh;
using gersh::testing::random_separated_matrix;

namespace {

std::vector<int> oracle_counts(const ComplexMatrix& a, const RegionSet& rs) {
  std::vector<int> counts(rs.size(), 0);
  const SpectrumMultiset spectrum = eigenvalues_oracle(a);
  for (const Complex& v : spectrum.values()) {
    const auto r = region_containing(rs, v);
    REQUIRE(r.has_value());
    ++counts[*r];
  }
  return counts;
}

void check_trace_shape(const HomotopyTrace& trace, std::size_t n) {
  REQUIRE(trace.t_values.size() >= 2);
  CHECK(trace.t_values.front() == 0.0);
  CHECK(trace.t_values.back() == 1.0);
  CHECK(std::is_sorted(trace.t_values.begin(), trace.t_values.end()));
  CHECK(trace.chains.size() == trace.t_values.size());
  CHECK(trace.region_counts.size() == trace.t_values.size());
  CHECK(trace.step_distances.size() + 1 == trace.t_values.size());
  for (const auto& row : trace.region_counts) {
    int sum = 0;
    for (int c : row) sum += c;
    CHECK(sum == static_cast<int>(n));
  }
  // Stepwise chain consistency.
  for (std::size_t i = 0; i + 1 < trace.chains.size(); ++i) {
    double step = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      step = std::max(step, std::abs(trace.chains[i][j] - trace.chains[i + 1][j]));
    }
    CHECK(step < trace.step_epsilon);
    CHECK(step == trace.step_distances[i]);
  }
}

bool columns_constant(const HomotopyTrace& trace) {
  return std::all_of(trace.region_counts.begin(), trace.region_counts.end(),
                     [&](const auto& row) { return row == trace.region_counts.front(); });
}

}  // namespace

TEST_CASE("track examples") {
  SUBCASE("triangular matrix keeps one eigenvalue per region") {
    const ComplexMatrix a{{4.0, 1.0}, {0.0, 2.0}};
    const HomotopyTrace trace = track(a);
    check_trace_shape(trace, 2);
    for (const auto& row : trace.region_counts) CHECK(row == std::vector<int>{1, 1});
    CHECK(trace.step_epsilon == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("[[0,0.5],[0.5,0]]: single region, eigenvalues +-0.5 t") {
    const ComplexMatrix a{{0.0, 0.5}, {0.5, 0.0}};
    const HomotopyTrace trace = track(a);
    check_trace_shape(trace, 2);
    for (const auto& row : trace.region_counts) CHECK(row == std::vector<int>{2});
    for (std::size_t i = 0; i < trace.t_values.size(); ++i) {
      const double t = trace.t_values[i];
      std::vector<Complex> got = trace.chains[i];
      std::sort(got.begin(), got.end(), lex_less);
      CHECK(std::abs(got[0] - Complex(-0.5 * t, 0.0)) <= 1e-12);
      CHECK(std::abs(got[1] - Complex(0.5 * t, 0.0)) <= 1e-12);
    }
  }
  SUBCASE("random 6x6: final counts match the oracle") {
    std::mt19937_64 rng(66);
    const ComplexMatrix a = random_separated_matrix(6, rng);
    const RegionSet rs = connected_regions(gershgorin_disks(a));
    const HomotopyTrace trace = track(a, rs);
    check_trace_shape(trace, 6);
    CHECK(trace.region_counts.back() == oracle_counts(a, rs));
    CHECK(columns_constant(trace));
  }
  CHECK_THROWS_AS(track(ComplexMatrix::identity(2), TrackOptions{-1.0}), InputError);
}

TEST_CASE("a tiny epsilon underflows the step") {
  const ComplexMatrix a{{0.0, 1.0}, {1.0, 0.0}};
  TrackOptions opts;
  opts.epsilon = 1e-9;
  CHECK_THROWS_AS(track(a, opts), NumericalError);
}

TEST_CASE("extract_paths examples") {
  SUBCASE("diagonal matrix gives constant paths") {
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<Complex>{1.0, 2.0, 3.0});
    const RegionSet rs = connected_regions(gershgorin_disks(a));
    const auto paths = extract_paths(track(a, rs), rs);
    REQUIRE(paths.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(paths[j].home_region == j);
      for (const auto& p : paths[j].points) CHECK(p.value == Complex(1.0 + j, 0.0));
    }
  }
  SUBCASE("[[0,1],[0.25,0]] endpoints are +-0.5 in the single region") {
    const ComplexMatrix a{{0.0, 1.0}, {0.25, 0.0}};
    const RegionSet rs = connected_regions(gershgorin_disks(a));
    const auto paths = extract_paths(track(a, rs), rs);
    REQUIRE(paths.size() == 2);
    std::vector<Complex> ends;
    for (const auto& path : paths) {
      CHECK(path.home_region == 0);
      CHECK(path.points.front().value == Complex(0.0, 0.0));
      ends.push_back(path.points.back().value);
    }
    std::sort(ends.begin(), ends.end(), lex_less);
    CHECK(std::abs(ends[0] + 0.5) <= 1e-12);
    CHECK(std::abs(ends[1] - 0.5) <= 1e-12);
  }
  SUBCASE("a chain leaving its region is rejected") {
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<Complex>{1.0, 5.0});
    const RegionSet rs = connected_regions(gershgorin_disks(a));
    HomotopyTrace trace = track(a, rs);
    trace.chains.back()[0] = 5.0;
    CHECK_THROWS_WITH(extract_paths(trace, rs), "path escapes region");
  }
}

TEST_CASE("paths stay home and their count per region is the multiplicity") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const ComplexMatrix a = random_separated_matrix(n, rng);
    const RegionSet rs = connected_regions(gershgorin_disks(a));
    const HomotopyTrace trace = track(a, rs);
    check_trace_shape(trace, n);
    CHECK(columns_constant(trace));
    const auto paths = extract_paths(trace, rs);
    std::vector<std::size_t> homed(rs.size(), 0);
    for (const auto& path : paths) {
      ++homed[path.home_region];
      for (const auto& p : path.points) CHECK(contains(rs, path.home_region, p.value));
      // Each path starts on a diagonal entry of a disk of its home region.
      bool on_diagonal = false;
      for (std::size_t i : rs[path.home_region].disk_indices) {
        on_diagonal = on_diagonal || path.points.front().value == a(i, i);
      }
      CHECK(on_diagonal);
    }
    for (std::size_t r = 0; r < rs.size(); ++r) CHECK(homed[r] == rs[r].multiplicity());
  }
}

TEST_CASE("halving epsilon never changes the region counts") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = random_separated_matrix(4 + trial % 4, rng);
    const RegionSet rs = connected_regions(gershgorin_disks(a));
    const HomotopyTrace coarse = track(a, rs);
    TrackOptions fine_opts;
    fine_opts.epsilon = coarse.step_epsilon / 2.0;
    const HomotopyTrace fine = track(a, rs, fine_opts);
    CHECK(fine.t_values.size() >= coarse.t_values.size());
    CHECK(fine.region_counts.front() == coarse.region_counts.front());
    CHECK(fine.region_counts.back() == coarse.region_counts.back());
    CHECK(columns_constant(fine));
  }
}

TEST_CASE("verify_gershgorin_part2 examples") {
  SUBCASE("triangular") {
    const Part2Report rep = verify_gershgorin_part2(ComplexMatrix{{4.0, 1.0}, {0.0, 2.0}});
    REQUIRE(rep.regions.size() == 2);
    CHECK(rep.all_agree);
    CHECK(rep.containment);
    for (const auto& v : rep.regions) {
      CHECK(v.multiplicity == 1);
      CHECK(v.homotopy_count == 1);
      CHECK(v.winding_count == 1);
      CHECK(v.oracle_count == 1);
    }
    CHECK(rep.regions[0].disk_indices == std::vector<std::size_t>{0});
  }
  SUBCASE("repeated diagonal") {
    const Part2Report rep =
        verify_gershgorin_part2(ComplexMatrix::diagonal(std::vector<Complex>{5.0, 5.0, 9.0}));
    REQUIRE(rep.regions.size() == 2);
    CHECK(rep.all_agree);
    const RegionVerdict& five = rep.regions[0];
    CHECK(five.disk_indices == std::vector<std::size_t>{0, 1});
    CHECK(five.multiplicity == 2);
    CHECK(five.homotopy_count == 2);
    CHECK(five.winding_count == 2);
    CHECK(five.oracle_count == 2);
    const RegionVerdict& nine = rep.regions[1];
    CHECK(nine.multiplicity == 1);
    CHECK(nine.homotopy_count == 1);
    CHECK(nine.winding_count == 1);
    CHECK(nine.oracle_count == 1);
  }
  SUBCASE("random 4x4 to 8x8") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix a = random_separated_matrix(4 + trial % 5, rng);
      const Part2Report rep = verify_gershgorin_part2(a);
      CHECK(rep.all_agree);
      CHECK(rep.containment);
    }
  }
}
