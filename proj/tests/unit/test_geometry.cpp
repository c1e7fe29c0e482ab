#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "gersh/error.hpp"
#include "gersh/geometry.hpp"
#include "oracles.hpp"

using namespace gersh;
using gersh::testing::distance_to_region;

namespace {

std::vector<Disk> make_disks(std::initializer_list<std::pair<Complex, double>> spec) {
  std::vector<Disk> disks;
  for (const auto& [c, r] : spec) disks.push_back(Disk{c, r, disks.size()});
  return disks;
}

std::vector<std::size_t> multiplicities(const RegionSet& rs) {
  std::vector<std::size_t> m;
  for (const auto& r : rs.regions()) m.push_back(r.multiplicity());
  std::sort(m.begin(), m.end());
  return m;
}

// Partition of source rows, independent of region order.
std::set<std::set<std::size_t>> row_partition(const RegionSet& rs) {
  std::set<std::set<std::size_t>> out;
  for (const auto& r : rs.regions()) {
    std::set<std::size_t> rows;
    for (std::size_t i : r.disk_indices) rows.insert(rs.disks()[i].row);
    out.insert(rows);
  }
  return out;
}

std::vector<Complex> sample_contour(const Contour& c, std::size_t per_arc) {
  std::vector<Complex> pts;
  for (const auto& loop : c.loops) {
    for (const auto& arc : loop) {
      for (std::size_t k = 0; k < per_arc; ++k) {
        pts.push_back(arc.point_at(arc.start_angle + arc.sweep() * (k + 0.5) / per_arc));
      }
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("gershgorin disks") {
  SUBCASE("diagonal") {
    const auto d = gershgorin_disks(ComplexMatrix::diagonal(std::vector<Complex>{1.0, 5.0}));
    CHECK(d[0] == Disk{1.0, 0.0, 0});
    CHECK(d[1] == Disk{5.0, 0.0, 1});
  }
  SUBCASE("triangular") {
    const auto d = gershgorin_disks(ComplexMatrix{{4.0, 1.0}, {0.0, 2.0}});
    CHECK(d[0] == Disk{4.0, 1.0, 0});
    CHECK(d[1] == Disk{2.0, 0.0, 1});
  }
  SUBCASE("[[0,1],[0.25,0]]") {
    const auto d = gershgorin_disks(ComplexMatrix{{0.0, 1.0}, {0.25, 0.0}});
    CHECK(d[0] == Disk{0.0, 1.0, 0});
    CHECK(d[1] == Disk{0.0, 0.25, 1});
  }
  SUBCASE("radius is the off-diagonal row sum of moduli") {
    const auto d = gershgorin_disks(ComplexMatrix{{1.0, {3.0, 4.0}}, {{0.0, -2.0}, 0.0}});
    CHECK(d[0].radius == 5.0);
    CHECK(d[1].radius == 2.0);
  }
}

TEST_CASE("connected regions") {
  SUBCASE("separated") {
    const auto rs = connected_regions(make_disks({{0.0, 1.0}, {3.0, 1.0}}));
    CHECK(rs.size() == 2);
    CHECK(multiplicities(rs) == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("overlapping") {
    const auto rs = connected_regions(make_disks({{0.0, 1.0}, {1.5, 1.0}}));
    CHECK(rs.size() == 1);
    CHECK(rs[0].multiplicity() == 2);
  }
  SUBCASE("coincident point disks") {
    const auto rs = connected_regions(
        gershgorin_disks(ComplexMatrix::diagonal(std::vector<Complex>{7.0, 7.0, 7.0})));
    CHECK(rs.size() == 1);
    CHECK(rs[0].multiplicity() == 3);
  }
  SUBCASE("tangent disks are connected") {
    const auto rs = connected_regions(make_disks({{0.0, 1.0}, {2.0, 1.0}}));
    CHECK(rs.size() == 1);
  }
  SUBCASE("chain connectivity and ordering by smallest index") {
    const auto rs = connected_regions(
        make_disks({{10.0, 0.5}, {0.0, 1.0}, {1.8, 1.0}, {3.6, 1.0}, {10.9, 0.5}}));
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].disk_indices == std::vector<std::size_t>{0, 4});
    CHECK(rs[1].disk_indices == std::vector<std::size_t>{1, 2, 3});
  }
  CHECK_THROWS_AS(connected_regions({}), InputError);
}

TEST_CASE("region gap") {
  CHECK(region_gap(connected_regions(make_disks({{0.0, 1.0}, {3.0, 0.5}}))) == 1.5);
  CHECK(region_gap(connected_regions(make_disks({{0.0, 1.0}, {1.0, 0.5}}))) == kUnboundedGap);
  CHECK(region_gap(connected_regions(make_disks({{0.0, 0.0}, {1.0, 0.0}, {10.0, 0.0}}))) == 1.0);
}

TEST_CASE("contains") {
  const auto tri = connected_regions(gershgorin_disks(ComplexMatrix{{4.0, 1.0}, {0.0, 2.0}}));
  CHECK(contains(tri, 0, 4.5));
  CHECK_FALSE(contains(tri, 0, 6.0));
  CHECK(contains(tri, 1, 2.0));
  CHECK_FALSE(contains(tri, 1, 2.1));

  const auto ex2 = connected_regions(gershgorin_disks(ComplexMatrix{{0.0, 1.0}, {0.25, 0.0}}));
  CHECK(contains(ex2, 0, 0.5));
  CHECK(contains(ex2, 0, -0.5));
}

TEST_CASE("region contour examples") {
  SUBCASE("single disk") {
    const auto rs = connected_regions(make_disks({{0.0, 1.0}}));
    const Contour c = region_contour(rs, 0, 0.1);
    REQUIRE(c.loops.size() == 1);
    REQUIRE(c.loops[0].size() == 1);
    CHECK(c.loops[0][0].radius == doctest::Approx(1.1).epsilon(1e-15));
    CHECK(c.loops[0][0].sweep() == doctest::Approx(2 * std::numbers::pi));
  }
  SUBCASE("two overlapping disks give two arcs meeting on both circles") {
    const auto rs = connected_regions(make_disks({{0.0, 1.0}, {1.0, 1.0}}));
    const Contour c = region_contour(rs, 0, 0.1);
    REQUIRE(c.loops.size() == 1);
    REQUIRE(c.loops[0].size() == 2);
    const double y = std::sqrt(1.1 * 1.1 - 0.25);
    for (const Arc& arc : c.loops[0]) {
      for (const Complex p : {arc.start(), arc.end()}) {
        CHECK(std::abs(std::abs(p) - 1.1) < 1e-10);
        CHECK(std::abs(std::abs(p - 1.0) - 1.1) < 1e-10);
        CHECK(std::abs(p.real() - 0.5) < 1e-10);
        CHECK(std::abs(std::abs(p.imag()) - y) < 1e-10);
      }
    }
    const auto& loop = c.loops[0];
    for (std::size_t k = 0; k < loop.size(); ++k) {
      CHECK(std::abs(loop[k].end() - loop[(k + 1) % loop.size()].start()) < 1e-10);
    }
  }
  SUBCASE("point disk") {
    const auto rs = connected_regions(make_disks({{5.0, 0.0}}));
    const Contour c = region_contour(rs, 0, 0.2);
    REQUIRE(c.arc_count() == 1);
    CHECK(c.loops[0][0].center == Complex{5.0, 0.0});
    CHECK(c.loops[0][0].radius == 0.2);
  }
  SUBCASE("inflation must stay below half the gap") {
    const auto rs = connected_regions(make_disks({{0.0, 1.0}, {3.0, 0.5}}));
    CHECK_THROWS_WITH(region_contour(rs, 0, 0.75), "contour would touch another region");
    CHECK_NOTHROW(region_contour(rs, 0, 0.74));
    CHECK(default_inflation(rs) == doctest::Approx(0.5));
  }
}

TEST_CASE("ring of disks: contour has an inner loop excluding the enclosed region") {
  std::vector<Disk> disks;
  for (int k = 0; k < 8; ++k) {
    disks.push_back({std::polar(3.0, 2 * std::numbers::pi * k / 8), 1.3, disks.size()});
  }
  disks.push_back({0.0, 0.0, disks.size()});
  const auto rs = connected_regions(disks);
  REQUIRE(rs.size() == 2);
  const Contour ring = region_contour(rs, 0, 0.1);
  CHECK(ring.loops.size() == 2);
  CHECK(ring.winding_number(0.0) == 0);
  CHECK(ring.winding_number(3.0) == 1);
  CHECK(ring.winding_number(10.0) == 0);
  const Contour center = region_contour(rs, 1, 0.1);
  CHECK(center.winding_number(0.0) == 1);
  CHECK(center.winding_number(3.0) == 0);
}

TEST_CASE("contour points lie at the inflation distance from their region") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gersh::testing::random_separated_matrix(3 + trial % 6, rng);
    const auto rs = connected_regions(gershgorin_disks(a));
    const double gap = region_gap(rs);
    const double inflation = default_inflation(rs);
    for (std::size_t r = 0; r < rs.size(); ++r) {
      const Contour c = region_contour(rs, r, inflation);
      const std::size_t per_arc = std::max<std::size_t>(1, 100 / c.arc_count());
      for (const Complex p : sample_contour(c, per_arc)) {
        CHECK(std::abs(distance_to_region(rs, r, p) - inflation) <= 1e-8);
        for (std::size_t other = 0; other < rs.size(); ++other) {
          if (other != r) CHECK(distance_to_region(rs, other, p) >= gap - inflation - 1e-12);
        }
        ++checked;
      }
      // Region r inside, other regions outside.
      for (std::size_t i = 0; i < rs.disks().size(); ++i) {
        const int w = c.winding_number(rs.disks()[i].center);
        CHECK(w == (rs.region_of_disk(i) == r ? 1 : 0));
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("part (1): oracle eigenvalues lie in the disk union") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto a = gersh::testing::random_unit_square_matrix(n, rng);
    const auto rs = connected_regions(gershgorin_disks(a));
    const SpectrumMultiset spectrum = eigenvalues_oracle(a);
    for (const Complex& v : spectrum.values()) {
      CHECK(region_containing(rs, v).has_value());
    }
  }
}

TEST_CASE("region invariants") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto a = trial % 2 ? gersh::testing::random_separated_matrix(n, rng)
                             : gersh::testing::random_unit_square_matrix(n, rng);
    auto disks = gershgorin_disks(a);
    const auto rs = connected_regions(disks);
    std::size_t total = 0;
    for (const auto& r : rs.regions()) total += r.multiplicity();
    CHECK(total == n);
    if (rs.size() >= 2) CHECK(region_gap(rs) > 0.0);

    std::shuffle(disks.begin(), disks.end(), rng);
    CHECK(row_partition(connected_regions(disks)) == row_partition(rs));
  }
}

TEST_CASE("homotopy disks grow monotonically inside the t=1 disks") {
  std::mt19937_64 rng(4);
  const auto a = gersh::testing::random_unit_square_matrix(6, rng);
  const auto full = gershgorin_disks(a);
  double prev_t = 0.0;
  auto prev = gershgorin_disks(homotopy_member(a, 0.0));
  for (double t : {0.1, 0.35, 0.5, 0.9, 1.0}) {
    const auto cur = gershgorin_disks(homotopy_member(a, t));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      CHECK(cur[i].center == full[i].center);
      CHECK(cur[i].radius == doctest::Approx(t * full[i].radius).epsilon(1e-12));
      CHECK(prev[i].radius <= cur[i].radius + 1e-15);
    }
    prev = cur;
    prev_t = t;
  }
  CHECK(prev_t == 1.0);
}
