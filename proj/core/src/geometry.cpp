#include "gersh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "gersh/error.hpp"

namespace gersh {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smallest index is the root, which fixes region ordering.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

double scale_of(std::span<const Disk> disks) {
  double m = 0.0;
  for (const auto& d : disks) m = std::max(m, std::abs(d.center) + d.radius);
  return 1.0 + m;
}

struct Interval {
  double lo;
  double hi;
};

// Adds [lo, hi] (hi - lo <= 2 pi, any offset) to `out` folded into [0, 2 pi).
void add_wrapped(double lo, double hi, std::vector<Interval>& out) {
  if (hi - lo >= kTwoPi) {
    out.push_back({0.0, kTwoPi});
    return;
  }
  const double width = hi - lo;
  lo = std::fmod(lo, kTwoPi);
  if (lo < 0.0) lo += kTwoPi;
  hi = lo + width;
  if (hi <= kTwoPi) {
    out.push_back({lo, hi});
  } else {
    out.push_back({lo, kTwoPi});
    out.push_back({0.0, hi - kTwoPi});
  }
}

// Uncovered angular pieces of circle `self` after removing `covered`.
std::vector<Interval> complement(std::vector<Interval> covered) {
  std::sort(covered.begin(), covered.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> free;
  double cursor = 0.0;
  for (const auto& iv : covered) {
    if (iv.lo > cursor) free.push_back({cursor, iv.lo});
    cursor = std::max(cursor, iv.hi);
  }
  if (cursor < kTwoPi) free.push_back({cursor, kTwoPi});
  // A piece ending at 2 pi continues the piece starting at 0.
  if (free.size() >= 2 && free.front().lo == 0.0 && free.back().hi == kTwoPi) {
    free.front().lo = free.back().lo - kTwoPi;
    free.pop_back();
  }
  return free;
}

// Argument change of (w - z) as w runs along the arc.
double arc_angle_seen_from(const Arc& arc, Complex z) {
  if (arc.sweep() >= kTwoPi) {
    return std::abs(z - arc.center) < arc.radius ? kTwoPi : 0.0;
  }
  const double principal = std::arg((arc.end() - z) / (arc.start() - z));
  if (std::abs(z - arc.center) < arc.radius) {
    // Seen from inside the circle the argument increases monotonically.
    return principal < 0.0 ? principal + kTwoPi : principal;
  }
  return principal;
}

bool on_arc(const Arc& arc, Complex z, double tol) {
  const Complex w = z - arc.center;
  if (std::abs(std::abs(w) - arc.radius) > tol) return false;
  if (arc.sweep() >= kTwoPi) return true;
  double theta = std::arg(w);
  while (theta < arc.start_angle) theta += kTwoPi;
  while (theta > arc.start_angle + kTwoPi) theta -= kTwoPi;
  const double slack = tol / std::max(arc.radius, tol);
  return theta <= arc.end_angle + slack || theta >= arc.start_angle + kTwoPi - slack;
}

}  // namespace

std::vector<Disk> gershgorin_disks(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Disk> disks;
  disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) r += std::abs(a(i, j));
    }
    disks.push_back(Disk{a(i, i), r, i});
  }
  return disks;
}

RegionSet::RegionSet(std::vector<Disk> disks, std::vector<Region> regions)
    : disks_(std::move(disks)),
      regions_(std::move(regions)),
      region_of_disk_(disks_.size(), 0),
      scale_(scale_of(disks_)) {
  std::vector<bool> seen(disks_.size(), false);
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    if (regions_[r].disk_indices.empty()) throw InputError("empty region");
    for (std::size_t i : regions_[r].disk_indices) {
      if (i >= disks_.size() || seen[i]) throw InputError("regions do not partition the disks");
      seen[i] = true;
      region_of_disk_[i] = r;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("regions do not partition the disks");
  }
}

RegionSet connected_regions(std::vector<Disk> disks) {
  if (disks.empty()) throw InputError("no disks");
  const std::size_t n = disks.size();
  const double tol = 1e-12 * scale_of(disks);
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(disks[i].center - disks[j].center) <= disks[i].radius + disks[j].radius + tol) {
        uf.unite(i, j);
      }
    }
  }
  std::vector<Region> regions;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (slot[root] == n) {
      slot[root] = regions.size();
      regions.emplace_back();
    }
    regions[slot[root]].disk_indices.push_back(i);
  }
  return RegionSet(std::move(disks), std::move(regions));
}

double region_gap(const RegionSet& rs) {
  if (rs.size() < 2) return kUnboundedGap;
  const auto disks = rs.disks();
  double gap = kUnboundedGap;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      if (rs.region_of_disk(i) == rs.region_of_disk(j)) continue;
      gap = std::min(gap, std::abs(disks[i].center - disks[j].center) - disks[i].radius -
                              disks[j].radius);
    }
  }
  return gap;
}

bool contains(const RegionSet& rs, std::size_t r, Complex z) {
  const double tol = 1e-9 * rs.scale();
  for (std::size_t i : rs[r].disk_indices) {
    const Disk& d = rs.disks()[i];
    if (std::abs(z - d.center) <= d.radius + tol) return true;
  }
  return false;
}

std::optional<std::size_t> region_containing(const RegionSet& rs, Complex z) {
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (contains(rs, r, z)) return r;
  }
  return std::nullopt;
}

// --- contours -------------------------------------------------------------

Complex Arc::point_at(double angle) const noexcept {
  return center + std::polar(radius, angle);
}

Contour Contour::circle(Complex center, double radius) {
  if (!(radius > 0.0)) throw InputError("circle radius must be positive");
  return Contour{{{Arc{center, radius, 0.0, kTwoPi}}}};
}

std::size_t Contour::arc_count() const noexcept {
  std::size_t n = 0;
  for (const auto& loop : loops) n += loop.size();
  return n;
}

int Contour::winding_number(Complex z) const {
  double total = 0.0;
  for (const auto& loop : loops) {
    for (const auto& arc : loop) {
      if (on_arc(arc, z, 1e-12 * (1.0 + std::abs(arc.center) + arc.radius))) {
        throw InputError("point lies on the contour");
      }
      total += arc_angle_seen_from(arc, z);
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double default_inflation(const RegionSet& rs) {
  const double gap = region_gap(rs);
  if (gap != kUnboundedGap) return gap / 3.0;
  double rmax = 0.0;
  for (const auto& d : rs.disks()) rmax = std::max(rmax, d.radius);
  return 0.1 * (1.0 + rmax);
}

Contour region_contour(const RegionSet& rs, std::size_t r) {
  return region_contour(rs, r, default_inflation(rs));
}

Contour region_contour(const RegionSet& rs, std::size_t r, double inflation) {
  if (r >= rs.size()) throw InputError("region index out of range");
  if (!(inflation > 0.0) || !std::isfinite(inflation)) {
    throw InputError("inflation must be positive and finite");
  }
  if (inflation >= region_gap(rs) / 2.0) throw InputError("contour would touch another region");

  const auto& members = rs[r].disk_indices;
  const double tol = 1e-12 * (rs.scale() + inflation);

  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < members.size(); ++a) {
    const Disk& di = rs.disks()[members[a]];
    const double ri = di.radius + inflation;
    std::vector<Interval> covered;
    bool swallowed = false;
    for (std::size_t b = 0; b < members.size() && !swallowed; ++b) {
      if (a == b) continue;
      const Disk& dj = rs.disks()[members[b]];
      const double rj = dj.radius + inflation;
      const Complex offset = dj.center - di.center;
      const double d = std::abs(offset);
      if (d <= tol && std::abs(ri - rj) <= tol) {
        // Coincident circles: the lower index keeps the boundary.
        swallowed = b < a;
        continue;
      }
      if (d + ri <= rj + tol) {
        swallowed = true;
        continue;
      }
      if (d + rj <= ri + tol || d >= ri + rj) continue;
      const double cos_half = std::clamp((ri * ri + d * d - rj * rj) / (2.0 * ri * d), -1.0, 1.0);
      const double half = std::acos(cos_half);
      const double phi = std::arg(offset);
      add_wrapped(phi - half, phi + half, covered);
    }
    if (swallowed) continue;
    for (const auto& iv : complement(std::move(covered))) {
      if (iv.hi - iv.lo <= 1e-14) continue;
      arcs.push_back(Arc{di.center, ri, iv.lo, iv.hi});
    }
  }

  // Stitch arcs into closed loops by matching each end to the nearest start.
  const double join_tol = 1e-7 * (rs.scale() + inflation);
  Contour contour;
  std::vector<bool> used(arcs.size(), false);
  for (std::size_t first = 0; first < arcs.size(); ++first) {
    if (used[first]) continue;
    std::vector<Arc> loop{arcs[first]};
    used[first] = true;
    if (arcs[first].sweep() >= kTwoPi) {
      contour.loops.push_back(std::move(loop));
      continue;
    }
    for (;;) {
      const Complex tail = loop.back().end();
      std::size_t best = arcs.size();
      double best_dist = std::abs(tail - arcs[first].start());
      bool closes = true;
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (used[k] || arcs[k].sweep() >= kTwoPi) continue;
        const double dist = std::abs(tail - arcs[k].start());
        if (dist < best_dist) {
          best_dist = dist;
          best = k;
          closes = false;
        }
      }
      if (best_dist > join_tol) throw NumericalError("contour stitching failed");
      if (closes) break;
      used[best] = true;
      loop.push_back(arcs[best]);
    }
    contour.loops.push_back(std::move(loop));
  }
  return contour;
}

}  // namespace gersh
