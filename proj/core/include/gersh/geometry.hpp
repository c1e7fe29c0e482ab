#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

/// Closed Gershgorin disk {z : |z - center| <= radius} of one matrix row.
struct Disk {
  Complex center;
  double radius = 0.0;
  std::size_t row = 0;  // zero-based source row

  friend bool operator==(const Disk&, const Disk&) = default;
};

/// Disk i is centered at a_ii with radius sum_{j != i} |a_ij|.
std::vector<Disk> gershgorin_disks(const ComplexMatrix& a);

struct Region {
  /// Positions in RegionSet::disks(), ascending.
  std::vector<std::size_t> disk_indices;

  std::size_t multiplicity() const noexcept { return disk_indices.size(); }
};

/// Connected components of a union of closed disks. Regions are ordered by
/// their smallest disk index; disk indices within a region ascend.
class RegionSet {
 public:
  RegionSet(std::vector<Disk> disks, std::vector<Region> regions);

  std::span<const Disk> disks() const noexcept { return disks_; }
  std::span<const Region> regions() const noexcept { return regions_; }
  std::size_t size() const noexcept { return regions_.size(); }
  const Region& operator[](std::size_t r) const { return regions_[r]; }

  /// 1 + max_i (|c_i| + r_i); the length scale for absolute tolerances.
  double scale() const noexcept { return scale_; }

  /// Region holding disk position `disk`.
  std::size_t region_of_disk(std::size_t disk) const { return region_of_disk_[disk]; }

 private:
  std::vector<Disk> disks_;
  std::vector<Region> regions_;
  std::vector<std::size_t> region_of_disk_;
  double scale_ = 1.0;
};

/// Union-find over the disk intersection graph. Tangent disks (within
/// 1e-12 * scale) are connected.
RegionSet connected_regions(std::vector<Disk> disks);

/// Sentinel returned by region_gap for a single region.
inline constexpr double kUnboundedGap = std::numeric_limits<double>::infinity();

/// Smallest clearance |c_i - c_j| - r_i - r_j between disks of distinct
/// regions, or kUnboundedGap when there is only one region.
double region_gap(const RegionSet& rs);

/// True iff |z - c_i| <= r_i + 1e-9 * scale for some disk of region r.
bool contains(const RegionSet& rs, std::size_t r, Complex z);

/// Region containing z, if any.
std::optional<std::size_t> region_containing(const RegionSet& rs, Complex z);

/// Counter-clockwise (about its own center) circular arc. Angles in radians,
/// end_angle > start_angle.
struct Arc {
  Complex center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;

  Complex point_at(double angle) const noexcept;
  Complex start() const noexcept { return point_at(start_angle); }
  Complex end() const noexcept { return point_at(end_angle); }
  double sweep() const noexcept { return end_angle - start_angle; }
};

/// Positively oriented boundary of a planar domain, as one or more closed
/// loops of arcs. The outer boundary runs counter-clockwise; loops around
/// holes in a union of disks run clockwise, so the winding number of the
/// whole contour about a point is 1 inside the domain and 0 outside.
struct Contour {
  std::vector<std::vector<Arc>> loops;

  static Contour circle(Complex center, double radius);

  std::size_t arc_count() const noexcept;
  /// Winding number of the contour about z, evaluated from the arcs exactly
  /// (no sampling). Throws InputError if z lies on the contour.
  int winding_number(Complex z) const;
};

/// Default contour inflation for a region set: gap / 3 with two or more
/// regions, otherwise 0.1 * (1 + max radius).
double default_inflation(const RegionSet& rs);

/// Boundary of the union of region r's disks, each inflated by `inflation`.
/// Throws InputError("contour would touch another region") when
/// inflation >= gap / 2, and InputError for non-positive inflation.
Contour region_contour(const RegionSet& rs, std::size_t r, double inflation);
Contour region_contour(const RegionSet& rs, std::size_t r);

}  // namespace gersh
