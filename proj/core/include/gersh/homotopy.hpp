#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gersh/geometry.hpp"
#include "gersh/matrix.hpp"
#include "gersh/winding.hpp"

namespace gersh {

/// Accepted subdivision 0 = t_0 < ... < t_N = 1 of the homotopy
/// A(t) = A0 + t (A - A0), with eigenvalues chained across steps.
struct HomotopyTrace {
  std::vector<double> t_values;
  /// chains[i][j] is eigenvalue j of A(t_i); column j follows one matched
  /// chain, so |chains[i][j] - chains[i+1][j]| < step_epsilon.
  std::vector<std::vector<Complex>> chains;
  /// region_counts[i][r]: eigenvalues of A(t_i) inside region r of A.
  std::vector<std::vector<int>> region_counts;
  double step_epsilon = 0.0;
  /// Bottleneck distance of each accepted step (size N).
  std::vector<double> step_distances;
};

struct TrackOptions {
  /// Overrides the step acceptance epsilon (gap / 3, or 0.1 (1 + spread)
  /// for a single region).
  std::optional<double> epsilon;
  double min_step = 1e-6;
};

/// Acceptance epsilon used by track() for the regions of A.
double default_step_epsilon(const ComplexMatrix& a, const RegionSet& rs);

/// Adaptive subdivision of [0, 1]: a step t -> t' is accepted iff the
/// bottleneck distance between sigma(A(t)) and sigma(A(t')) is below epsilon,
/// otherwise the step is halved; accepted steps double the next trial step.
/// Throws NumericalError("step underflow") below options.min_step and
/// NumericalError if an eigenvalue falls outside every region.
HomotopyTrace track(const ComplexMatrix& a, const TrackOptions& options = {});
HomotopyTrace track(const ComplexMatrix& a, const RegionSet& rs, const TrackOptions& options = {});

struct PathPoint {
  double t;
  Complex value;
};

/// One discrete eigenvalue chain of a trace.
struct EigenPath {
  std::size_t index = 0;
  std::vector<PathPoint> points;
  std::size_t home_region = 0;
};

/// Splits a trace into n chains. The home region is the region holding the
/// t = 0 point; every later point is checked against it. Throws
/// NumericalError("path escapes region").
std::vector<EigenPath> extract_paths(const HomotopyTrace& trace, const RegionSet& rs);

struct RegionVerdict {
  std::vector<std::size_t> disk_indices;
  int multiplicity = 0;
  int homotopy_count = 0;
  int winding_count = 0;
  int oracle_count = 0;
  double winding_residual = 0.0;
  bool agree = false;
};

struct Part2Report {
  std::vector<RegionVerdict> regions;
  /// Every oracle eigenvalue lies in some region.
  bool containment = false;
  bool all_agree = false;
};

struct VerifyOptions {
  std::optional<double> inflation;
  TrackOptions track;
  WindingOptions winding;
};

/// Computes, per region, the disk multiplicity, the final homotopy count,
/// the argument-principle count on the region contour, and the oracle
/// membership count; `agree` is set when all four match.
Part2Report verify_gershgorin_part2(const ComplexMatrix& a, const VerifyOptions& options = {});

}  // namespace gersh
