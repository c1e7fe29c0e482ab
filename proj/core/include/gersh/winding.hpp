#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gersh/geometry.hpp"
#include "gersh/matrix.hpp"

namespace gersh {

/// Argument-principle eigenvalue count m = (1/2 pi) * total change of
/// arg det(zI - A) around the contour.
struct WindingCount {
  int count = 0;
  /// |raw winding - count|; accepted counts have residual <= 0.1.
  double residual = 0.0;
  /// Sample points evaluated, including refinement.
  std::size_t samples_used = 0;
};

struct WindingOptions {
  /// Initial samples per full turn of arc angle (scaled for partial arcs).
  double samples_per_turn = 16.0;
  std::size_t min_samples_per_arc = 4;
  /// Total segment budget across refinement.
  std::size_t segment_budget = 1'000'000;
  double max_residual = 0.1;
};

/// Counts eigenvalues of A enclosed by the contour. The phase of
/// det(zI - A) is tracked along the contour from LU determinants; any segment
/// whose phase step reaches pi/2 is bisected.
///
/// Throws NumericalError with "eigenvalue on contour" (singular zI - A at a
/// sample), "quadrature not converged" (segment budget exhausted) or
/// "ambiguous winding" (residual above max_residual).
WindingCount count_inside(const ComplexMatrix& a, const Contour& gamma,
                          const WindingOptions& options = {});

/// count_inside(homotopy_member(A, t), gamma) for each t of the grid, which
/// must be sorted and run from 0 to 1.
std::vector<WindingCount> count_along_homotopy(const ComplexMatrix& a, const Contour& gamma,
                                               std::span<const double> t_grid,
                                               const WindingOptions& options = {});

/// n + 1 equally spaced points 0, 1/n, ..., 1.
std::vector<double> uniform_grid(std::size_t intervals);

}  // namespace gersh
