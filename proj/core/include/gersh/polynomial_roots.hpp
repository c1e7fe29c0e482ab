#pragma once

#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

struct RootFinderOptions {
  int max_iterations = 500;
  /// Converged when every Aberth step is below step_tolerance * (1 + R), R
  /// being the radius of the starting circle.
  double step_tolerance = 1e-13;
  int polish_steps = 2;
  /// Roots closer than cluster_tolerance * (1 + |z|) are merged.
  double cluster_tolerance = 1e-7;
};

/// Roots of a monic polynomial by Aberth-Ehrlich simultaneous iteration with
/// Newton polishing. Roots belonging to a numerically multiple root are
/// replaced by their mean, repeated with the multiplicity. The result is in
/// canonical order. Throws NumericalError("oracle did not converge").
std::vector<Complex> polynomial_roots(const MonicPolynomial& p,
                                      const RootFinderOptions& options = {});

}  // namespace gersh
