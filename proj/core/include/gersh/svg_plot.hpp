#pragma once

#include <optional>
#include <string>

#include "gersh/homotopy.hpp"
#include "gersh/matrix.hpp"

namespace gersh {

struct PlotOptions {
  std::optional<double> inflation;
  TrackOptions track;
  int size_px = 640;
  int margin_px = 24;
};

/// SVG 1.1 drawing of the Gershgorin picture of A: disks (stroked circles,
/// zero-radius disks as markers of class "disk-point"), inflated region
/// boundaries, homotopy eigenvalue paths (polylines) and oracle eigenvalues
/// (crosses). Output depends only on A and the options.
std::string render_svg(const ComplexMatrix& a, const PlotOptions& options = {});

}  // namespace gersh
