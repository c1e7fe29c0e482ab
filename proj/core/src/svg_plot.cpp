#include "gersh/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "gersh/geometry.hpp"

namespace gersh {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// World (complex plane) to pixel mapping with a common scale on both axes.
class Viewport {
 public:
  Viewport(double xmin, double xmax, double ymin, double ymax, int size, int margin)
      : margin_(margin) {
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    scale_ = (size - 2.0 * margin) / span;
    // Center the shorter extent.
    x0_ = xmin - 0.5 * (span - (xmax - xmin));
    y1_ = ymax + 0.5 * (span - (ymax - ymin));
  }
  double x(Complex z) const { return margin_ + (z.real() - x0_) * scale_; }
  double y(Complex z) const { return margin_ + (y1_ - z.imag()) * scale_; }
  double len(double world) const { return world * scale_; }

 private:
  double margin_;
  double scale_ = 1.0;
  double x0_ = 0.0;
  double y1_ = 0.0;
};

std::string arc_path(const Contour& contour, const Viewport& vp) {
  std::ostringstream d;
  for (const auto& loop : contour.loops) {
    d << "M" << fmt(vp.x(loop.front().start())) << "," << fmt(vp.y(loop.front().start()));
    for (const Arc& arc : loop) {
      // Pieces of at most a half turn; world CCW is screen clockwise (sweep 1).
      const int pieces = std::max(1, static_cast<int>(std::ceil(arc.sweep() / std::numbers::pi - 1e-12)));
      const double r = vp.len(arc.radius);
      for (int k = 1; k <= pieces; ++k) {
        const Complex p = arc.point_at(arc.start_angle + arc.sweep() * k / pieces);
        d << " A" << fmt(r) << "," << fmt(r) << " 0 0 1 " << fmt(vp.x(p)) << "," << fmt(vp.y(p));
      }
    }
    d << " Z";
  }
  return d.str();
}

}  // namespace

std::string render_svg(const ComplexMatrix& a, const PlotOptions& options) {
  const RegionSet rs = connected_regions(gershgorin_disks(a));
  const double inflation = options.inflation.value_or(default_inflation(rs));
  const SpectrumMultiset spectrum = eigenvalues_oracle(a);
  const HomotopyTrace trace = track(a, rs, options.track);
  const std::vector<EigenPath> paths = extract_paths(trace, rs);

  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  auto extend = [&](Complex c, double r) {
    xmin = std::min(xmin, c.real() - r);
    xmax = std::max(xmax, c.real() + r);
    ymin = std::min(ymin, c.imag() - r);
    ymax = std::max(ymax, c.imag() + r);
  };
  for (const Disk& d : rs.disks()) extend(d.center, d.radius + inflation);
  for (const Complex& z : spectrum.values()) extend(z, 0.0);
  const Viewport vp(xmin, xmax, ymin, ymax, options.size_px, options.margin_px);

  std::ostringstream svg;
  const int size = options.size_px;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\"/>\n";

  // Axes through the origin when visible.
  if (xmin <= 0.0 && xmax >= 0.0) {
    const double x = vp.x(0.0);
    svg << "<line class=\"axis\" x1=\"" << fmt(x) << "\" y1=\"0.000\" x2=\"" << fmt(x) << "\" y2=\""
        << fmt(size) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  }
  if (ymin <= 0.0 && ymax >= 0.0) {
    const double y = vp.y(0.0);
    svg << "<line class=\"axis\" x1=\"0.000\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(size)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  }

  svg << "<g id=\"regions\">\n";
  for (std::size_t r = 0; r < rs.size(); ++r) {
    svg << "<path class=\"region\" id=\"region-" << r + 1 << "\" d=\""
        << arc_path(region_contour(rs, r, inflation), vp)
        << "\" fill=\"#4a90d9\" fill-opacity=\"0.08\" fill-rule=\"evenodd\" stroke=\"#4a90d9\""
           " stroke-dasharray=\"4,3\" stroke-width=\"1\"/>\n";
  }
  svg << "</g>\n<g id=\"disks\">\n";
  for (const Disk& d : rs.disks()) {
    const Complex c = d.center;
    if (d.radius > 0.0) {
      svg << "<circle class=\"disk\" id=\"disk-" << d.row + 1 << "\" cx=\"" << fmt(vp.x(c))
          << "\" cy=\"" << fmt(vp.y(c)) << "\" r=\"" << fmt(vp.len(d.radius))
          << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    } else {
      svg << "<circle class=\"disk-point\" id=\"disk-" << d.row + 1 << "\" cx=\"" << fmt(vp.x(c))
          << "\" cy=\"" << fmt(vp.y(c)) << "\" r=\"3.000\" fill=\"#333333\"/>\n";
    }
  }
  svg << "</g>\n<g id=\"paths\">\n";
  for (const EigenPath& p : paths) {
    svg << "<polyline class=\"path\" id=\"path-" << p.index + 1 << "\" points=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      if (i) svg << " ";
      svg << fmt(vp.x(p.points[i].value)) << "," << fmt(vp.y(p.points[i].value));
    }
    svg << "\" fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</g>\n<g id=\"eigenvalues\">\n";
  constexpr double kArm = 4.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double x = vp.x(spectrum[k]);
    const double y = vp.y(spectrum[k]);
    svg << "<path class=\"eigenvalue\" id=\"eig-" << k + 1 << "\" data-x=\"" << fmt(x)
        << "\" data-y=\"" << fmt(y) << "\" d=\"M" << fmt(x - kArm) << "," << fmt(y - kArm) << " L"
        << fmt(x + kArm) << "," << fmt(y + kArm) << " M" << fmt(x - kArm) << "," << fmt(y + kArm)
        << " L" << fmt(x + kArm) << "," << fmt(y - kArm)
        << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace gersh
