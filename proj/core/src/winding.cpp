#include "gersh/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gersh/error.hpp"

namespace gersh {
namespace {

constexpr double kPi = std::numbers::pi;

class PhaseSampler {
 public:
  explicit PhaseSampler(const ComplexMatrix& a) : a_(a), floor_(spectrum_pivot_floor(a)) {}

  // det(zI - A) / |det(zI - A)|.
  Complex operator()(Complex z) {
    ++samples_;
    ComplexMatrix shifted = -1.0 * a_;
    for (std::size_t i = 0; i < a_.size(); ++i) shifted(i, i) += z;
    try {
      return LuFactorization(std::move(shifted), floor_).determinant_phase();
    } catch (const NumericalError&) {
      throw NumericalError("eigenvalue on contour");
    }
  }

  std::size_t samples() const noexcept { return samples_; }

 private:
  const ComplexMatrix& a_;
  double floor_;
  std::size_t samples_ = 0;
};

struct Segment {
  const Arc* arc;
  double from;
  double to;
  Complex phase_from;
  Complex phase_to;
};

}  // namespace

WindingCount count_inside(const ComplexMatrix& a, const Contour& gamma,
                          const WindingOptions& options) {
  PhaseSampler phase(a);
  double total = 0.0;
  std::size_t segments = 0;

  for (const auto& loop : gamma.loops) {
    // Sample every arc of the loop at its initial density; the junction
    // between consecutive arcs is a segment of its own, so the loop closes.
    struct Node {
      const Arc* arc;
      double angle;
      Complex phase;
    };
    std::vector<Node> nodes;
    for (const auto& arc : loop) {
      const auto pieces = std::max<std::size_t>(
          options.min_samples_per_arc,
          static_cast<std::size_t>(std::ceil(options.samples_per_turn * arc.sweep() / (2.0 * kPi))));
      for (std::size_t k = 0; k <= pieces; ++k) {
        const double angle = arc.start_angle + arc.sweep() * static_cast<double>(k) /
                                                   static_cast<double>(pieces);
        nodes.push_back({&arc, angle, phase(arc.point_at(angle))});
      }
    }

    std::vector<Segment> stack;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const Node& p = nodes[k];
      const Node& q = nodes[(k + 1) % nodes.size()];
      if (p.arc != q.arc) {
        // Junction between arcs: coincident up to rounding.
        total += std::arg(q.phase * std::conj(p.phase));
        ++segments;
        continue;
      }
      stack.push_back({p.arc, p.angle, q.angle, p.phase, q.phase});
      while (!stack.empty()) {
        const Segment s = stack.back();
        stack.pop_back();
        if (++segments > options.segment_budget) throw NumericalError("quadrature not converged");
        const double step = std::arg(s.phase_to * std::conj(s.phase_from));
        if (std::abs(step) < kPi / 2.0) {
          total += step;
          continue;
        }
        const double mid = 0.5 * (s.from + s.to);
        const Complex phase_mid = phase(s.arc->point_at(mid));
        stack.push_back({s.arc, mid, s.to, phase_mid, s.phase_to});
        stack.push_back({s.arc, s.from, mid, s.phase_from, phase_mid});
      }
    }
  }

  const double raw = total / (2.0 * kPi);
  const double rounded = std::round(raw);
  WindingCount result{static_cast<int>(rounded), std::abs(raw - rounded), phase.samples()};
  if (result.residual > options.max_residual || result.count < 0 ||
      result.count > static_cast<int>(a.size())) {
    throw NumericalError("ambiguous winding");
  }
  return result;
}

std::vector<WindingCount> count_along_homotopy(const ComplexMatrix& a, const Contour& gamma,
                                               std::span<const double> t_grid,
                                               const WindingOptions& options) {
  if (t_grid.empty() || t_grid.front() != 0.0 || t_grid.back() != 1.0 ||
      !std::is_sorted(t_grid.begin(), t_grid.end())) {
    throw InputError("t grid must be sorted and run from 0 to 1");
  }
  std::vector<WindingCount> counts;
  counts.reserve(t_grid.size());
  for (double t : t_grid) counts.push_back(count_inside(homotopy_member(a, t), gamma, options));
  return counts;
}

std::vector<double> uniform_grid(std::size_t intervals) {
  if (intervals == 0) throw InputError("grid needs at least one interval");
  std::vector<double> grid(intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    grid[k] = static_cast<double>(k) / static_cast<double>(intervals);
  }
  grid.back() = 1.0;
  return grid;
}

}  // namespace gersh
