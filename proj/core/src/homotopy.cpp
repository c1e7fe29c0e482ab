#include "gersh/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gersh/error.hpp"
#include "gersh/matching.hpp"

namespace gersh {
namespace {

std::vector<int> count_by_region(const RegionSet& rs, std::span<const Complex> values) {
  std::vector<int> counts(rs.size(), 0);
  for (const Complex& v : values) {
    const auto r = region_containing(rs, v);
    if (!r) throw NumericalError("eigenvalue outside every region");
    ++counts[*r];
  }
  return counts;
}

}  // namespace

double default_step_epsilon(const ComplexMatrix& a, const RegionSet& rs) {
  const double gap = region_gap(rs);
  if (gap != kUnboundedGap) return gap / 3.0;
  double spread = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      spread = std::max(spread, std::abs(a(i, i) - a(j, j)));
    }
  }
  return 0.1 * (1.0 + spread);
}

HomotopyTrace track(const ComplexMatrix& a, const TrackOptions& options) {
  return track(a, connected_regions(gershgorin_disks(a)), options);
}

HomotopyTrace track(const ComplexMatrix& a, const RegionSet& rs, const TrackOptions& options) {
  const double epsilon = options.epsilon.value_or(default_step_epsilon(a, rs));
  if (!(epsilon > 0.0)) throw InputError("step epsilon must be positive");

  HomotopyTrace trace;
  trace.step_epsilon = epsilon;

  double t = 0.0;
  SpectrumMultiset start = eigenvalues_oracle(homotopy_member(a, 0.0));
  std::vector<Complex> current(start.values().begin(), start.values().end());
  trace.t_values.push_back(t);
  trace.region_counts.push_back(count_by_region(rs, current));
  trace.chains.push_back(current);

  double step = 1.0;
  while (t < 1.0) {
    const double next = std::min(1.0, t + step);
    const SpectrumMultiset candidate = eigenvalues_oracle(homotopy_member(a, next));
    const MatchResult match = match_values(current, candidate.values());
    if (!(match.distance < epsilon)) {
      step *= 0.5;
      if (step < options.min_step) {
        throw NumericalError("step underflow at t=" + std::to_string(t));
      }
      continue;
    }
    std::vector<Complex> chained(current.size());
    for (std::size_t j = 0; j < current.size(); ++j) chained[j] = candidate[match.assignment[j]];
    current = std::move(chained);
    t = next;
    trace.t_values.push_back(t);
    trace.region_counts.push_back(count_by_region(rs, current));
    trace.chains.push_back(current);
    trace.step_distances.push_back(match.distance);
    step = std::min(1.0, 2.0 * step);
  }
  return trace;
}

std::vector<EigenPath> extract_paths(const HomotopyTrace& trace, const RegionSet& rs) {
  if (trace.chains.empty()) throw InputError("empty trace");
  const std::size_t n = trace.chains.front().size();
  std::vector<EigenPath> paths(n);
  for (std::size_t j = 0; j < n; ++j) {
    EigenPath& path = paths[j];
    path.index = j;
    const auto home = region_containing(rs, trace.chains.front()[j]);
    if (!home) throw NumericalError("path escapes region");
    path.home_region = *home;
    path.points.reserve(trace.chains.size());
    for (std::size_t i = 0; i < trace.chains.size(); ++i) {
      const Complex value = trace.chains[i][j];
      if (!contains(rs, path.home_region, value)) throw NumericalError("path escapes region");
      path.points.push_back({trace.t_values[i], value});
    }
  }
  return paths;
}

Part2Report verify_gershgorin_part2(const ComplexMatrix& a, const VerifyOptions& options) {
  const RegionSet rs = connected_regions(gershgorin_disks(a));
  const HomotopyTrace trace = track(a, rs, options.track);
  const SpectrumMultiset spectrum = eigenvalues_oracle(a);
  const double inflation = options.inflation.value_or(default_inflation(rs));

  Part2Report report;
  std::vector<int> oracle_counts(rs.size(), 0);
  report.containment = true;
  for (const Complex& v : spectrum.values()) {
    if (const auto r = region_containing(rs, v)) {
      ++oracle_counts[*r];
    } else {
      report.containment = false;
    }
  }

  report.all_agree = true;
  for (std::size_t r = 0; r < rs.size(); ++r) {
    RegionVerdict verdict;
    verdict.disk_indices = rs[r].disk_indices;
    verdict.multiplicity = static_cast<int>(rs[r].multiplicity());
    verdict.homotopy_count = trace.region_counts.back()[r];
    const WindingCount winding = count_inside(a, region_contour(rs, r, inflation), options.winding);
    verdict.winding_count = winding.count;
    verdict.winding_residual = winding.residual;
    verdict.oracle_count = oracle_counts[r];
    verdict.agree = verdict.multiplicity == verdict.homotopy_count &&
                    verdict.multiplicity == verdict.winding_count &&
                    verdict.multiplicity == verdict.oracle_count;
    report.all_agree = report.all_agree && verdict.agree;
    report.regions.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace gersh
