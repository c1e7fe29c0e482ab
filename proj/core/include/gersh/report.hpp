#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gersh/geometry.hpp"
#include "gersh/homotopy.hpp"
#include "gersh/matrix.hpp"

namespace gersh {

/// Result of the full verification of one matrix, ordered by the smallest
/// disk index of each region.
struct RegionReport {
  std::size_t n = 0;
  std::vector<RegionVerdict> regions;
  std::vector<Complex> eigenvalues;
  double gap = kUnboundedGap;
  double inflation = 0.0;
  bool part1_containment = false;
  bool part2_agreement = false;
};

RegionReport make_region_report(const ComplexMatrix& a, const VerifyOptions& options = {});

// Text and JSON renderings. Row and disk numbers are one-based in all
// rendered output.
std::string report_text(const RegionReport& report);
std::string report_json(const RegionReport& report);

std::string disks_text(const std::vector<Disk>& disks);
std::string disks_json(const std::vector<Disk>& disks);

std::string regions_text(const RegionSet& rs);
std::string regions_json(const RegionSet& rs);

std::string trace_text(const HomotopyTrace& trace, const std::vector<EigenPath>& paths);
std::string trace_json(const HomotopyTrace& trace, const std::vector<EigenPath>& paths);

}  // namespace gersh
