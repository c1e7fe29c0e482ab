#include "gersh/report.hpp"

#include <sstream>

#include <json.hpp>

#include "gersh/matrix_io.hpp"

namespace gersh {

using nlohmann::ordered_json;

namespace {

std::string complex_text(Complex z) {
  return "(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")";
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json one_based(const std::vector<std::size_t>& indices) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

std::string list_text(const std::vector<std::size_t>& indices) {
  std::string s = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices[k] + 1);
  }
  return s + "}";
}

ordered_json gap_json(double gap) {
  return gap == kUnboundedGap ? ordered_json(nullptr) : ordered_json(gap);
}

std::string gap_text(double gap) {
  return gap == kUnboundedGap ? "unbounded (single region)" : format_number(gap);
}

}  // namespace

RegionReport make_region_report(const ComplexMatrix& a, const VerifyOptions& options) {
  const RegionSet rs = connected_regions(gershgorin_disks(a));
  const Part2Report part2 = verify_gershgorin_part2(a, options);
  RegionReport report;
  report.n = a.size();
  report.regions = part2.regions;
  const SpectrumMultiset spectrum = eigenvalues_oracle(a);
  report.eigenvalues.assign(spectrum.values().begin(), spectrum.values().end());
  report.gap = region_gap(rs);
  report.inflation = options.inflation.value_or(default_inflation(rs));
  report.part1_containment = part2.containment;
  report.part2_agreement = part2.all_agree;
  return report;
}

std::string report_text(const RegionReport& report) {
  std::ostringstream out;
  out << "matrix: " << report.n << "x" << report.n << "\n";
  out << "regions: " << report.regions.size() << "  gap: " << gap_text(report.gap)
      << "  contour inflation: " << format_number(report.inflation) << "\n";
  for (std::size_t r = 0; r < report.regions.size(); ++r) {
    const RegionVerdict& v = report.regions[r];
    out << "region " << r + 1 << ": disks " << list_text(v.disk_indices) << "  m=" << v.multiplicity
        << "  oracle=" << v.oracle_count << "  winding=" << v.winding_count
        << "  homotopy=" << v.homotopy_count << "  " << (v.agree ? "agree" : "DISAGREE") << "\n";
  }
  out << "eigenvalues:";
  for (const Complex& z : report.eigenvalues) out << " " << complex_text(z);
  out << "\n";
  out << "part 1 (containment): " << (report.part1_containment ? "verified" : "FAILED") << "\n";
  out << "part 2 (counting): " << (report.part2_agreement ? "agree" : "DISAGREE") << "\n";
  return out.str();
}

std::string report_json(const RegionReport& report) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["gap"] = gap_json(report.gap);
  doc["inflation"] = report.inflation;
  ordered_json regions = ordered_json::array();
  for (std::size_t r = 0; r < report.regions.size(); ++r) {
    const RegionVerdict& v = report.regions[r];
    ordered_json jr;
    jr["id"] = r + 1;
    jr["disks"] = one_based(v.disk_indices);
    jr["multiplicity"] = v.multiplicity;
    jr["oracle_count"] = v.oracle_count;
    jr["winding_count"] = v.winding_count;
    jr["homotopy_count"] = v.homotopy_count;
    jr["agree"] = v.agree;
    regions.push_back(std::move(jr));
  }
  doc["regions"] = std::move(regions);
  ordered_json eig = ordered_json::array();
  for (const Complex& z : report.eigenvalues) eig.push_back(complex_json(z));
  doc["eigenvalues"] = std::move(eig);
  doc["part1_containment"] = report.part1_containment;
  doc["part2_agreement"] = report.part2_agreement;
  return doc.dump(2) + "\n";
}

std::string disks_text(const std::vector<Disk>& disks) {
  std::ostringstream out;
  for (const Disk& d : disks) {
    out << "disk " << d.row + 1 << ": center " << complex_text(d.center) << "  radius "
        << format_number(d.radius) << "\n";
  }
  return out.str();
}

std::string disks_json(const std::vector<Disk>& disks) {
  ordered_json doc = ordered_json::array();
  for (const Disk& d : disks) {
    ordered_json jd;
    jd["row"] = d.row + 1;
    jd["center"] = complex_json(d.center);
    jd["radius"] = d.radius;
    doc.push_back(std::move(jd));
  }
  return doc.dump(2) + "\n";
}

std::string regions_text(const RegionSet& rs) {
  std::ostringstream out;
  out << "regions: " << rs.size() << "  gap: " << gap_text(region_gap(rs)) << "\n";
  for (std::size_t r = 0; r < rs.size(); ++r) {
    out << "region " << r + 1 << ": disks " << list_text(rs[r].disk_indices)
        << "  m=" << rs[r].multiplicity() << "\n";
  }
  return out.str();
}

std::string regions_json(const RegionSet& rs) {
  ordered_json doc;
  doc["gap"] = gap_json(region_gap(rs));
  ordered_json regions = ordered_json::array();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    ordered_json jr;
    jr["id"] = r + 1;
    jr["disks"] = one_based(rs[r].disk_indices);
    jr["multiplicity"] = rs[r].multiplicity();
    regions.push_back(std::move(jr));
  }
  doc["regions"] = std::move(regions);
  return doc.dump(2) + "\n";
}

std::string trace_text(const HomotopyTrace& trace, const std::vector<EigenPath>& paths) {
  std::ostringstream out;
  out << "steps: " << trace.t_values.size() - 1 << "  epsilon: " << format_number(trace.step_epsilon)
      << "\n";
  for (std::size_t i = 0; i < trace.t_values.size(); ++i) {
    out << "t=" << format_number(trace.t_values[i]) << "  counts:";
    for (int c : trace.region_counts[i]) out << " " << c;
    out << "\n";
  }
  for (const EigenPath& p : paths) {
    out << "path " << p.index + 1 << ": region " << p.home_region + 1 << "  "
        << complex_text(p.points.front().value) << " -> " << complex_text(p.points.back().value)
        << "\n";
  }
  return out.str();
}

std::string trace_json(const HomotopyTrace& trace, const std::vector<EigenPath>& paths) {
  ordered_json doc;
  doc["epsilon"] = trace.step_epsilon;
  doc["t"] = trace.t_values;
  doc["region_counts"] = trace.region_counts;
  ordered_json jp = ordered_json::array();
  for (const EigenPath& p : paths) {
    ordered_json path;
    path["index"] = p.index + 1;
    path["home_region"] = p.home_region + 1;
    ordered_json points = ordered_json::array();
    for (const PathPoint& pt : p.points) {
      points.push_back(ordered_json::array({pt.t, pt.value.real(), pt.value.imag()}));
    }
    path["points"] = std::move(points);
    jp.push_back(std::move(path));
  }
  doc["paths"] = std::move(jp);
  return doc.dump(2) + "\n";
}

}  // namespace gersh
