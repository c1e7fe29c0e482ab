#include "cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gersh/error.hpp"
#include "gersh/geometry.hpp"
#include "gersh/homotopy.hpp"
#include "gersh/matching.hpp"
#include "gersh/matrix_io.hpp"
#include "gersh/report.hpp"
#include "gersh/svg_plot.hpp"

namespace gersh::cli {
namespace {

struct Settings {
  std::string matrix_path;
  bool json = false;
  std::optional<double> inflation;
  std::optional<double> epsilon;
  std::string out_path;
  std::uint64_t seed = 0x5eed;
  int trials = 16;
};

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("matrix", s.matrix_path, "JSON matrix file")->required();
  cmd->add_flag("--json", s.json, "Machine-readable JSON output");
}

void add_inflation(CLI::App* cmd, Settings& s) {
  cmd->add_option("--inflation", s.inflation, "Region contour inflation (default gap/3)")
      ->check(CLI::PositiveNumber);
}

void add_epsilon(CLI::App* cmd, Settings& s, const std::string& what) {
  cmd->add_option("--epsilon", s.epsilon, what)->check(CLI::PositiveNumber);
}

// Writes `text` to --out when given, otherwise to `out`.
void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + s.out_path);
  file << text;
  if (!file) throw InputError("cannot write " + s.out_path);
}

VerifyOptions verify_options(const Settings& s) {
  VerifyOptions v;
  v.inflation = s.inflation;
  v.track.epsilon = s.epsilon;
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gershgorin disk localization and eigenvalue counting checks", "gersh"};
  app.require_subcommand(1);
  Settings s;

  auto* disks = app.add_subcommand("disks", "List the Gershgorin disks of a matrix");
  add_common(disks, s);
  disks->add_option("--out", s.out_path, "Write output to a file");

  auto* regions = app.add_subcommand("regions", "Connected regions of the disk union");
  add_common(regions, s);
  regions->add_option("--out", s.out_path, "Write output to a file");

  auto* report = app.add_subcommand(
      "report", "Verify per-region eigenvalue counts by oracle, winding number and homotopy");
  add_common(report, s);
  add_inflation(report, s);
  add_epsilon(report, s, "Homotopy step acceptance epsilon (default gap/3)");
  report->add_option("--out", s.out_path, "Write output to a file");

  auto* track_cmd = app.add_subcommand("track", "Track eigenvalue chains along A(t)");
  add_common(track_cmd, s);
  add_epsilon(track_cmd, s, "Homotopy step acceptance epsilon (default gap/3)");
  track_cmd->add_option("--out", s.out_path, "Write output to a file");

  auto* plot = app.add_subcommand("plot", "Render disks, regions, paths and eigenvalues as SVG");
  plot->add_option("matrix", s.matrix_path, "JSON matrix file")->required();
  add_inflation(plot, s);
  add_epsilon(plot, s, "Homotopy step acceptance epsilon (default gap/3)");
  plot->add_option("--out", s.out_path, "SVG output path (default: stdout)");

  auto* probe = app.add_subcommand(
      "probe", "Empirical delta for which perturbations of size delta move the spectrum < epsilon");
  add_common(probe, s);
  probe->add_option("--epsilon", s.epsilon, "Spectral tolerance")
      ->required()
      ->check(CLI::PositiveNumber);
  probe->add_option("--seed", s.seed, "Random seed");
  probe->add_option("--trials", s.trials, "Random perturbations per tested delta")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gersh: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const ComplexMatrix a = parse_matrix(s.matrix_path);

    if (disks->parsed()) {
      const auto d = gershgorin_disks(a);
      emit(s, s.json ? disks_json(d) : disks_text(d), out);
      return kExitOk;
    }
    if (regions->parsed()) {
      const RegionSet rs = connected_regions(gershgorin_disks(a));
      emit(s, s.json ? regions_json(rs) : regions_text(rs), out);
      return kExitOk;
    }
    if (report->parsed()) {
      RegionReport r;
      try {
        r = make_region_report(a, verify_options(s));
      } catch (const NumericalError& e) {
        err << "gersh: verification failed: " << e.what() << "\n";
        return kExitDisagreement;
      }
      emit(s, s.json ? report_json(r) : report_text(r), out);
      return r.part1_containment && r.part2_agreement ? kExitOk : kExitDisagreement;
    }
    if (track_cmd->parsed()) {
      const RegionSet rs = connected_regions(gershgorin_disks(a));
      TrackOptions opts;
      opts.epsilon = s.epsilon;
      const HomotopyTrace trace = track(a, rs, opts);
      const auto paths = extract_paths(trace, rs);
      emit(s, s.json ? trace_json(trace, paths) : trace_text(trace, paths), out);
      return kExitOk;
    }
    if (plot->parsed()) {
      PlotOptions opts;
      opts.inflation = s.inflation;
      opts.track.epsilon = s.epsilon;
      emit(s, render_svg(a, opts), out);
      return kExitOk;
    }
    if (probe->parsed()) {
      ContinuityProbeOptions opts;
      opts.trials = s.trials;
      opts.seed = s.seed;
      const double delta = pointwise_continuity_probe(a, *s.epsilon, opts);
      if (s.json) {
        emit(s,
             "{\"epsilon\": " + format_number(*s.epsilon) + ", \"delta\": " + format_number(delta) +
                 "}\n",
             out);
      } else {
        emit(s, "epsilon " + format_number(*s.epsilon) + "  empirical delta " +
                    format_number(delta) + "\n",
             out);
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "gersh: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "gersh: " << e.what() << "\n";
    return kExitDisagreement;
  }
  return kExitInputError;
}

}  // namespace gersh::cli
