#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "chirality/bounds_lab.hpp"
#include "chirality/chirality.hpp"
#include "chirality/error.hpp"
#include "chirality/phase_atlas.hpp"
#include "chirality/polygon_io.hpp"

namespace chirality::cli {

namespace {

struct RunConfig {
  std::size_t grid = 2048;
  double refine_tol = 1e-10;
  std::uint64_t seed = 1;
  std::string output_path;
  std::string format = "csv";
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Sends the report either to the --out file or to the console stream.
void emit(const RunConfig& cfg, std::ostream& console, const std::function<void(std::ostream&)>& write) {
  if (cfg.output_path.empty()) {
    write(console);
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IOError, "cannot open " + cfg.output_path + " for writing");
  write(file);
  file.flush();
  if (!file) throw Error(ErrorCode::IOError, "write to " + cfg.output_path + " failed");
}

Alpha1Options alpha_options(const RunConfig& cfg) {
  Alpha1Options o;
  o.grid = cfg.grid;
  o.refine_tol = cfg.refine_tol;
  return o;
}

void cmd_alpha(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  const ConvexPolygon k = read_polygon_file(input);
  const double a0 = asymmetry_alpha0(k).value;
  const ChiralityResult a1 = alpha1_numeric(k, alpha_options(cfg));
  const double a2 = alpha2(k).value;
  const double theta = a1.axis ? a1.axis->theta() : 0.0;
  const std::string_view tag = to_string(a1.classification);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "text") {
      os << "alpha0=" << fixed6(a0) << ", alpha1=" << fixed6(a1.value) << ", alpha2=" << fixed6(a2)
         << ", axis_theta=" << sig12(theta) << ", axis=" << tag << '\n';
    } else {
      os << "alpha0,alpha1,alpha2,axis_theta,axis\n"
         << sig12(a0) << ',' << sig12(a1.value) << ',' << sig12(a2) << ',' << sig12(theta) << ',' << tag << '\n';
    }
  });
}

void cmd_profile(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  const ConvexPolygon k = read_polygon_file(input);
  const std::vector<ProfileSample> samples = sample_profile(k, cfg.grid, 0);
  emit(cfg, out, [&](std::ostream& os) { write_profile_csv(os, samples); });
}

void cmd_phase(const std::string& family_name, std::size_t resolution, const RunConfig& cfg, std::ostream& out) {
  const Family family = parse_family(family_name);
  if (cfg.format == "text") throw Error(ErrorCode::ParseError, "phase supports --format csv or svg");
  const std::vector<GridCell> cells = phase_grid(family, resolution);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "svg") {
      write_grid_svg(os, family, cells);
    } else {
      write_grid_csv(os, cells);
    }
  });
}

bool cmd_bounds(std::size_t count, std::optional<double> witness, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  std::vector<BoundReport> reports;
  if (witness) {
    const ConvexPolygon k = make_asymmetry_witness(*witness);
    BoundReport r = check_main_bounds(k, alpha_options(cfg));
    r.body_id = "witness-" + sig12(*witness);
    BoundCheck c{"|alpha0-beta|<=0.01", std::abs(r.alpha0 - *witness), 0.01, 0.0, false};
    c.margin = c.rhs - c.lhs;
    c.pass = c.margin >= 0.0;
    r.checks.push_back(c);
    reports.push_back(std::move(r));
  } else {
    CampaignOptions o;
    o.bodies = count;
    o.pairs = count * 2 / 5;
    o.symmetric = count * 3 / 5;
    o.seed = cfg.seed;
    o.alpha1 = alpha_options(cfg);
    reports = run_campaign(o);
  }
  emit(cfg, out, [&](std::ostream& os) { write_reports_csv(os, reports); });

  std::size_t checks = 0;
  std::size_t failed = 0;
  for (const BoundReport& r : reports) {
    for (const BoundCheck& c : r.checks) {
      ++checks;
      if (!c.pass) ++failed;
    }
  }
  err << reports.size() << " bodies, " << checks << " checks, " << failed << " failed\n";
  return failed == 0;
}

void cmd_witness(double beta, std::size_t sides, const RunConfig& cfg, std::ostream& out) {
  const ConvexPolygon k = make_asymmetry_witness(beta, sides);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "text") {
      write_polygon(os, k, "asymmetry witness beta=" + sig12(beta));
    } else {
      os << "x,y\n";
      for (const Point2& p : k.vertices()) os << sig12(p.x) << ',' << sig12(p.y) << '\n';
    }
  });
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::OutOfRange:
    case ErrorCode::OutOfDomain: return kUsage;
    case ErrorCode::DegenerateInput:
    case ErrorCode::DegenerateShape:
    case ErrorCode::ZeroDirection:
    case ErrorCode::OriginNotInterior:
    case ErrorCode::NotATriangleOrParallelogram:
    case ErrorCode::NotAParallelogram: return kDegenerate;
    case ErrorCode::IOError: return kIOFailure;
    case ErrorCode::SolverFailure: return kSolverFailure;
  }
  return kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minkowski chirality of convex polygons", "chirality"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub, bool grid) {
    if (grid) {
      sub->add_option("--grid", cfg.grid, "Profile samples over [0, pi)")->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
      sub->add_option("--tol", cfg.refine_tol, "Golden-section tolerance in radians, in (0, 1e-4]")
          ->check(CLI::Range(0.0, 1e-4));
    }
    sub->add_option("--out", cfg.output_path, "Output file (default stdout)");
  };

  std::string input;
  CLI::App* alpha = app.add_subcommand("alpha", "alpha_0, alpha_1, alpha_2 and the optimal axis of a polygon file");
  alpha->add_option("input", input, "Polygon file")->required();
  common(alpha, true);
  alpha->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "text"}));

  CLI::App* profile = app.add_subcommand("profile", "R(K, reflection of K) sampled over axis angles");
  profile->add_option("input", input, "Polygon file")->required();
  common(profile, true);
  profile->add_option("--format", cfg.format)->check(CLI::IsMember({"csv"}));

  std::string family;
  std::size_t resolution = 200;
  CLI::App* phase = app.add_subcommand("phase", "Phase diagram grid for a shape family");
  phase->add_option("family", family, "triangle-xy | triangle-sides | parallelogram")
      ->required()
      ->check(CLI::IsMember({"triangle-xy", "triangle-sides", "parallelogram"}));
  phase->add_option("resolution", resolution, "Cells per side")->check(CLI::Range(std::size_t{16}, std::size_t{4096}));
  common(phase, false);
  phase->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "svg"}));

  std::size_t count = 100;
  std::optional<double> witness_beta;
  CLI::App* bounds = app.add_subcommand("bounds", "Randomized inequality checks");
  bounds->add_option("--count", count, "Random bodies (plus 2/5 as many pairs, 3/5 as many symmetric bodies)");
  bounds->add_option("--seed", cfg.seed, "Generator seed");
  bounds->add_option("--witness", witness_beta, "Check the asymmetry witness for this beta instead")
      ->check(CLI::Range(1.0, 2.0));
  common(bounds, true);
  bounds->add_option("--format", cfg.format)->check(CLI::IsMember({"csv"}));

  double beta = 1.5;
  std::size_t sides = 720;
  CLI::App* witness = app.add_subcommand("witness", "Write the asymmetry witness polygon");
  witness->add_option("beta", beta, "Scale of the triangle, in [1, 2]")->required()->check(CLI::Range(1.0, 2.0));
  witness->add_option("--sides", sides, "Sides of the disk polygon")->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20));
  common(witness, false);
  witness->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!(cfg.refine_tol > 0.0)) {
    err << "--tol: must be positive\n";
    return kUsage;
  }

  try {
    if (alpha->parsed()) cmd_alpha(input, cfg, out);
    if (profile->parsed()) cmd_profile(input, cfg, out);
    if (phase->parsed()) cmd_phase(family, resolution, cfg, out);
    if (bounds->parsed() && !cmd_bounds(count, witness_beta, cfg, out, err)) return kCheckFailed;
    if (witness->parsed()) cmd_witness(beta, sides, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kOk;
}

}  // namespace chirality::cli
