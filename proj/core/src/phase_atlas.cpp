#include "chirality/phase_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "chirality/closed_form.hpp"
#include "chirality/error.hpp"
#include "chirality/parallel.hpp"

namespace chirality {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2;

template <class F>
double bisect_root(F f, double lo, double hi) {
  const bool rising = f(hi) > 0.0;
  for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

const PhaseConstants& constants() {
  static const PhaseConstants c = solve_constants();
  return c;
}

// -2 cos(theta) boundaries of the parallelogram diagram.
double f_jd(double r) { return (-r * r + std::sqrt(r * r * r * r + 6 * r * r - 7) + 1) / (2 * r); }

double angle_from_y(double y) { return std::acos(std::clamp(-0.5 * y, -1.0, 1.0)); }

struct Box {
  double x0, x1, y0, y1;
};

Box family_box(Family f) {
  switch (f) {
    case Family::Parallelogram: return {1.0, 3.0, kPi / 2, kPi};
    case Family::TriangleSides: return {0.0, 1.0, 0.5, 1.0};
    case Family::TriangleXY: return {0.5, 1.0, 0.0, 1.0};
  }
  return {0, 1, 0, 1};
}

const char* region_colour(Region r) {
  switch (r) {
    case Region::B: return "#4c72b0";
    case Region::D: return "#dd8452";
    case Region::J: return "#55a868";
    case Region::L: return "#4c72b0";
    case Region::S: return "#dd8452";
    case Region::P: return "#55a868";
  }
  return "#000000";
}

}  // namespace

PhaseConstants solve_constants() {
  PhaseConstants c;
  c.y0 = bisect_root([](double y) { return y * y * y * y + y * y * y - 1.0; }, 0.0, 1.0);
  c.x0 = bisect_root([](double x) { return 16 * x * x * x * x - 2 * x - 1.0; }, 0.5, 1.0);
  return c;
}

std::string_view to_string(Region r) noexcept {
  switch (r) {
    case Region::B: return "B";
    case Region::D: return "D";
    case Region::J: return "J";
    case Region::L: return "L";
    case Region::S: return "S";
    case Region::P: return "P";
  }
  return "?";
}

AxisTag region_axis(Region r) noexcept {
  switch (r) {
    case Region::B: return AxisTag::EdgeBisector;
    case Region::D: return AxisTag::DiagonalBisector;
    case Region::J: return AxisTag::JohnAxis;
    case Region::L: return AxisTag::BisectorLargestAngle;
    case Region::S: return AxisTag::BisectorSmallestAngle;
    case Region::P: return AxisTag::PerpLongestEdge;
  }
  return AxisTag::Numeric;
}

double sides_psi1(double y) {
  if (y <= kHalfSqrt2) return 0.0;
  if (y <= constants().y0) return std::sqrt((y * y * y + y - 1) / y);
  return y * y;
}

double sides_psi2(double y) {
  // Below sqrt(2)/2 the L/P tie lies on x = y, the isosceles edge of the domain.
  if (y <= kHalfSqrt2) return y;
  if (y <= constants().y0) return 0.5 * (std::sqrt(y * y + 4) - y);
  return y * y;
}

double xy_psi1(double x) {
  if (x <= constants().x0) return std::sqrt((-2 * x * x + 1 + std::sqrt(5 - 8 * x)) / 2);
  if (x < kHalfSqrt2) return std::sqrt(1 - 4 * x * x * x * x) / (2 * x);
  return 0.0;
}

double xy_psi2(double x) {
  if (x <= constants().x0) return std::sqrt(x * x * (3 - 2 * x) / (1 + 2 * x));
  if (x < kHalfSqrt2) return std::sqrt(1 - 4 * x * x * x * x) / (2 * x);
  return 0.0;
}

double parallelogram_psi1(double r) { return angle_from_y(r < kSqrt2 ? r - 1 / r : f_jd(r)); }

double parallelogram_psi2(double r) {
  return angle_from_y(r < kSqrt2 ? 1 / r + std::sqrt(2 - r * r) : f_jd(r));
}

PhaseRegion triangle_phase(double x, double y) {
  if (!(0.0 < x && x < y && y < 1.0 && 1.0 < x + y)) {
    throw Error(ErrorCode::OutOfDomain, "triangle sides need 0 < x < y < 1 < x + y");
  }
  const double p1 = sides_psi1(y);
  const double p2 = sides_psi2(y);
  PhaseRegion r{Region::P, false};
  if (x <= p1) {
    r.tag = Region::S;
  } else if (x > p2) {
    r.tag = Region::L;
  }
  r.on_boundary = (p1 > 0.0 && std::abs(x - p1) <= kPhaseEps) || std::abs(x - p2) <= kPhaseEps;
  return r;
}

PhaseRegion triangle_phase_xy(double x, double y) {
  if (!(x > 0.5 && y > 0.0 && x * x + y * y < 1.0)) {
    throw Error(ErrorCode::OutOfDomain, "apex needs x > 1/2, y > 0, x^2 + y^2 < 1");
  }
  const double p1 = xy_psi1(x);
  const double p2 = xy_psi2(x);
  PhaseRegion r{Region::L, false};
  if (y >= p1) {
    r.tag = Region::S;
  } else if (y < p2) {
    r.tag = Region::P;
  }
  r.on_boundary = (p1 > 0.0 && std::abs(y - p1) <= kPhaseEps) || (p2 > 0.0 && std::abs(y - p2) <= kPhaseEps);
  return r;
}

PhaseRegion parallelogram_phase(double r, double theta) {
  if (!(r > 1.0 && theta > kPi / 2 && theta < kPi)) {
    throw Error(ErrorCode::OutOfDomain, "parallelogram needs r > 1 and pi/2 < theta < pi");
  }
  const double p1 = parallelogram_psi1(r);
  const double p2 = parallelogram_psi2(r);
  PhaseRegion reg{Region::B, false};
  if (theta <= p1) {
    reg.tag = Region::D;
  } else if (theta >= p2) {
    reg.tag = Region::J;
  }
  reg.on_boundary = std::abs(theta - p1) <= kPhaseEps || std::abs(theta - p2) <= kPhaseEps;
  return reg;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::TriangleXY: return "triangle-xy";
    case Family::TriangleSides: return "triangle-sides";
    case Family::Parallelogram: return "parallelogram";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::TriangleXY, Family::TriangleSides, Family::Parallelogram}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown family \"" + std::string(name) + '"');
}

ChiralityResult family_alpha1(Family family, double p1, double p2) {
  switch (family) {
    case Family::Parallelogram: return parallelogram_alpha1(ParallelogramShape::make(p1, p2));
    case Family::TriangleSides: return triangle_alpha1(TriangleShape::from_sides(p1, p2, 1.0));
    case Family::TriangleXY:
      return triangle_alpha1(TriangleShape::from_sides(1.0, std::hypot(p1, p2), std::hypot(1.0 - p1, p2)));
  }
  throw Error(ErrorCode::OutOfDomain, "unknown family");
}

ConvexPolygon family_realization(Family family, double p1, double p2) {
  switch (family) {
    case Family::Parallelogram: return parallelogram_realization(ParallelogramShape::make(p1, p2));
    case Family::TriangleSides: return triangle_realization(TriangleShape::from_sides(p1, p2, 1.0));
    case Family::TriangleXY:
      return triangle_realization(TriangleShape::from_sides(1.0, std::hypot(p1, p2), std::hypot(1.0 - p1, p2)));
  }
  throw Error(ErrorCode::OutOfDomain, "unknown family");
}

std::vector<GridCell> phase_grid(Family family, std::size_t resolution, std::size_t threads) {
  if (resolution < 16) throw Error(ErrorCode::OutOfRange, "grid resolution must be at least 16");
  const std::size_t n = resolution;
  std::vector<GridCell> cells(n * n);
  parallel_for(n * n, threads, [&](std::size_t idx) {
    const double s = (static_cast<double>(idx / n) + 0.5) / static_cast<double>(n);  // outer
    const double u = (static_cast<double>(idx % n) + 0.5) / static_cast<double>(n);  // inner
    GridCell c{};
    switch (family) {
      case Family::Parallelogram:
        c.p1 = 1.0 + 2.0 * u;
        c.p2 = kPi / 2 + (kPi / 2) * s;
        c.region = parallelogram_phase(c.p1, c.p2);
        break;
      case Family::TriangleSides:
        c.p2 = 0.5 + 0.5 * s;
        c.p1 = 1.0 - c.p2 + u * (2 * c.p2 - 1.0);
        c.region = triangle_phase(c.p1, c.p2);
        break;
      case Family::TriangleXY:
        c.p1 = 0.5 + 0.5 * s;
        c.p2 = u * std::sqrt(1.0 - c.p1 * c.p1);
        c.region = triangle_phase_xy(c.p1, c.p2);
        break;
    }
    const ChiralityResult a = family_alpha1(family, c.p1, c.p2);
    c.alpha1 = a.value;
    c.axis_theta = a.axis ? a.axis->theta() : 0.0;
    cells[idx] = c;
  });
  return cells;
}

void write_grid_csv(std::ostream& out, const std::vector<GridCell>& cells) {
  const auto old = out.precision(12);
  out << "p1,p2,region,alpha1,axis_theta\n";
  for (const GridCell& c : cells) {
    out << c.p1 << ',' << c.p2 << ',' << to_string(c.region.tag) << ',' << c.alpha1 << ',' << c.axis_theta
        << '\n';
  }
  out.precision(old);
}

void write_grid_svg(std::ostream& out, Family family, const std::vector<GridCell>& cells) {
  const Box b = family_box(family);
  const double w = b.x1 - b.x0;
  const double h = b.y1 - b.y0;
  const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(cells.size()))));
  const double radius = 0.5 * std::min(w, h) / static_cast<double>(n);
  const auto old = out.precision(8);

  // Parameter coordinates with y flipped so that p2 grows upwards.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << b.x0 << ' ' << -b.y1 << ' ' << w << ' ' << h
      << "\" width=\"800\" height=\"" << static_cast<int>(800 * h / w) << "\" preserveAspectRatio=\"none\">\n";
  out << "<title>" << to_string(family) << " phase diagram</title>\n<g stroke=\"none\">\n";
  for (const GridCell& c : cells) {
    out << "<circle cx=\"" << c.p1 << "\" cy=\"" << -c.p2 << "\" r=\"" << radius << "\" fill=\""
        << region_colour(c.region.tag) << "\"/>\n";
  }
  out << "</g>\n";

  const auto polyline = [&](auto x_of, auto y_of, double lo, double hi, auto keep) {
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << 0.004 * std::min(w, h) << "\" points=\"";
    for (int i = 0; i <= 400; ++i) {
      const double t = lo + (hi - lo) * i / 400.0;
      const double x = x_of(t);
      const double y = y_of(t);
      if (keep(x, y)) out << x << ',' << -y << ' ';
    }
    out << "\"/>\n";
  };
  const auto all = [](double, double) { return true; };
  const auto id = [](double t) { return t; };
  switch (family) {
    case Family::Parallelogram:
      polyline(id, parallelogram_psi1, 1.0 + 1e-9, b.x1, all);
      polyline(id, parallelogram_psi2, 1.0 + 1e-9, b.x1, all);
      break;
    case Family::TriangleSides: {
      const auto inside = [](double x, double y) { return x > 1.0 - y && x < y; };
      polyline(sides_psi1, id, kHalfSqrt2, 1.0, inside);
      polyline(sides_psi2, id, kHalfSqrt2, 1.0, inside);
      break;
    }
    case Family::TriangleXY: {
      const auto inside = [](double x, double y) { return y >= 0.0 && x * x + y * y <= 1.0; };
      polyline(id, xy_psi1, 0.5, kHalfSqrt2, inside);
      polyline(id, xy_psi2, 0.5, kHalfSqrt2, inside);
      break;
    }
  }
  out << "</svg>\n";
  out.precision(old);
}

void emit_grid(Family family, std::size_t resolution, const std::filesystem::path& path, GridFormat format,
               std::size_t threads) {
  const std::vector<GridCell> cells = phase_grid(family, resolution, threads);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot open " + path.string() + " for writing");
  if (format == GridFormat::Csv) {
    write_grid_csv(out, cells);
  } else {
    write_grid_svg(out, family, cells);
  }
  out.flush();
  if (!out) throw Error(ErrorCode::IOError, "write to " + path.string() + " failed");
}

std::vector<AnglePair> jb_curve_delta_theta(std::size_t samples) {
  std::vector<AnglePair> pts;
  pts.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = 1.0 + (kSqrt2 - 1.0) * static_cast<double>(i + 1) / static_cast<double>(samples + 1);
    const double s = std::sqrt(2.0 - r * r);
    const double diag = std::sqrt((r * r + 2 + r * s) * (r * r - r * s));
    pts.push_back({std::acos(std::clamp((1 - r * r) / diag, -1.0, 1.0)), angle_from_y(1 / r + s)});
  }
  return pts;
}

}  // namespace chirality
