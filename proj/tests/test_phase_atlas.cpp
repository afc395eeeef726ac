#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "chirality/closed_form.hpp"
#include "chirality/error.hpp"
#include "chirality/phase_atlas.hpp"
#include "support/oracles.hpp"

using namespace chirality;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

template <class T>
ErrorCode code_of(T&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::DegenerateInput;
}

// The three kept values of a triangle with sides x < y < 1, tagged.
std::array<std::pair<double, Region>, 3> sides_values(double x, double y) {
  const auto v = oracle::triangle_values(x, y, 1.0);
  return {{{v.at("bisector-largest"), Region::L}, {v.at("bisector-smallest"), Region::S}, {v.at("perp-longest"), Region::P}}};
}

template <std::size_t N>
double gap_of_two_smallest(std::array<std::pair<double, Region>, N> v) {
  std::sort(v.begin(), v.end());
  return v[1].first - v[0].first;
}

std::array<std::pair<double, Region>, 3> xy_values(double x, double y) {
  const TriangleShape t = TriangleShape::from_sides(1.0, std::hypot(x, y), std::hypot(1 - x, y));
  const auto v = oracle::triangle_values(t.x, t.y, t.z);
  return {{{v.at("bisector-largest"), Region::L}, {v.at("bisector-smallest"), Region::S}, {v.at("perp-longest"), Region::P}}};
}

std::array<std::pair<double, Region>, 3> parallelogram_values(double r, double theta) {
  const ParallelogramAxisValues v = parallelogram_axis_values(ParallelogramShape::make(r, theta));
  return {{{v.edge_bisector, Region::B}, {v.diagonal_bisector, Region::D}, {v.john_axis, Region::J}}};
}

bool tagged(const ChiralityResult& r, AxisTag tag) {
  return std::find(r.ties.begin(), r.ties.end(), tag) != r.ties.end();
}

}  // namespace

TEST(PhaseConstants, MatchAnchors) {
  const PhaseConstants c = solve_constants();
  EXPECT_NEAR(c.y0, 0.819173, 1e-5);
  EXPECT_NEAR(c.x0, 0.61037, 1e-5);
  EXPECT_GT(c.y0, 0.81917);
  EXPECT_LT(c.y0, 0.81918);
  EXPECT_GT(c.x0, 0.61036);
  EXPECT_LT(c.x0, 0.61038);
  EXPECT_LE(std::abs(std::pow(c.y0, 4) + std::pow(c.y0, 3) - 1), 1e-11);
  EXPECT_LE(std::abs(16 * std::pow(c.x0, 4) - 2 * c.x0 - 1), 1e-11);
  const double y0 = oracle::bisect([](double y) { return y * y * y * y + y * y * y - 1; }, 0.0, 1.0);
  EXPECT_NEAR(c.y0, y0, 1e-14);
}

TEST(TrianglePhase, WorkedPoint) {
  const PhaseRegion r = triangle_phase(0.6, 0.78);
  EXPECT_EQ(r.tag, Region::P);
  EXPECT_FALSE(r.on_boundary);
  const auto v = oracle::triangle_values(0.6, 0.78, 1.0);
  EXPECT_NEAR(v.at("perp-longest"), 1.2484, 1e-4);
  EXPECT_NEAR(v.at("bisector-smallest"), 1.28205, 1e-4);
  EXPECT_NEAR(v.at("bisector-largest"), 1.3, 1e-4);
}

TEST(TrianglePhase, TriplePoint) {
  const double y0 = solve_constants().y0;
  const PhaseRegion r = triangle_phase(y0 * y0, y0);
  EXPECT_TRUE(r.on_boundary);
  const auto v = sides_values(y0 * y0, y0);
  EXPECT_NEAR(v[0].first, v[1].first, 1e-12);
  EXPECT_NEAR(v[1].first, v[2].first, 1e-12);
}

TEST(TrianglePhase, UpperBranchRegions) {
  // Above y0 both curves are x = y^2; argmin of {1/y, y/x, 1 + y^2 - x^2} decides.
  EXPECT_EQ(triangle_phase(0.9, 0.95).tag, Region::S);
  EXPECT_LT(1 / 0.95, 0.95 / 0.9);
  EXPECT_EQ(triangle_phase(0.93, 0.95).tag, Region::L);
  EXPECT_LT(0.95 / 0.93, 1 / 0.95);
}

TEST(TrianglePhase, OutOfDomain) {
  EXPECT_EQ(code_of([] { triangle_phase(0.8, 0.7); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { triangle_phase(0.2, 0.7); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { triangle_phase(0.5, 1.0); }), ErrorCode::OutOfDomain);
}

TEST(TrianglePhaseXY, Examples) {
  EXPECT_EQ(triangle_phase_xy(0.70, 0.01).tag, Region::P);
  EXPECT_EQ(triangle_phase_xy(0.55, 0.6).tag, Region::L);
  EXPECT_EQ(triangle_phase_xy(0.8, 0.2).tag, Region::S);
  EXPECT_EQ(code_of([] { triangle_phase_xy(0.4, 0.2); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { triangle_phase_xy(0.8, 0.7); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { triangle_phase_xy(0.8, 0.0); }), ErrorCode::OutOfDomain);
}

TEST(ParallelogramPhase, Examples) {
  const PhaseRegion quad = parallelogram_phase(kSqrt2, std::acos(-1 / (2 * kSqrt2)));
  EXPECT_TRUE(quad.on_boundary);
  EXPECT_NEAR(parallelogram_psi1(kSqrt2), parallelogram_psi2(kSqrt2), 1e-12);
  EXPECT_EQ(parallelogram_phase(1.2, kPi / 2 + 0.01).tag, Region::D);
  EXPECT_EQ(parallelogram_phase(3.0, kPi - 0.01).tag, Region::J);
  EXPECT_EQ(code_of([] { parallelogram_phase(1.0, 2.0); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { parallelogram_phase(2.0, kPi); }), ErrorCode::OutOfDomain);
}

TEST(PhaseBoundaries, ValuesTieAlongCurves) {
  const PhaseConstants c = solve_constants();
  for (int i = 0; i < 100; ++i) {
    const double s = (i + 0.5) / 100;
    const double y = kSqrt2 / 2 + (1 - kSqrt2 / 2) * s;
    for (double x : {sides_psi1(y), sides_psi2(y)}) {
      if (x > 1 - y && x < y) EXPECT_LE(gap_of_two_smallest(sides_values(x, y)), 1e-9) << x << ' ' << y;
    }
    const double xx = 0.5 + (kSqrt2 / 2 - 0.5) * s;
    for (double yy : {xy_psi1(xx), xy_psi2(xx)}) {
      if (yy > 0 && xx * xx + yy * yy < 1) EXPECT_LE(gap_of_two_smallest(xy_values(xx, yy)), 1e-9) << xx << ' ' << yy;
    }
    const double r = 1.0 + 2.0 * s;
    for (double t : {parallelogram_psi1(r), parallelogram_psi2(r)}) {
      EXPECT_LE(gap_of_two_smallest(parallelogram_values(r, t)), 1e-9) << r << ' ' << t;
    }
  }
  (void)c;
}

TEST(PhaseBoundaries, ContinuousAcrossBranchSwitches) {
  const PhaseConstants c = solve_constants();
  const double h = 1e-12;
  EXPECT_NEAR(sides_psi1(c.y0 - h), sides_psi1(c.y0 + h), 1e-9);
  EXPECT_NEAR(sides_psi2(c.y0 - h), sides_psi2(c.y0 + h), 1e-9);
  EXPECT_NEAR(sides_psi2(kSqrt2 / 2 - h), sides_psi2(kSqrt2 / 2 + h), 1e-9);
  EXPECT_NEAR(xy_psi1(c.x0 - h), xy_psi1(c.x0 + h), 1e-9);
  EXPECT_NEAR(xy_psi2(c.x0 - h), xy_psi2(c.x0 + h), 1e-9);
  EXPECT_NEAR(xy_psi1(kSqrt2 / 2 - h), xy_psi1(kSqrt2 / 2 + h), 1e-5);
  EXPECT_NEAR(parallelogram_psi1(kSqrt2 - h), parallelogram_psi1(kSqrt2 + h), 1e-9);
  // The left branch of psi2 carries sqrt(2 - r^2): the branches meet at sqrt2
  // and the left limit converges like sqrt(h).
  EXPECT_NEAR(std::acos(-0.5 * (1 / kSqrt2)), parallelogram_psi2(kSqrt2), 1e-9);
  for (double hh : {1e-6, 1e-8, 1e-10, 1e-12}) {
    EXPECT_LE(std::abs(parallelogram_psi2(kSqrt2 - hh) - parallelogram_psi2(kSqrt2 + hh)), 2 * std::sqrt(hh));
  }
}

class PhaseGridFamily : public ::testing::TestWithParam<Family> {};

TEST_P(PhaseGridFamily, RegionEqualsClosedFormArgmin) {
  for (const GridCell& c : phase_grid(GetParam(), 100, 1)) {
    if (c.region.on_boundary) continue;
    const ChiralityResult r = family_alpha1(GetParam(), c.p1, c.p2);
    EXPECT_TRUE(tagged(r, region_axis(c.region.tag))) << c.p1 << ' ' << c.p2;
    EXPECT_DOUBLE_EQ(c.alpha1, r.value);
  }
}

TEST_P(PhaseGridFamily, RegionEqualsNumericClassification) {
  for (const GridCell& c : phase_grid(GetParam(), 16, 1)) {
    if (c.region.on_boundary) continue;
    const ChiralityResult r = alpha1_numeric(family_realization(GetParam(), c.p1, c.p2));
    EXPECT_TRUE(tagged(r, region_axis(c.region.tag))) << c.p1 << ' ' << c.p2 << ' ' << to_string(r.classification);
    EXPECT_NEAR(r.value, c.alpha1, 1e-6);
  }
}

TEST_P(PhaseGridFamily, SmokeGridCsv) {
  std::ostringstream out;
  write_grid_csv(out, phase_grid(GetParam(), 16));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p1,p2,region,alpha1,axis_theta");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
  }
  EXPECT_EQ(rows, 256);
}

TEST_P(PhaseGridFamily, OrderIndependentOfThreads) {
  std::ostringstream a, b;
  write_grid_csv(a, phase_grid(GetParam(), 24, 1));
  write_grid_csv(b, phase_grid(GetParam(), 24, 3));
  EXPECT_EQ(a.str(), b.str());
}

TEST_P(PhaseGridFamily, SvgHasViewBoxAndCurves) {
  std::ostringstream out;
  write_grid_svg(out, GetParam(), phase_grid(GetParam(), 16));
  const std::string s = out.str();
  EXPECT_NE(s.find("viewBox"), std::string::npos);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n') >= 256, true);
  EXPECT_NE(s.find("<polyline"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

INSTANTIATE_TEST_SUITE_P(All, PhaseGridFamily,
                         ::testing::Values(Family::TriangleXY, Family::TriangleSides, Family::Parallelogram),
                         [](const auto& info) {
                           std::string n(to_string(info.param));
                           n.erase(std::remove(n.begin(), n.end(), '-'), n.end());
                           return n;
                         });

TEST(PhaseGrid, ParallelogramHasThreeRegions) {
  std::array<int, 3> counts{};
  for (const GridCell& c : phase_grid(Family::Parallelogram, 200)) ++counts[static_cast<int>(c.region.tag)];
  for (int n : counts) EXPECT_GT(n, 0);
}

TEST(PhaseGrid, Errors) {
  EXPECT_EQ(code_of([] { phase_grid(Family::Parallelogram, 15); }), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of([] { parse_family("hexagon"); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_family("triangle-sides"), Family::TriangleSides);
  EXPECT_EQ(code_of([] { emit_grid(Family::Parallelogram, 16, "/nonexistent-dir/grid.csv"); }), ErrorCode::IOError);
}

TEST(PhaseGrid, EmitWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "chirality_phase_test.svg";
  emit_grid(Family::TriangleXY, 16, path, GridFormat::Svg, 1);
  EXPECT_GT(std::filesystem::file_size(path), 1000u);
  std::filesystem::remove(path);
}

TEST(JBCurve, DiagonalAngleAndBoundary) {
  const std::vector<AnglePair> pts = jb_curve_delta_theta(50);
  ASSERT_EQ(pts.size(), 50u);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double r = 1.0 + (kSqrt2 - 1.0) * (i + 1) / 51.0;
    EXPECT_NEAR(pts[i].theta, parallelogram_psi2(r), 1e-12);
    // Angle between the diagonals of the realization.
    const Point2 u{r, 0.0};
    const Point2 w{std::cos(pts[i].theta), std::sin(pts[i].theta)};
    const Point2 d1 = u + w;
    const Point2 d2 = w - u;
    EXPECT_NEAR(pts[i].delta, std::acos(dot(d1, d2) / (norm(d1) * norm(d2))), 1e-9);
    const auto v = parallelogram_values(r, pts[i].theta);
    EXPECT_NEAR(v[0].first, v[2].first, 1e-9);
  }
  // The curve reaches the diagonal delta = theta at r = sqrt2.
  const std::vector<AnglePair> dense = jb_curve_delta_theta(100000);
  EXPECT_NEAR(dense.back().delta, dense.back().theta, 5e-3);
}

TEST(Regions, Names) {
  EXPECT_EQ(to_string(Region::B), "B");
  EXPECT_EQ(region_axis(Region::J), AxisTag::JohnAxis);
  EXPECT_EQ(region_axis(Region::P), AxisTag::PerpLongestEdge);
  EXPECT_EQ(to_string(Family::TriangleXY), "triangle-xy");
}
