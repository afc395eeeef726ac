#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "chirality/chirality.hpp"
#include "chirality/containment.hpp"
#include "chirality/error.hpp"
#include "chirality/random.hpp"
#include "support/oracles.hpp"

using namespace chirality;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon poly(std::vector<Point2> v) { return ConvexPolygon::from_vertices(std::move(v)); }
const ConvexPolygon kTriangle345 = poly({{0, 0}, {4, 0}, {0, 3}});
const ConvexPolygon kExtremal = poly({{1, 0}, {2, 1}, {-1, 0}, {-2, -1}});

Alpha1Options coarse() {
  Alpha1Options o;
  o.grid = 512;
  return o;
}

}  // namespace

TEST(Alpha0, TriangleIsTwo) {
  Rng rng(11);
  std::normal_distribution<double> g;
  for (int i = 0; i < 30; ++i) {
    const ConvexPolygon t = convex_hull(std::vector<Point2>{{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}});
    EXPECT_NEAR(asymmetry_alpha0(t).value, 2.0, 1e-9);
  }
}

TEST(Alpha0, ParallelogramIsIdentity) {
  const ChiralityResult r = asymmetry_alpha0(kExtremal);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_EQ(r.classification, AxisTag::Identity);
}

TEST(Alpha0, RegularPentagonMatchesEnumeration) {
  const ConvexPolygon p = regular_polygon(5);
  const double v = asymmetry_alpha0(p).value;
  EXPECT_GT(v, 1.0);
  EXPECT_LT(v, 2.0);
  EXPECT_NEAR(v, oracle::containment_by_enumeration(p, p.negated()).lambda, 1e-9);
  // cos(pi/5)-scaled pentagon: the known value 1/cos(pi/5).
  EXPECT_NEAR(v, 1.0 / std::cos(kPi / 5), 1e-9);
}

TEST(Profile, IsoscelesAxisGivesOne) {
  const ConvexPolygon t = poly({{-1, 0}, {1, 0}, {0, 3}});
  EXPECT_NEAR(chirality_profile(t, kPi / 2), 1.0, 1e-9);
}

TEST(Profile, Triangle345LargestBisector) {
  // Bisector of the right angle at the origin: y/x with (x, y) = (3, 4).
  EXPECT_NEAR(chirality_profile(kTriangle345, kPi / 4), 4.0 / 3.0, 1e-9);
  // Bisector of the smallest angle, at (4, 0): z/y = 5/4.
  const double smallest = kPi - 0.5 * std::atan2(3.0, 4.0);
  EXPECT_NEAR(chirality_profile(kTriangle345, smallest), 1.25, 1e-9);
}

TEST(Profile, RectangleAxisAligned) {
  EXPECT_NEAR(chirality_profile(poly({{0, 0}, {3, 0}, {3, 1}, {0, 1}}), 0.0), 1.0, 1e-12);
}

TEST(Profile, PiPeriodic) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int i = 0; i < 20; ++i) {
    const ConvexPolygon k = random_polygon(rng);
    const double t = u(rng);
    EXPECT_NEAR(chirality_profile(k, t), chirality_profile(k, t + kPi), 1e-12);
  }
}

TEST(Profile, AgreesWithEnumerationOracle) {
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int i = 0; i < 40; ++i) {
    const ConvexPolygon k = random_polygon(rng, 5, 9);
    const double t = u(rng);
    const double expected = oracle::containment_by_enumeration(k, oracle::reflect_by_matrix(k, t)).lambda;
    EXPECT_NEAR(chirality_profile(k, t), expected, 1e-8 * expected);
  }
}

TEST(Profile, PerpendicularIdentity) {
  Rng rng(8);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int i = 0; i < 30; ++i) {
    const ConvexPolygon k = random_polygon(rng);
    const double t = u(rng);
    const double rhs = circumradius_value(k, reflect(k.negated(), Axis(t + kPi / 2)));
    EXPECT_NEAR(chirality_profile(k, t), rhs, 1e-9);
  }
}

TEST(Alpha1, Isosceles) {
  const ChiralityResult r = alpha1_numeric(poly({{-1, 0}, {1, 0}, {0, 2.5}}).rotated(0.7));
  EXPECT_NEAR(r.value, 1.0, 1e-8);
  EXPECT_EQ(r.classification, AxisTag::Identity);
}

TEST(Alpha1, ExtremalParallelogram) {
  const ChiralityResult r = alpha1_numeric(kExtremal);
  EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-6);
  EXPECT_EQ(r.classification, AxisTag::JohnAxis);
}

TEST(Alpha1, Triangle345) {
  const ChiralityResult r = alpha1_numeric(kTriangle345);
  EXPECT_NEAR(r.value, 1.25, 1e-6);
  EXPECT_EQ(r.classification, AxisTag::BisectorSmallestAngle);
}

TEST(Alpha1, ValueBelowEveryProfileSample) {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    Alpha1Options o = coarse();
    o.keep_profile = true;
    const ChiralityResult r = alpha1_numeric(random_polygon(rng), o);
    ASSERT_EQ(r.profile.size(), o.grid);
    EXPECT_GE(r.value, 1.0 - 1e-9);
    for (const ProfileSample& s : r.profile) EXPECT_GE(s.value, r.value - o.refine_tol);
  }
}

TEST(Alpha1, MatchesBruteForceGrid) {
  Rng rng(22);
  for (int i = 0; i < 5; ++i) {
    const ConvexPolygon k = random_polygon(rng, 5, 8);
    const double brute = oracle::grid_min(
        [&](double t) { return oracle::containment_by_enumeration(k, oracle::reflect_by_matrix(k, t)).lambda; },
        4096);
    EXPECT_NEAR(alpha1_numeric(k).value, brute, 1e-6);
  }
}

TEST(Alpha1, SimilarityInvariant) {
  Rng rng(31);
  for (int i = 0; i < 15; ++i) {
    const ConvexPolygon k = random_polygon(rng);
    const Similarity f = random_similarity(rng);
    EXPECT_NEAR(alpha1_numeric(f.apply(k)).value, alpha1_numeric(k).value, 1e-6);
  }
}

TEST(Alpha1, PolarIdentityForSymmetricBodies) {
  Rng rng(41);
  for (int i = 0; i < 15; ++i) {
    const ConvexPolygon k = random_symmetric_polygon(rng);
    EXPECT_NEAR(alpha1_numeric(k).value, alpha1_numeric(polar(k)).value, 1e-6);
  }
}

TEST(Alpha1, EllipseIsAchiral) {
  std::vector<Point2> pts;
  for (int i = 0; i < 720; ++i) {
    const double a = 2 * kPi * i / 720;
    pts.push_back({2 * std::cos(a), std::sin(a)});
  }
  EXPECT_LE(alpha1_numeric(convex_hull(pts)).value, 1.0 + 1e-4);
}

TEST(Alpha1, HausdorffContinuity) {
  Rng rng(51);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double delta = 1e-4;
  for (int i = 0; i < 8; ++i) {
    const ConvexPolygon k = random_polygon(rng);
    std::vector<Point2> moved;
    for (const Point2& v : k.vertices()) moved.push_back(v + Point2{u(rng), u(rng)} * (delta / std::sqrt(2.0)));
    const double change = std::abs(alpha1_numeric(convex_hull(moved)).value - alpha1_numeric(k).value);
    EXPECT_LE(change, 100 * delta);
  }
}

TEST(Alpha1, DeterministicAcrossThreadCounts) {
  Rng rng(61);
  const ConvexPolygon k = random_polygon(rng);
  Alpha1Options one = coarse();
  one.threads = 1;
  Alpha1Options three = coarse();
  three.threads = 3;
  const ChiralityResult a = alpha1_numeric(k, one);
  const ChiralityResult b = alpha1_numeric(k, three);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.axis->theta(), b.axis->theta());
}

TEST(Alpha1, RejectsTinyGrid) {
  Alpha1Options o;
  o.grid = 2;
  try {
    alpha1_numeric(kTriangle345, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Alpha2, AlwaysOne) {
  EXPECT_EQ(alpha2(kTriangle345).value, 1.0);
  EXPECT_NEAR(asymmetry_alpha0(kTriangle345).value / alpha2(kTriangle345).value, 2.0, 1e-9);
}

TEST(ProfileCsv, HeaderAndRows) {
  std::ostringstream out;
  write_profile_csv(out, sample_profile(kTriangle345, 64, 1));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,R");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 64);
}

TEST(AxisTag, Names) {
  EXPECT_EQ(to_string(AxisTag::BisectorLargestAngle), "bisector-largest-angle");
  EXPECT_EQ(to_string(AxisTag::PerpLongestEdge), "perp-longest-edge");
  EXPECT_EQ(to_string(AxisTag::JohnAxis), "john-axis");
  EXPECT_EQ(to_string(AxisTag::Identity), "identity");
}

TEST(Alpha1, ThinTriangleNarrowValley) {
  // The smallest-angle valley is narrower than the grid spacing here.
  const ConvexPolygon k = poly({{0, 0}, {1, 0}, {0.715, 0.00699124}});
  double best = 1e9;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point2 d = normalized(k.vertex(i + 1) - k[i]) + normalized(k.vertex(i + 2) - k[i]);
    best = std::min(best, oracle::containment_by_enumeration(k, oracle::reflect_by_matrix(k, std::atan2(d.y, d.x))).lambda);
  }
  const ChiralityResult r = alpha1_numeric(k);
  EXPECT_LE(r.value, best + 1e-9);
  Alpha1Options no_kinks;
  no_kinks.kink_vertex_limit = 0;
  EXPECT_GT(alpha1_numeric(k, no_kinks).value, best + 1e-3);
}
