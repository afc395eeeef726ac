#include "chirality/bounds_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>

#include "chirality/containment.hpp"
#include "chirality/error.hpp"
#include "chirality/parallel.hpp"
#include "chirality/random.hpp"

namespace chirality {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::string numbered(const char* prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%04zu", prefix, i);
  return buf;
}

}  // namespace

void BoundReport::add(std::string name, double lhs, double rhs) {
  const double margin = rhs - lhs;
  checks.push_back({std::move(name), lhs, rhs, margin, margin >= -kBoundEps});
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

BoundReport check_main_bounds(const ConvexPolygon& k, const Alpha1Options& opts) {
  BoundReport r;
  r.alpha0 = asymmetry_alpha0(k).value;
  r.alpha1 = alpha1_numeric(k, opts).value;
  r.add("alpha1>=1", 1.0, r.alpha1);
  r.add("alpha1<=2", r.alpha1, 2.0);
  r.add("alpha1<=(alpha0+1)/sqrt2", r.alpha1, (r.alpha0 + 1.0) / 2.0 * kSqrt2);
  r.add("alpha1<=sqrt(2*alpha0)", r.alpha1, std::sqrt(2.0 * r.alpha0));
  r.add("alpha0<=2", r.alpha0, 2.0);
  return r;
}

BoundReport check_ratio_bound(const ConvexPolygon& k, const ConvexPolygon& l, const Alpha1Options& opts) {
  BoundReport r;
  r.alpha0 = asymmetry_alpha0(k).value;
  r.alpha1 = alpha1_numeric(k, opts).value;
  const double a0l = asymmetry_alpha0(l).value;
  const double a1l = alpha1_numeric(l, opts).value;
  const double dd = distance_dD(k, l);
  r.add("alpha1_ratio<=dD", std::max(r.alpha1 / a1l, a1l / r.alpha1), dd);
  r.add("alpha0_ratio<=dD", std::max(r.alpha0 / a0l, a0l / r.alpha0), dd);
  return r;
}

BoundReport check_symmetry_relations(const ConvexPolygon& k, const Alpha1Options& opts) {
  BoundReport r;
  r.alpha0 = asymmetry_alpha0(k).value;
  r.alpha1 = alpha1_numeric(k, opts).value;
  r.alpha2 = alpha2(k).value;
  r.add("alpha1/alpha1<=alpha0", 1.0, r.alpha0);
  r.add("alpha0/alpha2<=alpha0", r.alpha0 / r.alpha2, r.alpha0);
  r.add("alpha2/alpha0<=alpha0", r.alpha2 / r.alpha0, r.alpha0);
  if (is_origin_symmetric(k)) {
    const double polar_a1 = alpha1_numeric(polar(k), opts).value;
    BoundCheck c{"alpha1=alpha1(polar)", std::abs(r.alpha1 - polar_a1), 1e-6, 0.0, false};
    c.margin = c.rhs - c.lhs;
    c.pass = c.margin >= 0.0;
    r.checks.push_back(c);
    r.add("alpha1<=sqrt2", r.alpha1, kSqrt2);
  }
  return r;
}

double stability_factor(double eps) { return kSqrt2 * (1.0 + 3.0 * eps / (1.0 - 2.0 * eps)); }

BoundConstants eval_constants() {
  BoundConstants c;
  c.s21 = kSqrt2;
  const double q = std::cbrt(631.0 + 54.0 * std::sqrt(137.0));
  c.c21_radical = std::sqrt((13.0 - 11.0 / q + q) / 6.0);

  // sqrt(2 (2 - eps)) - s (1 + 3 eps / (1 - 2 eps)) decreases on (0, 1/2).
  const auto g = [](double eps) { return std::sqrt(2.0 * (2.0 - eps)) - stability_factor(eps); };
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  c.eps21 = 0.5 * (lo + hi);
  c.c21_bisection = std::sqrt(2.0 * (2.0 - c.eps21));
  return c;
}

ConvexPolygon make_asymmetry_witness(double beta, std::size_t disk_sides) {
  if (!(beta >= 1.0 && beta <= 2.0)) throw Error(ErrorCode::OutOfRange, "witness needs 1 <= beta <= 2");
  if (disk_sides < 3) throw Error(ErrorCode::OutOfRange, "disk polygon needs at least 3 sides");
  const ConvexPolygon disk = regular_polygon(disk_sides);
  std::vector<Point2> pts(disk.vertices().begin(), disk.vertices().end());
  for (int i = 0; i < 3; ++i) {
    const double a = std::numbers::pi / 2 + 2.0 * std::numbers::pi * i / 3.0;
    pts.push_back({beta * std::cos(a), beta * std::sin(a)});
  }
  return convex_hull(pts);
}

std::vector<BoundReport> run_campaign(const CampaignOptions& opts) {
  Rng rng(opts.seed);
  struct Job {
    enum Kind { Main, Ratio, Symmetric } kind;
    ConvexPolygon k;
    std::optional<ConvexPolygon> l;
    std::string id;
  };
  std::vector<Job> jobs;
  jobs.reserve(opts.bodies + opts.pairs + opts.symmetric);
  for (std::size_t i = 0; i < opts.bodies; ++i) {
    jobs.push_back({Job::Main, random_polygon(rng), std::nullopt, numbered("body", i)});
  }
  for (std::size_t i = 0; i < opts.pairs; ++i) {
    ConvexPolygon k = random_polygon(rng);
    ConvexPolygon l = random_polygon(rng);
    jobs.push_back({Job::Ratio, std::move(k), std::move(l), numbered("pair", i)});
  }
  for (std::size_t i = 0; i < opts.symmetric; ++i) {
    jobs.push_back({Job::Symmetric, random_symmetric_polygon(rng), std::nullopt, numbered("sym", i)});
  }

  Alpha1Options inner = opts.alpha1;
  inner.threads = 1;
  std::vector<BoundReport> reports(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
    const Job& j = jobs[i];
    switch (j.kind) {
      case Job::Main: reports[i] = check_main_bounds(j.k, inner); break;
      case Job::Ratio: reports[i] = check_ratio_bound(j.k, *j.l, inner); break;
      case Job::Symmetric: reports[i] = check_symmetry_relations(j.k, inner); break;
    }
    reports[i].body_id = j.id;
  });
  return reports;
}

void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
  const auto old = out.precision(12);
  out << "body_id,check,lhs,rhs,margin,pass\n";
  for (const BoundReport& r : reports) {
    for (const BoundCheck& c : r.checks) {
      out << r.body_id << ',' << c.name << ',' << c.lhs << ',' << c.rhs << ',' << c.margin << ','
          << (c.pass ? "true" : "false") << '\n';
    }
  }
  out.precision(old);
}

}  // namespace chirality
