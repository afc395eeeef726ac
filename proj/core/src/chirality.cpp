#include "chirality/chirality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "chirality/closed_form.hpp"
#include "chirality/containment.hpp"
#include "chirality/error.hpp"
#include "chirality/parallel.hpp"

namespace chirality {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-9;

struct Minimum {
  double value;
  double theta;
};

bool lex_less(const Minimum& a, const Minimum& b) {
  return a.value < b.value || (a.value == b.value && a.theta < b.theta);
}

// Golden-section search of the profile on [lo, hi].
Minimum golden_section(const ConvexPolygon& k, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = chirality_profile(k, c);
  double fd = chirality_profile(k, d);
  while (hi - lo > tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = chirality_profile(k, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = chirality_profile(k, d);
    }
  }
  return fc <= fd ? Minimum{fc, c} : Minimum{fd, d};
}

double normalize_theta(double theta) { return Axis(theta).theta(); }

// Axes (phi_i + phi_j)/2 and their perpendiculars for all edge-normal angles.
std::vector<double> kink_axes(const ConvexPolygon& k) {
  std::vector<double> phi;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Point2 e = k.edge(i);
    phi.push_back(std::atan2(-e.x, e.y));
  }
  std::vector<double> axes;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (std::size_t j = i; j < phi.size(); ++j) {
      const double mid = 0.5 * (phi[i] + phi[j]);
      axes.push_back(normalize_theta(mid));
      axes.push_back(normalize_theta(mid + kPi / 2));
    }
  }
  std::sort(axes.begin(), axes.end());
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
  return axes;
}

}  // namespace

std::string_view to_string(AxisTag tag) noexcept {
  switch (tag) {
    case AxisTag::Numeric: return "numeric";
    case AxisTag::BisectorLargestAngle: return "bisector-largest-angle";
    case AxisTag::BisectorSmallestAngle: return "bisector-smallest-angle";
    case AxisTag::PerpLongestEdge: return "perp-longest-edge";
    case AxisTag::EdgeBisector: return "edge-bisector";
    case AxisTag::DiagonalBisector: return "diagonal-bisector";
    case AxisTag::JohnAxis: return "john-axis";
    case AxisTag::Identity: return "identity";
  }
  return "unknown";
}

ChiralityResult asymmetry_alpha0(const ConvexPolygon& k) {
  ChiralityResult r;
  r.value = circumradius_value(k, k.negated());
  r.classification = std::abs(r.value - 1.0) <= kIdentityTol ? AxisTag::Identity : AxisTag::Numeric;
  return r;
}

double chirality_profile(const ConvexPolygon& k, double theta) {
  return circumradius_value(k, reflect(k, Axis(theta)));
}

std::vector<ProfileSample> sample_profile(const ConvexPolygon& k, std::size_t grid, std::size_t threads) {
  std::vector<ProfileSample> samples(grid);
  parallel_for(grid, threads, [&](std::size_t i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(grid);
    samples[i] = {theta, chirality_profile(k, theta)};
  });
  return samples;
}

ChiralityResult alpha1_numeric(const ConvexPolygon& k, const Alpha1Options& opts) {
  if (opts.grid < 3) throw Error(ErrorCode::OutOfRange, "grid must have at least 3 samples");
  const std::size_t n = opts.grid;
  std::vector<ProfileSample> samples = sample_profile(k, n, opts.threads);

  Minimum grid_best{std::numeric_limits<double>::infinity(), 0.0};
  std::size_t grid_arg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Minimum m{samples[i].value, samples[i].theta};
    if (lex_less(m, grid_best)) {
      grid_best = m;
      grid_arg = i;
    }
  }

  // Cyclic local minima; a plateau contributes its last sample.
  std::vector<std::size_t> starts{grid_arg};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == grid_arg) continue;
    const double v = samples[i].value;
    const double prev = samples[(i + n - 1) % n].value;
    const double next = samples[(i + 1) % n].value;
    if (v <= prev && v < next && v <= grid_best.value + opts.refine_window) starts.push_back(i);
  }

  const double step = kPi / static_cast<double>(n);
  std::vector<Minimum> refined(starts.size());
  parallel_for(starts.size(), opts.threads, [&](std::size_t j) {
    const double centre = samples[starts[j]].theta;
    Minimum m = golden_section(k, centre - step, centre + step, opts.refine_tol);
    m.theta = normalize_theta(m.theta);
    refined[j] = lex_less(m, Minimum{samples[starts[j]].value, centre}) ? m
                                                                        : Minimum{samples[starts[j]].value, centre};
  });

  Minimum best = grid_best;
  for (const Minimum& m : refined) {
    if (lex_less(m, best)) best = m;
  }

  if (k.size() <= opts.kink_vertex_limit) {
    const std::vector<double> kinks = kink_axes(k);
    std::vector<Minimum> at_kinks(kinks.size());
    parallel_for(kinks.size(), opts.threads,
                 [&](std::size_t j) { at_kinks[j] = {chirality_profile(k, kinks[j]), kinks[j]}; });
    for (const Minimum& m : at_kinks) {
      if (lex_less(m, best)) best = m;
    }
  }

  ChiralityResult result;
  result.value = best.value;
  result.axis = Axis(best.theta);
  if (opts.keep_profile) result.profile = std::move(samples);
  classify(k, result, opts.match_tol);
  return result;
}

void classify(const ConvexPolygon& k, ChiralityResult& result, double match_tol) {
  result.ties.clear();
  if (result.value <= 1.0 + kIdentityTol) {
    result.classification = AxisTag::Identity;
    result.ties.push_back(AxisTag::Identity);
    return;
  }
  result.classification = AxisTag::Numeric;
  if (!result.axis) return;
  std::vector<std::pair<double, AxisTag>> matches;
  for (const TaggedAxis& c : candidate_axes(k)) {
    const double d = axis_distance(c.axis, *result.axis);
    if (d <= match_tol) matches.emplace_back(d, c.tag);
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [d, tag] : matches) {
    if (std::find(result.ties.begin(), result.ties.end(), tag) == result.ties.end()) result.ties.push_back(tag);
  }
  if (!result.ties.empty()) result.classification = result.ties.front();
}

ChiralityResult alpha2(const ConvexPolygon&) {
  ChiralityResult r;
  r.value = 1.0;
  r.classification = AxisTag::Identity;
  r.ties.push_back(AxisTag::Identity);
  return r;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfileSample>& profile) {
  const auto old = out.precision(12);
  out << "theta,R\n";
  for (const ProfileSample& s : profile) out << s.theta << ',' << s.value << '\n';
  out.precision(old);
}

}  // namespace chirality
