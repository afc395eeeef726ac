#include "chirality/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "chirality/error.hpp"

namespace chirality {

namespace {

template <class Make>
ConvexPolygon sample_until(Rng& rng, std::size_t lo, std::size_t hi, Make make) {
  for (;;) {
    std::vector<Point2> pts = make(rng);
    try {
      ConvexPolygon k = convex_hull(pts);
      if (k.size() >= lo && k.size() <= hi) return k;
    } catch (const Error&) {
    }
  }
}

}  // namespace

ConvexPolygon random_polygon(Rng& rng, std::size_t min_vertices, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> count(min_vertices, 3 * max_vertices);
  std::normal_distribution<double> gauss(0.0, 1.0);
  return sample_until(rng, std::max<std::size_t>(min_vertices, 3), max_vertices, [&](Rng& r) {
    std::vector<Point2> pts(count(r));
    for (Point2& p : pts) p = {gauss(r), gauss(r)};
    return pts;
  });
}

ConvexPolygon random_symmetric_polygon(Rng& rng, std::size_t min_vertices, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> count(std::max<std::size_t>(min_vertices / 2, 2),
                                                   std::max<std::size_t>(max_vertices, 4));
  std::normal_distribution<double> gauss(0.0, 1.0);
  return sample_until(rng, std::max<std::size_t>(min_vertices, 4), max_vertices, [&](Rng& r) {
    std::vector<Point2> pts;
    const std::size_t half = count(r);
    for (std::size_t i = 0; i < half; ++i) {
      const Point2 p{gauss(r), gauss(r)};
      pts.push_back(p);
      pts.push_back(-p);
    }
    return pts;
  });
}

Similarity random_similarity(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> log_scale(std::log(0.25), std::log(4.0));
  std::normal_distribution<double> gauss(0.0, 2.0);
  Similarity s;
  s.angle = angle(rng);
  s.scale = std::exp(log_scale(rng));
  s.shift = {gauss(rng), gauss(rng)};
  return s;
}

}  // namespace chirality
