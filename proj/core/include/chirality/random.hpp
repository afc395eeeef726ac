#pragma once

// Seeded generators for random convex polygons.

#include <cstddef>
#include <cstdint>
#include <random>

#include "chirality/geometry.hpp"

namespace chirality {

using Rng = std::mt19937_64;

/// Hull of Gaussian points, resampled until it has between min_vertices and
/// max_vertices vertices.
ConvexPolygon random_polygon(Rng& rng, std::size_t min_vertices = 5, std::size_t max_vertices = 12);

/// Hull of a Gaussian half-set and its negation, so K = -K.
ConvexPolygon random_symmetric_polygon(Rng& rng, std::size_t min_vertices = 4,
                                       std::size_t max_vertices = 12);

/// Uniform rotation angle, log-uniform scale in [1/4, 4], Gaussian shift.
struct Similarity {
  double angle;
  double scale;
  Point2 shift;
  ConvexPolygon apply(const ConvexPolygon& k) const {
    return k.rotated(angle).scaled(scale).translated(shift);
  }
};
Similarity random_similarity(Rng& rng);

}  // namespace chirality
