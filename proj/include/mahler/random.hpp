#pragma once

#include <cstdint>
#include <random>

#include "mahler/geom.hpp"

namespace mahler {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

// Convex hull of m uniform points in the unit disk (vertex count varies).
Polygon random_hull(Rng& rng, int m);
// n points at sorted random angles on a random ellipse, then a random translation
// of size up to shift; always strictly convex with exactly n vertices.
Polygon random_cyclic(Rng& rng, int n, double shift = 0.0);
// Hull of +-p for `pairs` random points in an annulus; o-symmetric with at most 2*pairs vertices.
Polygon random_symmetric(Rng& rng, int pairs);
// Random Dirichlet combination of the vertices; strictly interior.
Point2 random_interior_point(Rng& rng, const Polygon& k);
// Random matrix with |det| in [0.2, 5] and condition number below ~25.
Mat2 random_linear(Rng& rng);

}  // namespace mahler
