#pragma once

#include <vector>

#include "mahler/geom.hpp"

namespace mahler {

struct SteinerReport {
    Polygon symmetral;
    double area_drift = 0.0;
    double polar_area_before = 0.0;
    double polar_area_after = 0.0;
    // input is a shear of the symmetral that preserves lines orthogonal to the axis
    bool equality_case = false;
};

// Steiner symmetrization of an o-symmetric polygon about the line through o at
// angle axis_angle. Chords orthogonal to the axis are recentred on it.
SteinerReport steiner(const Polygon& k, double axis_angle);

// Successive symmetrizations; returns the final body.
Polygon steiner_round(const Polygon& k, const std::vector<double>& angles);

}  // namespace mahler
