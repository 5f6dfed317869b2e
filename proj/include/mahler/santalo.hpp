#pragma once

#include <cstdint>
#include <vector>

#include "mahler/geom.hpp"

namespace mahler {

// f(z) = V((K - z)^*), by exact polygon polarity.
double polar_volume_at(const Polygon& k, const Point2& z);
// grad f(z) = 3 * first moment of (K - z)^*.
Point2 polar_volume_grad(const Polygon& k, const Point2& z);

struct SantaloSolveReport {
    Point2 point;
    int iterations = 0;
    double final_gradient_norm = 0.0;
    // |centroid((K - s)^*)|; zero exactly at the Santaló point.
    double polar_centroid_norm = 0.0;
    bool converged = false;
};

// Damped Newton on f with a finite-difference Hessian, started at the centroid.
// Stops when |grad f| * max(1, diam/2) <= 1e-10 f; throws NoConvergence after 200 steps.
SantaloSolveReport santalo_point(const Polygon& k);

// K - s(K).
Polygon santalo_centered(const Polygon& k);

// Smallest lambda with -(K - s) inside lambda (K - s); never exceeds 2 in the plane.
double check_inclusion_0(const Polygon& k);

struct StabilityConstants {
    int dimension = 2;
    double kappa_d = 0.0;
    double kappa_d_minus_1 = 0.0;
    double c_K0 = 0.0;
    double eps1_K0 = 0.0;
    double theorem_e_coefficient = 0.0;
};

// Volume of the unit ball in R^d via kappa_d = kappa_{d-2} * 2 pi / d.
double unit_ball_volume(int d);
StabilityConstants stability_constants(int d, double diam, double vol);

struct TheoremERow {
    double eps = 0.0;
    int trial = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool violation = false;
};

// K0 moved so that s(K0) = o and the John ellipse of K0 ∩ -K0 is the unit disk.
Polygon theorem_e_normalize(const Polygon& k0);

// Random bodies K with (1-eps)K0 + a ⊂ K ⊂ (1+eps)K0 - a (K0 normalized first),
// comparing V((K0 - s(K))^*) - V((K0 - s(K0))^*) against the explicit eps^2 bound.
// Trial t uses seed + t.
std::vector<TheoremERow> theorem_e_experiment(const Polygon& k0, double eps, int trials, std::uint64_t seed);

}  // namespace mahler
