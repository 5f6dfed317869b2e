#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mahler/ellipse.hpp"
#include "mahler/geom.hpp"

namespace mahler {

// Kite [o, a, b, c] with a, c on the unit circle and [a, b], [b, c] tangent to it.
struct Deltoid {
    double alpha = 0.0;
    Point2 a, b, c;
};
Deltoid make_deltoid(double alpha);

enum class SectorCase { i, ii, iii };
std::string_view to_string(SectorCase c);

// Extremal boundary of C = K ∩ Q for a prescribed area V(C).
struct SectorSpec {
    double alpha = 0.0;
    double target_area = 0.0;
    SectorCase case_tag = SectorCase::ii;
    // axis-aligned, centred at o; passes through a, c (case i) or touches both
    // tangent lines at the segment ends (case iii)
    Ellipse arc_ellipse;
    double segment_length = 0.0;
};

// Area of C for the case-(i) ellipse with horizontal semi-axis p.
double case_i_area(double alpha, double p);
// Area of C for case (iii) with segment length s.
double case_iii_area(double alpha, double s);

SectorSpec resolve_sector(double alpha, double target_area);

// Boundary point of C in direction theta, |theta| <= alpha.
Point2 sector_boundary(const SectorSpec& spec, double theta);

// The o-symmetric body K = C ∪ -C ∪ [o, I] ∪ [o, -I] as a polygon with about n
// vertices on its boundary.
Polygon sector_body(const SectorSpec& spec, int n);

// V(C*) = (V(K*) - 2 V([o, I])) / 2 for the discretized body.
double sector_polar_area(const SectorSpec& spec, int n);

// V(C) and V(C*) by clipping K and K* to the cone spanned by a and c.
struct ConeAreas {
    double body = 0.0;
    double polar = 0.0;
};
ConeAreas cone_areas(const Polygon& k, double alpha);

// The boundary of C* in closed form: case (i) and (iii) swap, case (ii) is fixed.
// The dual arc's form is the inverse of the primal one.
SectorSpec dual_spec(const SectorSpec& spec);
// Exact V(C) of a spec's boundary.
double spec_area(const SectorSpec& spec);
// Conic type of the dual arc; "ellipse" whenever the inverted form is definite.
std::string_view dual_conic_type(const SectorSpec& spec);

// A random convex boundary in Q through a and c, scaled toward the midpoint of
// [a, c] until V(C) = target_area; returned as the full symmetric body.
Polygon competitor_body(double alpha, double target_area, std::uint64_t seed, int arc_points);

double theoremB_f(double alpha);
bool theoremB_g_prime_positive(double beta);

enum class ExtremalEllipse { john, loewner };

struct SectorValue {
    double angle = 0.0;  // 2 alpha of the sector
    double value = 0.0;  // V(K ∩ S) + V(K* ∩ S)
    bool violation = false;
};

struct TheoremBReport {
    bool symmetric = true;
    ContactPattern pattern = ContactPattern::none;
    double vol_K = 0.0;
    double vol_Kstar = 0.0;
    double sum = 0.0;
    double sector_sum = 0.0;
    double tolerance = 0.0;
    std::vector<SectorValue> sectors;
    bool violation = false;
};

// Normalizes K so that the chosen extremal ellipse is B², certifies the Behrend
// pattern and checks V(K) + V(K*) <= 2 pi and the per-sector bound. Tolerance is
// 1e-6, plus pi^3 / n^2 when K discretizes a smooth body with n vertices (n <= 0
// for exact polygons). A non-symmetric K is only summed.
TheoremBReport theoremB_check(const Polygon& k, ExtremalEllipse which, int n);

}  // namespace mahler
