#pragma once

#include <string_view>
#include <vector>

#include "mahler/geom.hpp"

namespace mahler {

// {x : (x - center)^T A (x - center) <= 1} with A symmetric positive definite.
struct Ellipse {
    Mat2 form = Mat2::identity();
    Point2 center{};

    double area() const;
    // Support function of the origin-centred ellipse, sqrt(u^T A^-1 u).
    double support(const Point2& u) const;
    bool contains(const Point2& p, double tol = 0.0) const;
    // Polar of an origin-centred ellipse: the form is inverted.
    Ellipse polar() const;
    // Symmetric A^{1/2}; maps the ellipse onto the unit disk.
    Mat2 normalizer() const;
    // Inscribed N-gon.
    Polygon to_polygon(int n) const;
};

Mat2 sqrt_spd(const Mat2& a);
Ellipse transform(const Ellipse& e, const Mat2& m);

struct LoewnerSolve {
    Ellipse ellipse;
    // area / (dual lower bound on the optimal area) - 1
    double gap = 0.0;
    int iterations = 0;
};

// Minimum-area origin-centred ellipse containing the points.
LoewnerSolve minimum_enclosing_ellipse(std::span<const Point2> points);

// Löwner (minimum-area enclosing) ellipse of an o-symmetric polygon.
Ellipse loewner(const Polygon& k);
// John (maximum-area inscribed) ellipse of an o-symmetric polygon, as the polar
// of the Löwner ellipse of the polar.
Ellipse john(const Polygon& k);

enum class EllipseRole { inscribed, circumscribed };
enum class ContactPattern { square, hexagon, none };
std::string_view to_string(ContactPattern p);

struct ContactReport {
    std::vector<Point2> contact_points;  // in the frame where E is the unit disk
    ContactPattern pattern = ContactPattern::none;
    double max_gap_angle = 0.0;
};

ContactReport behrend_contacts(const Polygon& k, const Ellipse& e, EllipseRole role);

// Upper bound on the Banach-Mazur distance to ellipses: 1/mu for the largest mu
// with mu * loewner(K) inside K.
double bm_distance_upper(const Polygon& k);

}  // namespace mahler
