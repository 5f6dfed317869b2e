#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mahler {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2& operator+=(const Point2& o) { x += o.x; y += o.y; return *this; }
    Point2& operator-=(const Point2& o) { x -= o.x; y -= o.y; return *this; }
    Point2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Point2 operator+(Point2 a, const Point2& b) { return a += b; }
inline Point2 operator-(Point2 a, const Point2& b) { return a -= b; }
inline Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
inline Point2 operator*(double s, Point2 a) { return a *= s; }
inline Point2 operator*(Point2 a, double s) { return a *= s; }
inline Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
inline bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }
inline Point2 perp(const Point2& a) { return {-a.y, a.x}; }
inline Point2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Row-major 2x2 matrix.
struct Mat2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 rotation(double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c, -s, s, c};
    }
    static Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
    Mat2 transpose() const { return {a11, a21, a12, a22}; }
    Mat2 inverse() const;
    // Frobenius norm.
    double norm() const { return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22); }
};

inline Point2 operator*(const Mat2& m, const Point2& p) {
    return {m.a11 * p.x + m.a12 * p.y, m.a21 * p.x + m.a22 * p.y};
}
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}
inline Mat2 operator*(double s, const Mat2& m) { return {s * m.a11, s * m.a12, s * m.a21, s * m.a22}; }
inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

// The line {x : <x, normal> = 1}; never passes through the origin.
struct LineStar {
    Point2 normal;
};

LineStar line_through(const Point2& p, const Point2& q);
Point2 intersect(const LineStar& l1, const LineStar& l2);

// Counterclockwise, strictly convex polygon. Construct through polygon_new
// (validating) or the geometric operations below, which preserve validity.
class Polygon {
public:
    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }
    // Cyclic access; i may be negative or >= size().
    const Point2& at_cyclic(long i) const;

    bool origin_interior() const { return origin_interior_; }
    double scale() const;

    // Skips validation. For vertex lists produced by convexity-preserving maps.
    static Polygon trusted(std::vector<Point2> vertices);

private:
    explicit Polygon(std::vector<Point2> vertices);
    std::vector<Point2> vertices_;
    bool origin_interior_ = false;
};

Polygon polygon_new(std::vector<Point2> points);

double signed_area(std::span<const Point2> pts);
double area(const Polygon& k);
Point2 first_moment(const Polygon& k);
Point2 centroid(const Polygon& k);

double support(const Polygon& k, const Point2& u);
Polygon polar(const Polygon& k);
double volume_product(const Polygon& k);

Polygon apply_linear(const Polygon& k, const Mat2& m);
Polygon translate(const Polygon& k, const Point2& t);
Polygon scale(const Polygon& k, double s);

// Distance from p to K; zero when p is inside.
double distance_to(const Polygon& k, const Point2& p);
// Smallest distance from an interior point to the boundary (negative outside).
double boundary_distance(const Polygon& k, const Point2& p);
bool contains(const Polygon& k, const Point2& p, double tol = 0.0);
bool contains(const Polygon& outer, const Polygon& inner, double tol = 0.0);
double hausdorff(const Polygon& k, const Polygon& l);
double diameter(const Polygon& k);
// Radius of the largest disk centred at the origin inside K.
double inradius_at_origin(const Polygon& k);

// Vertex set invariant under x -> -x up to tol * scale.
bool is_origin_symmetric(const Polygon& k, double tol = 1e-9);

// Andrew's monotone chain. Collinear and duplicate points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts);
Polygon hull_polygon(std::vector<Point2> pts);

// Sutherland-Hodgman step keeping {x : <normal, x> <= offset}.
std::vector<Point2> clip_halfplane(std::span<const Point2> pts, const Point2& normal, double offset);
// Part of K inside the closed cone {t p + s q : t, s >= 0}; angle(p, q) in (0, pi).
std::vector<Point2> clip_cone(std::span<const Point2> pts, const Point2& p, const Point2& q);
Polygon intersect(const Polygon& k, const Polygon& l);

// Regular n-gon inscribed in the circle of given radius, first vertex at angle phase.
Polygon regular_polygon(int n, double radius = 1.0, double phase = 0.0);

}  // namespace mahler
