#include "mahler/geom.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "mahler/error.hpp"

namespace mahler {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::NonConvex: return "NonConvex";
        case ErrorKind::OriginNotInterior: return "OriginNotInterior";
        case ErrorKind::ZeroDirection: return "ZeroDirection";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::PointNotInterior: return "PointNotInterior";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::InvalidDimension: return "InvalidDimension";
        case ErrorKind::SandwichUnsatisfiable: return "SandwichUnsatisfiable";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::DegenerateBody: return "DegenerateBody";
        case ErrorKind::NoContacts: return "NoContacts";
        case ErrorKind::AreaOutOfRange: return "AreaOutOfRange";
        case ErrorKind::BisectionFailure: return "BisectionFailure";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::BehrendPatternMissing: return "BehrendPatternMissing";
        case ErrorKind::ConvexityLost: return "ConvexityLost";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::NonPositiveDeficit: return "NonPositiveDeficit";
        case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

LineStar line_through(const Point2& p, const Point2& q) {
    const double c = cross(p, q);
    if (c == 0.0) throw Error(ErrorKind::OriginNotInterior, "line passes through the origin");
    return {Point2{q.y - p.y, p.x - q.x} / c};
}

Point2 intersect(const LineStar& l1, const LineStar& l2) {
    // <x, n1> = 1, <x, n2> = 1
    const double d = cross(l1.normal, l2.normal);
    if (d == 0.0) throw Error(ErrorKind::SingularMatrix, "parallel lines");
    return Point2{l2.normal.y - l1.normal.y, l1.normal.x - l2.normal.x} / d;
}

namespace {

double scale_of(std::span<const Point2> v) {
    double s = 0.0;
    for (const auto& p : v) s = std::max(s, norm(p));
    return s;
}

bool origin_strictly_inside(std::span<const Point2> v) {
    const double tol = 1e-12 * std::pow(scale_of(v), 2);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(v[i], v[(i + 1) % n]) <= tol) return false;
    }
    return true;
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices)
    : vertices_(std::move(vertices)), origin_interior_(origin_strictly_inside(vertices_)) {}

Polygon Polygon::trusted(std::vector<Point2> vertices) { return Polygon(std::move(vertices)); }

const Point2& Polygon::at_cyclic(long i) const {
    const long n = static_cast<long>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

double Polygon::scale() const { return scale_of(vertices_); }

Polygon polygon_new(std::vector<Point2> points) {
    if (points.size() < 3) throw Error(ErrorKind::TooFewVertices, "need at least 3 vertices");
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(ErrorKind::InvalidInput, "non-finite coordinate");
    }
    if (signed_area(points) < 0.0) std::reverse(points.begin() + 1, points.end());

    const std::size_t n = points.size();
    const double tol = 1e-12 * std::pow(scale_of(points), 2);
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e0 = points[i] - points[(i + n - 1) % n];
        const Point2 e1 = points[(i + 1) % n] - points[i];
        if (cross(e0, e1) <= tol) throw Error(ErrorKind::NonConvex, "collinear triple or reflex vertex");
        turning += std::atan2(cross(e0, e1), dot(e0, e1));
    }
    // All left turns but winding more than once (e.g. a pentagram).
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6)
        throw Error(ErrorKind::NonConvex, "vertex list winds more than once");
    return Polygon::trusted(std::move(points));
}

double signed_area(std::span<const Point2> pts) {
    if (pts.size() < 3) return 0.0;
    const Point2 o = pts[0];
    double s = 0.0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) s += cross(pts[i] - o, pts[i + 1] - o);
    return 0.5 * s;
}

double area(const Polygon& k) { return signed_area(k.vertices()); }

Point2 first_moment(const Polygon& k) {
    // Fan of triangles from v0, then shifted back: int y dy = A*v0 + int (y - v0) dy.
    const auto& v = k.vertices();
    const Point2 o = v[0];
    double a = 0.0;
    Point2 m{};
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Point2 p = v[i] - o, q = v[i + 1] - o;
        const double c = cross(p, q);
        a += c;
        m += c * (p + q);
    }
    return m / 6.0 + (0.5 * a) * o;
}

Point2 centroid(const Polygon& k) {
    const auto& v = k.vertices();
    const Point2 o = v[0];
    double a = 0.0;
    Point2 m{};
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Point2 p = v[i] - o, q = v[i + 1] - o;
        const double c = cross(p, q);
        a += c;
        m += c * (p + q);
    }
    return o + m / (3.0 * a);
}

double support(const Polygon& k, const Point2& u) {
    if (u.x == 0.0 && u.y == 0.0) throw Error(ErrorKind::ZeroDirection, "support direction is zero");
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : k.vertices()) h = std::max(h, dot(u, v));
    return h;
}

Polygon polar(const Polygon& k) {
    if (!k.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "polar needs the origin strictly inside");
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    std::vector<Point2> out(n);
    // Vertex i of K* is the pole of the edge ending at vertex i.
    for (std::size_t i = 0; i < n; ++i) out[i] = line_through(v[(i + n - 1) % n], v[i]).normal;
    return Polygon::trusted(std::move(out));
}

double volume_product(const Polygon& k) { return area(k) * area(polar(k)); }

Polygon apply_linear(const Polygon& k, const Mat2& m) {
    const double d = m.det();
    if (!(std::abs(d) > 1e-14 * m.norm() * m.norm())) throw Error(ErrorKind::SingularMatrix, "singular linear map");
    std::vector<Point2> out;
    out.reserve(k.size());
    for (const auto& v : k.vertices()) out.push_back(m * v);
    if (d < 0.0) std::reverse(out.begin() + 1, out.end());
    return Polygon::trusted(std::move(out));
}

Polygon translate(const Polygon& k, const Point2& t) {
    std::vector<Point2> out = k.vertices();
    for (auto& v : out) v += t;
    return Polygon::trusted(std::move(out));
}

Polygon scale(const Polygon& k, double s) {
    if (!(s > 0.0)) throw Error(ErrorKind::SingularMatrix, "scale factor must be positive");
    std::vector<Point2> out = k.vertices();
    for (auto& v : out) v *= s;
    return Polygon::trusted(std::move(out));
}

double boundary_distance(const Polygon& k, const Point2& p) {
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e = v[(i + 1) % n] - v[i];
        d = std::min(d, cross(e, p - v[i]) / norm(e));
    }
    return d;
}

namespace {

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 e = b - a;
    const double t = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
    return norm(p - (a + t * e));
}

}  // namespace

double distance_to(const Polygon& k, const Point2& p) {
    if (boundary_distance(k, p) >= 0.0) return 0.0;
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) d = std::min(d, segment_distance(p, v[i], v[(i + 1) % n]));
    return d;
}

bool contains(const Polygon& k, const Point2& p, double tol) { return boundary_distance(k, p) >= -tol; }

bool contains(const Polygon& outer, const Polygon& inner, double tol) {
    for (const auto& v : inner.vertices()) {
        if (!contains(outer, v, tol)) return false;
    }
    return true;
}

double hausdorff(const Polygon& k, const Polygon& l) {
    // dist(., L) is convex, so the directed distance peaks at a vertex.
    double d = 0.0;
    for (const auto& v : k.vertices()) d = std::max(d, distance_to(l, v));
    for (const auto& v : l.vertices()) d = std::max(d, distance_to(k, v));
    return d;
}

double diameter(const Polygon& k) {
    const auto& v = k.vertices();
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) d = std::max(d, norm(v[i] - v[j]));
    return d;
}

double inradius_at_origin(const Polygon& k) { return boundary_distance(k, Point2{}); }

bool is_origin_symmetric(const Polygon& k, double tol) {
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    if (n % 2 != 0) return false;
    const double t = tol * k.scale();
    for (std::size_t i = 0; i < n; ++i) {
        if (norm(v[i] + v[(i + n / 2) % n]) > t) return false;
    }
    return true;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    const double tol = 1e-12 * std::pow(scale_of(pts), 2);
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 1]) <= tol) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const Point2& p = pts[i];
        while (k >= lower && cross(h[k - 1] - h[k - 2], p - h[k - 1]) <= tol) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    return h;
}

Polygon hull_polygon(std::vector<Point2> pts) { return polygon_new(convex_hull(std::move(pts))); }

std::vector<Point2> clip_halfplane(std::span<const Point2> pts, const Point2& normal, double offset) {
    std::vector<Point2> out;
    const std::size_t n = pts.size();
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = pts[i];
        const Point2& b = pts[(i + 1) % n];
        const double da = dot(normal, a) - offset;
        const double db = dot(normal, b) - offset;
        if (da <= 0.0) out.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) out.push_back(a + (da / (da - db)) * (b - a));
    }
    return out;
}

std::vector<Point2> clip_cone(std::span<const Point2> pts, const Point2& p, const Point2& q) {
    // Inside means cross(p, x) >= 0 and cross(x, q) >= 0.
    auto out = clip_halfplane(pts, Point2{p.y, -p.x}, 0.0);
    return clip_halfplane(out, Point2{-q.y, q.x}, 0.0);
}

Polygon intersect(const Polygon& k, const Polygon& l) {
    std::vector<Point2> pts = k.vertices();
    const auto& w = l.vertices();
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e = w[(i + 1) % n] - w[i];
        const Point2 nrm{e.y, -e.x};
        pts = clip_halfplane(pts, nrm, dot(nrm, w[i]));
        if (pts.size() < 3) throw Error(ErrorKind::DegenerateBody, "empty intersection");
    }
    return hull_polygon(std::move(pts));
}

Polygon regular_polygon(int n, double radius, double phase) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "regular polygon needs n >= 3");
    std::vector<Point2> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = radius * unit(phase + 2.0 * std::numbers::pi * i / n);
    return Polygon::trusted(std::move(v));
}

}  // namespace mahler
