#include "mahler/symmetrize.hpp"

#include <algorithm>
#include <cmath>

#include "mahler/error.hpp"

namespace mahler {

namespace {

struct Chord {
    double x, lo, hi;
};

// Vertical chord of K at abscissa x; x must lie in the projection of K. Edges
// narrower than tol count as vertical, so rounding cannot split one.
Chord chord_at(const std::vector<Point2>& v, double x, double tol) {
    double lo = 1e300, hi = -1e300;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        const double xl = std::min(a.x, b.x), xr = std::max(a.x, b.x);
        if (x < xl - tol || x > xr + tol) continue;
        if (xr - xl <= tol) {
            lo = std::min({lo, a.y, b.y});
            hi = std::max({hi, a.y, b.y});
            continue;
        }
        const double t = std::clamp((x - a.x) / (b.x - a.x), 0.0, 1.0);
        const double y = a.y + t * (b.y - a.y);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    return {x, lo, hi};
}

}  // namespace

SteinerReport steiner(const Polygon& k, double axis_angle) {
    if (!is_origin_symmetric(k)) throw Error(ErrorKind::NotSymmetric, "Steiner symmetrization needs an o-symmetric body");
    const Mat2 to_axis = Mat2::rotation(-axis_angle);
    const Polygon r = apply_linear(k, to_axis);
    const auto& v = r.vertices();

    std::vector<double> xs;
    xs.reserve(v.size());
    for (const auto& p : v) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    const double tol = 1e-12 * k.scale();
    xs.erase(std::unique(xs.begin(), xs.end(), [&](double a, double b) { return b - a <= tol; }), xs.end());

    std::vector<Chord> chords;
    chords.reserve(xs.size());
    for (double x : xs) chords.push_back(chord_at(v, x, tol));

    std::vector<Point2> pts;
    pts.reserve(2 * chords.size());
    double trapezoid_area = 0.0;
    for (std::size_t j = 0; j < chords.size(); ++j) {
        const double half = 0.5 * (chords[j].hi - chords[j].lo);
        pts.push_back({chords[j].x, -half});
        pts.push_back({chords[j].x, half});
        if (j + 1 < chords.size())
            trapezoid_area += (half + 0.5 * (chords[j + 1].hi - chords[j + 1].lo)) * (chords[j + 1].x - chords[j].x);
    }
    const Polygon sym_axis = hull_polygon(std::move(pts));

    SteinerReport rep{apply_linear(sym_axis, to_axis.transpose())};
    const double a0 = area(k);
    rep.area_drift = std::max(std::abs(area(rep.symmetral) - a0), std::abs(trapezoid_area - a0));
    rep.polar_area_before = area(polar(k));
    rep.polar_area_after = area(polar(rep.symmetral));

    // Equality: chord midpoints lie on a line through o, i.e. K is the image of
    // its symmetral under (x, y) -> (x, y + c x).
    double sxx = 0.0, sxm = 0.0;
    for (const auto& c : chords) {
        const double m = 0.5 * (c.lo + c.hi);
        sxx += c.x * c.x;
        sxm += c.x * m;
    }
    const double slope = sxm / sxx;
    double resid = 0.0;
    for (const auto& c : chords) resid = std::max(resid, std::abs(0.5 * (c.lo + c.hi) - slope * c.x));
    rep.equality_case = resid <= 1e-8 * k.scale();
    return rep;
}

Polygon steiner_round(const Polygon& k, const std::vector<double>& angles) {
    Polygon cur = k;
    for (double a : angles) cur = steiner(cur, a).symmetral;
    return cur;
}

}  // namespace mahler
