#include "mahler/random.hpp"

#include <algorithm>
#include <numbers>

namespace mahler {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Polygon random_hull(Rng& rng, int m) {
    for (;;) {
        std::vector<Point2> pts;
        for (int i = 0; i < m; ++i) {
            const double r = std::sqrt(uniform(rng, 0.0, 1.0));
            pts.push_back(r * unit(uniform(rng, 0.0, 2.0 * std::numbers::pi)));
        }
        auto h = convex_hull(std::move(pts));
        if (h.size() >= 3 && signed_area(h) > 1e-3) return polygon_new(std::move(h));
    }
}

Polygon random_cyclic(Rng& rng, int n, double shift) {
    std::vector<double> ang(static_cast<std::size_t>(n));
    const double step = 2.0 * std::numbers::pi / n;
    for (int i = 0; i < n; ++i) ang[static_cast<std::size_t>(i)] = step * (i + uniform(rng, -0.4, 0.4));
    const double ax = uniform(rng, 0.5, 1.5), by = uniform(rng, 0.5, 1.5);
    const Mat2 m = Mat2::rotation(uniform(rng, 0.0, std::numbers::pi)) * Mat2::diag(ax, by);
    const Point2 t{uniform(rng, -shift, shift), uniform(rng, -shift, shift)};
    std::vector<Point2> v;
    for (double a : ang) v.push_back(m * unit(a) + t);
    return polygon_new(std::move(v));
}

Polygon random_symmetric(Rng& rng, int pairs) {
    for (;;) {
        std::vector<Point2> pts;
        for (int i = 0; i < pairs; ++i) {
            const Point2 p = uniform(rng, 0.3, 1.0) * unit(uniform(rng, 0.0, std::numbers::pi));
            pts.push_back(p);
            pts.push_back(-p);
        }
        auto h = convex_hull(std::move(pts));
        if (h.size() < 4 || signed_area(h) < 1e-2) continue;
        Polygon k = polygon_new(std::move(h));
        if (is_origin_symmetric(k, 1e-12) && k.origin_interior()) return k;
    }
}

Point2 random_interior_point(Rng& rng, const Polygon& k) {
    std::exponential_distribution<double> ex(1.0);
    Point2 p{};
    double s = 0.0;
    for (const auto& v : k.vertices()) {
        const double w = ex(rng) + 1e-3;
        p += w * v;
        s += w;
    }
    return p / s;
}

Mat2 random_linear(Rng& rng) {
    const Mat2 r1 = Mat2::rotation(uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const Mat2 r2 = Mat2::rotation(uniform(rng, 0.0, 2.0 * std::numbers::pi));
    Mat2 d = Mat2::diag(uniform(rng, 0.45, 2.2), uniform(rng, 0.45, 2.2));
    if (uniform(rng, 0.0, 1.0) < 0.5) d.a22 = -d.a22;
    return r1 * d * r2;
}

}  // namespace mahler
