#include "mahler/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/ellipse.hpp"
#include "mahler/error.hpp"
#include "mahler/random.hpp"
#include "mahler/santalo.hpp"

namespace mahler {

namespace {

constexpr double kPi = std::numbers::pi;

// |sin| of the angle between a and b at o. The length of a is floored at
// 1e-2 * ref: near a parallelogram (x1 + x3)/2 tends to o and the bare sine is noise.
double sine_between(const Point2& a, const Point2& b, double ref) {
    const double na = norm(a), nb = norm(b);
    if (nb == 0.0) return 0.0;
    return std::abs(cross(a, b)) / (std::max(na, 1e-2 * ref) * nb);
}

Polygon validated(std::vector<Point2> v) {
    Polygon p = [&] {
        try {
            return polygon_new(std::move(v));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NonConvex) throw Error(ErrorKind::ConvexityLost, "move breaks convexity");
            throw;
        }
    }();
    if (!p.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "move pushes o to the boundary");
    return p;
}

Point2 meet(const Point2& p, const Point2& d, const Point2& q, const Point2& e) {
    const double den = cross(d, e);
    if (den == 0.0) throw Error(ErrorKind::ConvexityLost, "parallel neighbour lines");
    return p + (cross(q - p, e) / den) * d;
}

std::size_t wrap(long i, std::size_t n) {
    const long m = static_cast<long>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

Polygon initial_polygon(Rng& rng, int n, OptMode mode) {
    std::vector<Point2> v;
    if (mode == OptMode::symmetric) {
        const int h = n / 2;
        for (int j = 0; j < h; ++j) v.push_back(unit(kPi * (j + uniform(rng, -0.35, 0.35)) / h));
        for (int j = 0; j < h; ++j) v.push_back(-v[j]);
    } else {
        for (int j = 0; j < n; ++j) v.push_back(unit(2.0 * kPi * (j + uniform(rng, -0.35, 0.35)) / n));
    }
    return polygon_new(std::move(v));
}

// Linear map taking the vertex second-moment matrix to the identity; keeps the
// search well conditioned without changing the objective.
Polygon whiten(const Polygon& k) {
    Mat2 m{0.0, 0.0, 0.0, 0.0};
    for (const auto& v : k.vertices()) m = m + Mat2{v.x * v.x, v.x * v.y, v.x * v.y, v.y * v.y};
    m = (1.0 / k.size()) * m;
    return apply_linear(k, sqrt_spd(m).inverse());
}

}  // namespace

std::string_view to_string(OptMode m) { return m == OptMode::symmetric ? "symmetric" : "santalo_centered"; }

double regular_product(int n) {
    const double s = std::sin(kPi / n);
    return n * n * s * s;
}

Residuals condition_residuals(const Polygon& k) {
    if (!k.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "conditions are taken at o");
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    Residuals r;
    for (std::size_t j = 0; j < n; ++j) {
        const Point2& x1 = v[j];
        const Point2& x2 = v[wrap(j + 1, n)];
        const Point2& x3 = v[wrap(j + 2, n)];
        const Point2& x4 = v[wrap(j + 3, n)];
        r.residual_i = std::max(r.residual_i, sine_between(0.5 * (x1 + x3), x2, norm(x2)));
        // homogeneous intersection of aff{x1,x2} and aff{x3,x4}; (mx, my) is the
        // direction from o to the point, finite or not
        const double l1[3] = {x1.y - x2.y, x2.x - x1.x, cross(x1, x2)};
        const double l2[3] = {x3.y - x4.y, x4.x - x3.x, cross(x3, x4)};
        const Point2 m{l1[1] * l2[2] - l1[2] * l2[1], l1[2] * l2[0] - l1[0] * l2[2]};
        r.residual_ii = std::max(r.residual_ii, sine_between(0.5 * (x2 + x3), m, norm(x2)));
    }
    return r;
}

Polygon move_slide_vertex(const Polygon& k, int i, double t, bool symmetric) {
    std::vector<Point2> v = k.vertices();
    const std::size_t n = v.size();
    const std::size_t a = wrap(i, n);
    v[a] = v[a] + t * (v[wrap(i + 1, n)] - v[wrap(i - 1, n)]);
    if (symmetric) {
        if (n % 2 != 0) throw Error(ErrorKind::NotSymmetric, "symmetric moves need an even vertex count");
        v[wrap(i + static_cast<long>(n / 2), n)] = -v[a];
    }
    return validated(std::move(v));
}

Polygon move_rotate_edge(const Polygon& k, int i, double eps, bool symmetric) {
    const auto& v0 = k.vertices();
    const std::size_t n = v0.size();
    if (symmetric && n % 2 != 0) throw Error(ErrorKind::NotSymmetric, "symmetric moves need an even vertex count");
    const std::size_t a = wrap(i, n), b = wrap(i + 1, n);
    const std::size_t ha = wrap(i + static_cast<long>(n / 2), n), hb = wrap(i + 1 + static_cast<long>(n / 2), n);
    const Point2 prev = v0[wrap(i - 1, n)], next = v0[wrap(i + 2, n)];
    const Point2 mid = 0.5 * (v0[a] + v0[b]);
    const Point2 dir = Mat2::rotation(eps) * (v0[b] - v0[a]);
    const Point2 nrm = perp(dir) / norm(dir);

    auto build = [&](double d) {
        std::vector<Point2> v = v0;
        v[a] = meet(prev, v0[a] - prev, mid + d * nrm, dir);
        v[b] = meet(mid + d * nrm, dir, next, next - v0[b]);
        if (symmetric) v[ha] = -v[a], v[hb] = -v[b];
        return v;
    };
    const double target = area(k);
    // area is quadratic in the offset d; fit it from three evaluations
    const double h = 1e-2 * norm(v0[b] - v0[a]);
    const double am = signed_area(build(-h)), a0 = signed_area(build(0.0)), ap = signed_area(build(h));
    const double qa = (ap + am - 2.0 * a0) / (2.0 * h * h);
    const double qb = (ap - am) / (2.0 * h);
    const double qc = a0 - target;
    double d;
    if (std::abs(qa) * std::abs(qc) <= 1e-14 * qb * qb) {
        d = -qc / qb;
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0) throw Error(ErrorKind::ConvexityLost, "area cannot be restored");
        // root of smallest magnitude, computed stably
        const double s = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
        d = qc / s;
    }
    return validated(build(d));
}

double objective(const Polygon& k, OptMode mode) {
    if (mode == OptMode::symmetric) return volume_product(k);
    return area(k) * polar_volume_at(k, santalo_point(k).point);
}

OptResult maximize_product(const OptConfig& cfg) {
    if (cfg.n < 3) throw Error(ErrorKind::TooFewVertices, "need n >= 3");
    const bool sym = cfg.mode == OptMode::symmetric;
    if (sym && cfg.n % 2 != 0) throw Error(ErrorKind::NotSymmetric, "symmetric mode needs even n");

    Rng rng(cfg.seed);
    Polygon k = initial_polygon(rng, cfg.n, cfg.mode);
    if (!sym) k = santalo_centered(k);
    OptResult res{k};
    res.product_trace.push_back(objective(k, cfg.mode));

    const int m = sym ? cfg.n / 2 : cfg.n;
    std::vector<double> steps(2 * m, cfg.step_init);
    while (res.iterations < cfg.max_iters) {
        bool live = false;
        for (int c = 0; c < 2 * m && res.iterations < cfg.max_iters; ++c) {
            if (steps[c] < cfg.step_min) continue;
            live = true;
            ++res.iterations;
            bool improved = false;
            for (double sign : {1.0, -1.0}) {
                try {
                    const double t = sign * steps[c];
                    Polygon cand = c < m ? move_slide_vertex(k, c, t, sym) : move_rotate_edge(k, c - m, t, sym);
                    if (!sym) cand = santalo_centered(cand);
                    const double val = objective(cand, cfg.mode);
                    if (val > res.product_trace.back()) {
                        k = std::move(cand);
                        res.product_trace.push_back(val);
                        improved = true;
                        break;
                    }
                } catch (const Error&) {
                    // infeasible trial step; treated as no improvement
                }
            }
            steps[c] = improved ? std::min(2.0 * steps[c], cfg.step_init) : 0.5 * steps[c];
        }
        if (!live) {
            res.converged = true;
            break;
        }
        k = whiten(k);
    }

    res.final = k;
    const Residuals r = condition_residuals(k);
    res.residual_i = r.residual_i;
    res.residual_ii = r.residual_ii;
    res.regularity_score = affine_regularity_score(k);
    return res;
}

double affine_regularity_score(const Polygon& k) {
    if (!k.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "score is taken about o");
    // Löwner ellipse of K ∩ -K from its vertices and their reflections, so nearly
    // symmetric bodies need no exact symmetry test
    const Polygon core = intersect(k, apply_linear(k, Mat2::diag(-1.0, -1.0)));
    std::vector<Point2> pts = core.vertices();
    for (const auto& p : core.vertices()) pts.push_back(-p);
    const Polygon kn = apply_linear(k, minimum_enclosing_ellipse(pts).ellipse.normalizer());
    const auto& v = kn.vertices();
    const std::size_t n = v.size();
    double mean_r = 0.0;
    for (const auto& p : v) mean_r += norm(p);
    mean_r /= n;

    std::vector<Point2> reg(n);
    for (std::size_t j = 0; j < n; ++j) reg[j] = unit(2.0 * kPi * j / n);
    double best = 1e300;
    for (int refl : {1, -1}) {
        for (std::size_t s = 0; s < n; ++s) {
            auto target = [&](std::size_t j) {
                const Point2 r = reg[wrap(static_cast<long>(s) + refl * static_cast<long>(j), n)];
                return r;
            };
            // best rotation for this matching (Procrustes)
            double sc = 0.0, ss = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const Point2 w = v[j] / mean_r, r = target(j);
                sc += dot(r, w);
                ss += cross(r, w);
            }
            const Mat2 rot = Mat2::rotation(std::atan2(ss, sc));
            double worst = 0.0;
            for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, norm(v[j] / mean_r - rot * target(j)));
            best = std::min(best, worst);
        }
    }
    return best;
}

}  // namespace mahler
