#include "mahler/santalo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/ellipse.hpp"
#include "mahler/error.hpp"
#include "mahler/kernels.hpp"
#include "mahler/random.hpp"

namespace mahler {

namespace {

void require_interior(const Polygon& k, const Point2& z) {
    if (!(boundary_distance(k, z) > 0.0)) throw Error(ErrorKind::PointNotInterior, "point is not interior");
}

Polygon shifted_polar(const Polygon& k, const Point2& z) {
    const Polygon kz = translate(k, -z);
    if (!kz.origin_interior()) throw Error(ErrorKind::PointNotInterior, "point too close to the boundary");
    return polar(kz);
}

}  // namespace

double polar_volume_at(const Polygon& k, const Point2& z) {
    require_interior(k, z);
    return area(shifted_polar(k, z));
}

Point2 polar_volume_grad(const Polygon& k, const Point2& z) {
    require_interior(k, z);
    return 3.0 * first_moment(shifted_polar(k, z));
}

SantaloSolveReport santalo_point(const Polygon& k) {
    constexpr int kMaxIter = 200;
    constexpr double kTol = 1e-10;

    const double len = std::max(1.0, 0.5 * diameter(k));
    Point2 z = centroid(k);
    const double inradius = boundary_distance(k, z);
    const double margin = 1e-9 * inradius;

    SantaloSolveReport rep;
    double f = polar_volume_at(k, z);
    for (int it = 0; it <= kMaxIter; ++it) {
        const Point2 g = polar_volume_grad(k, z);
        rep.iterations = it;
        rep.final_gradient_norm = norm(g);
        if (norm(g) * len <= kTol * f) {
            rep.converged = true;
            break;
        }
        if (it == kMaxIter) break;

        // Hessian by central differences of the exact gradient.
        const double h = 1e-4 * boundary_distance(k, z);
        const Point2 gx = polar_volume_grad(k, z + Point2{h, 0}) - polar_volume_grad(k, z - Point2{h, 0});
        const Point2 gy = polar_volume_grad(k, z + Point2{0, h}) - polar_volume_grad(k, z - Point2{0, h});
        Mat2 hess{gx.x / (2 * h), 0.5 * (gy.x + gx.y) / (2 * h), 0.5 * (gy.x + gx.y) / (2 * h), gy.y / (2 * h)};

        Point2 d;
        if (hess.a11 > 0.0 && hess.det() > 0.0) {
            d = -(hess.inverse() * g);
        } else {
            d = -(boundary_distance(k, z) / norm(g)) * g;
        }
        const double slope = dot(g, d);
        const double predicted = -0.5 * slope;

        double t = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
            const Point2 trial = z + t * d;
            if (boundary_distance(k, trial) <= margin) continue;
            const double ft = polar_volume_at(k, trial);
            // Below roundoff the Armijo test is meaningless; take the Newton step.
            if (ft <= f + 1e-4 * t * slope || (t == 1.0 && predicted <= 1e-13 * f)) {
                z = trial;
                f = ft;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    rep.point = z;
    rep.polar_centroid_norm = norm(centroid(shifted_polar(k, z)));
    if (!rep.converged) throw Error(ErrorKind::NoConvergence, "Santaló point solver did not converge");
    return rep;
}

Polygon santalo_centered(const Polygon& k) { return translate(k, -santalo_point(k).point); }

double check_inclusion_0(const Polygon& k) {
    const Point2 s = santalo_point(k).point;
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    double lambda = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
        const Point2 ed = v[(e + 1) % n] - v[e];
        const Point2 nrm{ed.y, -ed.x};
        const double h = dot(nrm, v[e] - s);
        for (const auto& p : v) lambda = std::max(lambda, dot(nrm, s - p) / h);
    }
    return lambda;
}

double unit_ball_volume(int d) {
    if (d < 0) throw Error(ErrorKind::InvalidDimension, "dimension must be non-negative");
    if (d == 0) return 1.0;
    if (d == 1) return 2.0;
    return unit_ball_volume(d - 2) * 2.0 * std::numbers::pi / d;
}

StabilityConstants stability_constants(int d, double diam, double vol) {
    if (d < 2) throw Error(ErrorKind::InvalidDimension, "dimension must be at least 2");
    if (!(diam > 0.0) || !(vol > 0.0)) throw Error(ErrorKind::DomainError, "diameter and volume must be positive");
    StabilityConstants c;
    c.dimension = d;
    c.kappa_d = unit_ball_volume(d);
    c.kappa_d_minus_1 = unit_ball_volume(d - 1);
    const double dd = d;
    c.c_K0 = std::pow(diam, (dd + 1) * (dd + 1)) * std::pow(vol, -dd - 2) * dd *
             std::pow(dd * c.kappa_d / c.kappa_d_minus_1, dd + 2);
    c.eps1_K0 = std::min(0.5, std::pow(2.0, -2 * dd - 1) * (c.kappa_d_minus_1 / (dd * c.kappa_d * c.kappa_d)) * vol /
                                  std::pow(diam, dd));
    // Evaluated in logs; the powers overflow quickly with d.
    const double log_coef = (2 * dd * dd + 4 * dd + 1) * std::log(2.0) + (2 * dd * dd + 6 * dd + 9) * std::log(dd) -
                            (2 * dd + 4) * std::log(c.kappa_d_minus_1) + std::log(c.kappa_d) +
                            (dd + 2) * std::log(dd + 1);
    c.theorem_e_coefficient = std::exp(log_coef);
    return c;
}

Polygon theorem_e_normalize(const Polygon& k0) {
    const Polygon k = santalo_centered(k0);
    const Polygon sym = intersect(k, apply_linear(k, Mat2::diag(-1.0, -1.0)));
    std::vector<Point2> pts = sym.vertices();
    for (const auto& p : sym.vertices()) pts.push_back(-p);
    const Polygon core = hull_polygon(std::move(pts));
    return apply_linear(k, john(core).normalizer());
}

std::vector<TheoremERow> theorem_e_experiment(const Polygon& k0, double eps, int trials, std::uint64_t seed) {
    const Polygon base = theorem_e_normalize(k0);
    const StabilityConstants consts = stability_constants(2, diameter(base), area(base));
    if (!(eps >= 0.0) || !(eps < consts.eps1_K0))
        throw Error(ErrorKind::SandwichUnsatisfiable, "eps must lie in [0, eps1(K0))");

    const Point2 s0 = santalo_point(base).point;
    const double f0 = polar_volume_at(base, s0);
    const double inradius = boundary_distance(base, s0);
    const double rhs = consts.theorem_e_coefficient * eps * eps;

    return kernels::map_parallel(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng(seed + t);
        TheoremERow row;
        row.eps = eps;
        row.trial = static_cast<int>(t);
        row.rhs = rhs;

        Polygon body = base;
        if (eps > 0.0) {
            // |a| <= eps * inradius keeps (1-eps)K0 + a inside (1+eps)K0 - a.
            const Point2 a = 0.5 * eps * inradius * std::sqrt(uniform(rng, 0.0, 1.0)) *
                             unit(uniform(rng, 0.0, 2.0 * std::numbers::pi));
            const Polygon inner = translate(scale(base, 1.0 - eps), a);
            const Polygon outer = translate(scale(base, 1.0 + eps), -a);
            std::vector<Point2> pts = inner.vertices();
            for (std::size_t j = 0; j < base.size(); ++j) {
                const double w = uniform(rng, 0.0, 1.0);
                pts.push_back(outer[j] + w * (inner[j] - outer[j]));
            }
            body = hull_polygon(std::move(pts));
            const double tol = 1e-12 * base.scale();
            if (!contains(body, inner, tol) || !contains(outer, body, tol))
                throw Error(ErrorKind::SandwichUnsatisfiable, "constructed body violates the sandwich");
        }
        const Point2 s = santalo_point(body).point;
        if (!(boundary_distance(base, s) > 0.0))
            throw Error(ErrorKind::SandwichUnsatisfiable, "s(K) left the interior of K0");
        row.lhs = polar_volume_at(base, s) - f0;
        row.violation = row.lhs > row.rhs;
        return row;
    });
}

}  // namespace mahler
