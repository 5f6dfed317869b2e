#include "mahler/sector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/error.hpp"
#include "mahler/random.hpp"

namespace mahler {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAreaTol = 1e-12;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 0.5 * kPi)) throw Error(ErrorKind::DomainError, "alpha must lie in (0, pi/2)");
}

// Bisection for an increasing function on (lo, hi); only interior points are evaluated.
template <class F>
double bisect_increasing(F&& f, double lo, double hi, double target) {
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = f(mid);
        if (std::abs(v - target) <= kAreaTol) return mid;
        if (mid == lo || mid == hi) break;
        (v < target ? lo : hi) = mid;
    }
    throw Error(ErrorKind::BisectionFailure, "area bisection did not reach 1e-12");
}

Point2 case_iii_corner(double alpha, double s) {
    const Deltoid q = make_deltoid(alpha);
    const Point2 dir = q.b - q.c;
    return q.c + (s / norm(dir)) * dir;
}

double cone_area(std::span<const Point2> pts, const Point2& p, const Point2& q) {
    const auto clipped = clip_cone(pts, p, q);
    return clipped.size() < 3 ? 0.0 : signed_area(clipped);
}

}  // namespace

Deltoid make_deltoid(double alpha) {
    check_alpha(alpha);
    const double c = std::cos(alpha), s = std::sin(alpha);
    return {alpha, {c, -s}, {1.0 / c, 0.0}, {c, s}};
}

std::string_view to_string(SectorCase c) {
    switch (c) {
        case SectorCase::i: return "i";
        case SectorCase::ii: return "ii";
        case SectorCase::iii: return "iii";
    }
    return "?";
}

double case_i_area(double alpha, double p) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double q = sa / std::sqrt(1.0 - ca * ca / (p * p));
    return p * q * std::atan2(sa / q, ca / p);
}

double case_iii_area(double alpha, double s) {
    const Point2 cp = case_iii_corner(alpha, s);
    const double p = std::sqrt(cp.x / std::cos(alpha)), q = std::sqrt(cp.y / std::sin(alpha));
    // two triangles of height 1 over the segments, plus the elliptic sector
    return s + p * q * std::atan2(cp.y / q, cp.x / p);
}

SectorSpec resolve_sector(double alpha, double target_area) {
    check_alpha(alpha);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    if (!(target_area > ca * sa && target_area < sa / ca))
        throw Error(ErrorKind::AreaOutOfRange, "V(C) must lie in (cos a sin a, tan a)");
    SectorSpec spec;
    spec.alpha = alpha;
    spec.target_area = target_area;
    if (std::abs(target_area - alpha) <= kAreaTol) {
        spec.case_tag = SectorCase::ii;
        return spec;
    }
    if (target_area < alpha) {
        const double p = bisect_increasing([&](double x) { return case_i_area(alpha, x); }, ca, 1.0, target_area);
        const double q = sa / std::sqrt(1.0 - ca * ca / (p * p));
        spec.case_tag = SectorCase::i;
        spec.arc_ellipse = Ellipse{Mat2::diag(1.0 / (p * p), 1.0 / (q * q)), {}};
        return spec;
    }
    const double s = bisect_increasing([&](double x) { return case_iii_area(alpha, x); }, 0.0, sa / ca, target_area);
    const Point2 cp = case_iii_corner(alpha, s);
    spec.case_tag = SectorCase::iii;
    spec.segment_length = s;
    spec.arc_ellipse = Ellipse{Mat2::diag(ca / cp.x, sa / cp.y), {}};
    return spec;
}

Point2 sector_boundary(const SectorSpec& spec, double theta) {
    const Point2 u = unit(theta);
    if (spec.case_tag == SectorCase::iii) {
        const Point2 cp = case_iii_corner(spec.alpha, spec.segment_length);
        if (std::abs(theta) > std::atan2(cp.y, cp.x)) {
            const Point2 n = unit(theta > 0 ? spec.alpha : -spec.alpha);
            return u / dot(n, u);
        }
    }
    const Mat2& a = spec.arc_ellipse.form;
    return u / std::sqrt(dot(u, a * u));
}

Polygon sector_body(const SectorSpec& spec, int n) {
    if (n < 16) throw Error(ErrorKind::DomainError, "need at least 16 boundary samples");
    const double al = spec.alpha;
    std::vector<double> angles{al, kPi - al};
    if (spec.case_tag == SectorCase::iii) {
        const Point2 cp = case_iii_corner(al, spec.segment_length);
        const double t = std::atan2(cp.y, cp.x);
        angles.insert(angles.end(), {t, -t, kPi - t, kPi + t});
    }
    for (int j = 0; j < n / 2; ++j) angles.push_back(2.0 * kPi * j / n);

    std::vector<Point2> pts;
    for (double th : angles) {
        // reduce to (-pi/2, 3pi/2)
        if (th > 1.5 * kPi) th -= 2.0 * kPi;
        Point2 p;
        if (std::abs(th) <= al)
            p = sector_boundary(spec, th);
        else if (std::abs(th - kPi) <= al)
            p = -sector_boundary(spec, th - kPi);
        else
            p = unit(th);
        pts.push_back(p);
        pts.push_back(-p);
    }
    // a and c exactly
    const Deltoid q = make_deltoid(al);
    for (const Point2& p : {q.a, q.c}) {
        pts.push_back(p);
        pts.push_back(-p);
    }
    return hull_polygon(std::move(pts));
}

double sector_polar_area(const SectorSpec& spec, int n) {
    const Polygon k = sector_body(spec, n);
    return 0.5 * (area(polar(k)) - (kPi - 2.0 * spec.alpha));
}

ConeAreas cone_areas(const Polygon& k, double alpha) {
    const Deltoid q = make_deltoid(alpha);
    return {cone_area(k.vertices(), q.a, q.c), cone_area(polar(k).vertices(), q.a, q.c)};
}

double spec_area(const SectorSpec& spec) {
    switch (spec.case_tag) {
        case SectorCase::i: return case_i_area(spec.alpha, 1.0 / std::sqrt(spec.arc_ellipse.form.a11));
        case SectorCase::ii: return spec.alpha;
        case SectorCase::iii: return case_iii_area(spec.alpha, spec.segment_length);
    }
    return 0.0;
}

SectorSpec dual_spec(const SectorSpec& spec) {
    SectorSpec d = spec;
    const Deltoid q = make_deltoid(spec.alpha);
    d.arc_ellipse = spec.arc_ellipse.polar();
    switch (spec.case_tag) {
        case SectorCase::ii:
            return d;
        case SectorCase::i: {
            // the corner at c dualizes to a segment from c to A c on the tangent line
            const Point2 cp = spec.arc_ellipse.form * q.c;
            d.case_tag = SectorCase::iii;
            d.segment_length = norm(cp - q.c);
            break;
        }
        case SectorCase::iii:
            // the segments dualize to corners at a and c
            d.case_tag = SectorCase::i;
            d.segment_length = 0.0;
            break;
    }
    d.target_area = spec_area(d);
    return d;
}

std::string_view dual_conic_type(const SectorSpec& spec) {
    const Mat2 inv = spec.arc_ellipse.form.inverse();
    const double det = inv.det();
    if (det > 0.0 && inv.trace() > 0.0) return "ellipse";
    if (det < 0.0) return "hyperbola";
    return "degenerate";
}

Polygon competitor_body(double alpha, double target_area, std::uint64_t seed, int arc_points) {
    const Deltoid q = make_deltoid(alpha);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    if (!(target_area > ca * sa && target_area < sa / ca))
        throw Error(ErrorKind::AreaOutOfRange, "V(C) must lie in (cos a sin a, tan a)");
    const Point2 m{ca, 0.0};
    Rng rng(seed);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        // uniform points in the triangle [a, b, c]
        const int count = 1 + static_cast<int>(uniform(rng, 0.0, 6.0));
        std::vector<Point2> r;
        for (int j = 0; j < count; ++j) {
            double u = uniform(rng, 0.0, 1.0), v = uniform(rng, 0.0, 1.0);
            if (u + v > 1.0) u = 1.0 - u, v = 1.0 - v;
            r.push_back(q.a + u * (q.b - q.a) + v * (q.c - q.a));
        }
        auto sector_at = [&](double lam) {
            std::vector<Point2> pts{{0.0, 0.0}, q.a, q.c};
            for (const auto& p : r) pts.push_back(m + lam * (p - m));
            return convex_hull(std::move(pts));
        };
        if (signed_area(sector_at(1.0)) <= target_area) continue;

        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
            const double mid = 0.5 * (lo + hi);
            (signed_area(sector_at(mid)) < target_area ? lo : hi) = mid;
        }
        std::vector<Point2> pts;
        for (const auto& p : sector_at(0.5 * (lo + hi))) {
            if (p == Point2{0.0, 0.0}) continue;
            pts.push_back(p);
            pts.push_back(-p);
        }
        for (int j = 0; j <= arc_points; ++j) {
            const Point2 p = unit(alpha + (kPi - 2.0 * alpha) * j / arc_points);
            pts.push_back(p);
            pts.push_back(-p);
        }
        return hull_polygon(std::move(pts));
    }
    throw Error(ErrorKind::BisectionFailure, "no random competitor reached the target area");
}

double theoremB_f(double alpha) {
    if (!(alpha > 0.0 && alpha <= 0.25 * kPi)) throw Error(ErrorKind::DomainError, "alpha must lie in (0, pi/4]");
    const double s = std::sin(2.0 * alpha);
    return alpha * (s + 1.0 / s) + std::cos(2.0 * alpha);
}

bool theoremB_g_prime_positive(double beta) {
    if (!(beta > 0.0 && beta < 0.5 * kPi)) throw Error(ErrorKind::DomainError, "beta must lie in (0, pi/2)");
    return beta < std::tan(beta);
}

TheoremBReport theoremB_check(const Polygon& k, ExtremalEllipse which, int n) {
    TheoremBReport rep;
    rep.tolerance = 1e-6 + (n > 0 ? kPi * kPi * kPi / (static_cast<double>(n) * n) : 0.0);
    if (!is_origin_symmetric(k)) {
        rep.symmetric = false;
        rep.vol_K = area(k);
        rep.vol_Kstar = area(polar(k));
        rep.sum = rep.vol_K + rep.vol_Kstar;
        rep.violation = rep.sum > 2.0 * kPi + rep.tolerance;
        return rep;
    }

    const Ellipse e = which == ExtremalEllipse::john ? john(k) : loewner(k);
    const EllipseRole role = which == ExtremalEllipse::john ? EllipseRole::inscribed : EllipseRole::circumscribed;
    ContactReport contacts;
    try {
        contacts = behrend_contacts(k, e, role);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NoContacts) throw;
    }
    if (contacts.pattern == ContactPattern::none)
        throw Error(ErrorKind::BehrendPatternMissing, "no Behrend square or hexagon of contact points");
    rep.pattern = contacts.pattern;

    const Polygon kn = apply_linear(k, e.normalizer());
    const Polygon kp = polar(kn);
    rep.vol_K = area(kn);
    rep.vol_Kstar = area(kp);
    rep.sum = rep.vol_K + rep.vol_Kstar;

    std::vector<std::pair<double, Point2>> dirs;
    for (const auto& p : contacts.contact_points) dirs.emplace_back(std::atan2(p.y, p.x), p / norm(p));
    std::sort(dirs.begin(), dirs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        const auto& [t0, p] = dirs[j];
        const auto& [t1, q] = dirs[(j + 1) % dirs.size()];
        double gap = t1 - t0;
        if (j + 1 == dirs.size()) gap += 2.0 * kPi;
        if (gap <= 1e-12) continue;  // coincident contacts
        SectorValue sv;
        sv.angle = gap;
        sv.value = cone_area(kn.vertices(), p, q) + cone_area(kp.vertices(), p, q);
        sv.violation = sv.value > gap + rep.tolerance;
        rep.sector_sum += sv.value;
        rep.violation = rep.violation || sv.violation;
        rep.sectors.push_back(sv);
    }
    rep.violation = rep.violation || rep.sum > 2.0 * kPi + rep.tolerance;
    return rep;
}

}  // namespace mahler
