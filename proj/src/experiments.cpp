#include "mahler/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mahler/ellipse.hpp"
#include "mahler/error.hpp"
#include "mahler/kernels.hpp"
#include "mahler/random.hpp"
#include "mahler/santalo.hpp"

namespace mahler {

namespace {

constexpr double kPi = std::numbers::pi;

void check_member(double eps, int n) {
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::DomainError, "eps must lie in (0, 1)");
    if (n < 64) throw Error(ErrorKind::DomainError, "need n >= 64");
}

// Unit-circle vertices at angles 2 pi j / n kept by the predicate, plus extra points.
Polygon disk_hull(int n, auto&& keep, std::vector<Point2> extra) {
    for (int j = 0; j < n; ++j) {
        const Point2 p = unit(2.0 * kPi * j / n);
        if (keep(p)) extra.push_back(p);
    }
    return hull_polygon(std::move(extra));
}

}  // namespace

Polygon truncated_disk(double eps, int n) {
    check_member(eps, n);
    const double x = 1.0 - eps, y = std::sqrt(2.0 * eps - eps * eps);
    return disk_hull(n, [&](const Point2& p) { return std::abs(p.x) < x; }, {{x, y}, {-x, y}, {-x, -y}, {x, -y}});
}

Polygon square_intersection(double eps, int n) {
    check_member(eps, n);
    const double x = 1.0 - eps, y = std::sqrt(2.0 * eps - eps * eps);
    if (!(y < x)) throw Error(ErrorKind::DomainError, "square must cut four separate caps");
    std::vector<Point2> corners;
    for (const Point2 c : {Point2{x, y}, Point2{y, x}}) {
        for (const Point2 s : {Point2{1, 1}, Point2{-1, 1}, Point2{-1, -1}, Point2{1, -1}}) corners.push_back({c.x * s.x, c.y * s.y});
    }
    return disk_hull(n, [&](const Point2& p) { return std::abs(p.x) < x && std::abs(p.y) < x; }, std::move(corners));
}

Polygon random_symmetric_ngon(double eps, int n, std::uint64_t seed) {
    if (!(eps >= 0.0 && eps < 0.5)) throw Error(ErrorKind::DomainError, "eps must lie in [0, 0.5)");
    if (n < 4 || n % 2 != 0) throw Error(ErrorKind::DomainError, "need an even n >= 4");
    Rng rng(seed);
    std::vector<Point2> v;
    for (int j = 0; j < n / 2; ++j) v.push_back((1.0 + eps * uniform(rng, -1.0, 1.0)) * unit(2.0 * kPi * j / n));
    for (int j = 0; j < n / 2; ++j) v.push_back(-v[static_cast<std::size_t>(j)]);
    return hull_polygon(std::move(v));
}

Polygon curved_truncation(double eps, int n, double r) {
    check_member(eps, n);
    if (!(r >= 1.0)) throw Error(ErrorKind::DomainError, "cap radius must be at least 1");
    const double x = 1.0 - eps, y = std::sqrt(2.0 * eps - eps * eps);
    std::vector<Point2> extra{{x, y}, {-x, y}, {-x, -y}, {x, -y}};
    if (std::isfinite(r)) {
        const double cx = x - std::sqrt(r * r - y * y);
        const double half = std::asin(y / r);
        const int m = std::max(8, static_cast<int>(n * half / kPi));
        for (int j = 1; j < m; ++j) {
            const double phi = -half + 2.0 * half * j / m;
            const Point2 p{cx + r * std::cos(phi), r * std::sin(phi)};
            extra.push_back(p);
            extra.push_back(-p);
        }
    }
    return disk_hull(n, [&](const Point2& p) { return std::abs(p.x) < x; }, std::move(extra));
}

Family parse_family(std::string_view name) {
    if (name == "truncated_disk") return Family::truncated_disk;
    if (name == "square_intersection") return Family::square_intersection;
    if (name == "random_symmetric_ngon") return Family::random_symmetric_ngon;
    throw Error(ErrorKind::InvalidInput, "unknown family " + std::string(name));
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::truncated_disk: return "truncated_disk";
        case Family::square_intersection: return "square_intersection";
        case Family::random_symmetric_ngon: return "random_symmetric_ngon";
    }
    return "?";
}

Polygon make_family_member(Family f, double eps, int n, std::uint64_t seed) {
    switch (f) {
        case Family::truncated_disk: return truncated_disk(eps, n);
        case Family::square_intersection: return square_intersection(eps, n);
        case Family::random_symmetric_ngon: return random_symmetric_ngon(eps, n, seed);
    }
    throw Error(ErrorKind::InvalidInput, "unknown family");
}

StabilityRecord stability_record(const Polygon& k, double eps, int n) {
    StabilityRecord r;
    r.eps = eps;
    r.n_discretization = n;
    r.vol_K = area(k);
    r.vol_Kstar = polar_volume_at(k, santalo_point(k).point);
    r.product = r.vol_K * r.vol_Kstar;
    r.bm_upper = bm_distance_upper(k);
    return r;
}

FitReport fit_exponent(const std::vector<StabilityRecord>& records, double reference) {
    std::vector<double> eps;
    for (const auto& r : records) eps.push_back(r.eps);
    std::sort(eps.begin(), eps.end());
    if (records.size() < 4 || std::adjacent_find(eps.begin(), eps.end()) != eps.end())
        throw Error(ErrorKind::InsufficientData, "need at least 4 records with distinct eps");

    std::vector<double> xs, ys;
    for (const auto& r : records) {
        const double deficit = reference - r.product;
        if (!(deficit > 0.0) || !(r.eps > 0.0)) throw Error(ErrorKind::NonPositiveDeficit, "deficit must be positive");
        xs.push_back(std::log(r.eps));
        ys.push_back(std::log(deficit));
    }
    const double m = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i] / m, my += ys[i] / m;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    FitReport f;
    f.exponent = sxy / sxx;
    f.coefficient = std::exp(my - f.exponent * mx);
    f.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
    f.eps_range = {eps.front(), eps.back()};
    return f;
}

ScanResult theorem_d_scan(Family family, const std::vector<double>& eps_grid, int n, std::uint64_t seed) {
    std::vector<double> grid = eps_grid;
    std::sort(grid.begin(), grid.end());
    ScanResult res;
    res.records = kernels::map_parallel(grid.size(), [&](std::size_t i) {
        return stability_record(make_family_member(family, grid[i], n, seed), grid[i], n);
    });

    const double pi2 = kPi * kPi;
    res.ceiling_holds = std::all_of(res.records.begin(), res.records.end(), [&](const auto& r) { return r.product <= pi2 + 1e-3; });
    std::vector<StabilityRecord> by_bm = res.records;
    std::sort(by_bm.begin(), by_bm.end(), [](const auto& a, const auto& b) { return a.bm_upper < b.bm_upper; });
    res.ordering_holds = true;
    for (std::size_t i = 0; i < by_bm.size(); ++i) {
        const double deficit = pi2 - by_bm[i].product;
        if (!(deficit > 0.0)) res.ordering_holds = false;
        if (i > 0 && !(deficit > pi2 - by_bm[i - 1].product)) res.ordering_holds = false;
        const double d = by_bm[i].bm_upper - 1.0;
        if (d > 0.0) res.max_cube_ratio = std::max(res.max_cube_ratio, deficit / (d * d * d));
    }
    return res;
}

RemarkReport remark_constants_check() {
    RemarkReport rep;
    // cross-polytope {|x|_1 <= sqrt(d)} circumscribed about B^d
    auto cross_polytope = [](int d) { return std::pow(2.0, d) / std::tgamma(d + 1.0) * std::pow(d, 0.5 * d); };
    auto add = [&](std::string label, double value, double bound, double printed) {
        RemarkConstant c{std::move(label), value, bound, printed};
        c.exceeds = value > bound;
        c.matches_printed = std::floor(value * 1e4) / 1e4 == printed;
        rep.constants.push_back(c);
    };
    add("regular triangle in S^1: V(K) + V(K*) vs 2 V(B^2)", 15.0 * std::sqrt(3.0) / 4.0, 2.0 * kPi, 6.4951);
    // cube inscribed in S^2 plus its polar cross-polytope
    const double cube3 = std::pow(2.0 / std::sqrt(3.0), 3);
    add("cube and cross-polytope, d = 3: V(C^3) + V(D^3) vs 2 V(B^3)", cube3 + cross_polytope(3), 2.0 * unit_ball_volume(3), 8.4678);
    add("cross-polytope, d = 4: V(D^4) vs 2 V(B^4)", cross_polytope(4), 2.0 * unit_ball_volume(4), 10.6666);
    add("cross-polytope, d = 5: V(D^5) vs 2 V(B^5)", cross_polytope(5), 2.0 * unit_ball_volume(5), 14.9071);

    const Polygon tri = regular_polygon(3);
    rep.triangle_from_polygons = area(tri) + area(polar(tri));
    rep.all_hold = std::abs(rep.triangle_from_polygons - rep.constants[0].value) <= 1e-10 &&
                   std::abs(rep.constants[1].value - 44.0 * std::sqrt(3.0) / 9.0) <= 1e-12;
    for (const auto& c : rep.constants) rep.all_hold = rep.all_hold && c.exceeds && c.matches_printed;
    return rep;
}

}  // namespace mahler
