#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mahler/error.hpp"
#include "mahler/random.hpp"
#include "mahler/santalo.hpp"

using namespace mahler;
using std::numbers::pi;

namespace {

// Independent route to V((K - z)^*): sum over vertices of the polar triangles
// spanned by consecutive poles, with poles from support lines written out by hand.
double polar_area_oracle(const Polygon& k, const Point2& z) {
    const std::size_t n = k.size();
    std::vector<Point2> poles(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = k[i] - z, b = k[(i + 1) % n] - z;
        const Point2 nrm{b.y - a.y, a.x - b.x};
        poles[i] = nrm / dot(nrm, a);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += cross(poles[i], poles[(i + 1) % n]);
    return 0.5 * s;
}

// Grid search over a 200 x 200 lattice followed by compass refinement.
Point2 grid_minimizer(const Polygon& k) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& v : k.vertices()) {
        xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y), ymax = std::max(ymax, v.y);
    }
    const int g = 200;
    Point2 best;
    double fbest = 1e300;
    for (int i = 1; i < g; ++i)
        for (int j = 1; j < g; ++j) {
            const Point2 z{xmin + (xmax - xmin) * i / g, ymin + (ymax - ymin) * j / g};
            if (boundary_distance(k, z) <= 1e-9) continue;
            const double f = polar_area_oracle(k, z);
            if (f < fbest) fbest = f, best = z;
        }
    double step = (xmax - xmin) / g;
    while (step > 1e-11) {
        bool moved = false;
        for (const Point2 d : {Point2{1, 0}, Point2{-1, 0}, Point2{0, 1}, Point2{0, -1}}) {
            const Point2 z = best + step * d;
            if (boundary_distance(k, z) <= 1e-9) continue;
            const double f = polar_area_oracle(k, z);
            if (f < fbest) fbest = f, best = z, moved = true;
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

}  // namespace

TEST_CASE("polar volume matches the hand-rolled oracle") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon k = random_hull(rng, 5 + trial % 20);
        const Point2 z = random_interior_point(rng, k);
        CHECK(polar_volume_at(k, z) == doctest::Approx(polar_area_oracle(k, z)).epsilon(1e-10));
    }
}

TEST_CASE("gradient agrees with finite differences") {
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const Polygon k = random_hull(rng, 6 + trial % 15);
        const Point2 z = random_interior_point(rng, k);
        const double h = 1e-6 * boundary_distance(k, z);
        const Point2 fd{(polar_volume_at(k, z + Point2{h, 0}) - polar_volume_at(k, z - Point2{h, 0})) / (2 * h),
                        (polar_volume_at(k, z + Point2{0, h}) - polar_volume_at(k, z - Point2{0, h})) / (2 * h)};
        const Point2 g = polar_volume_grad(k, z);
        CHECK(norm(g - fd) <= 1e-5 * norm(g));
    }
}

TEST_CASE("Santaló point of symmetric bodies and triangles") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Polygon k = random_symmetric(rng, 2 + trial % 7);
        CHECK(norm(santalo_point(k).point) <= 1e-9);
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Point2> pts{{uniform(rng, -1, 1), uniform(rng, -1, 1)},
                                {uniform(rng, -1, 1), uniform(rng, -1, 1)},
                                {uniform(rng, -1, 1), uniform(rng, -1, 1)}};
        if (std::abs(signed_area(pts)) < 0.05) continue;
        const Polygon t = polygon_new(pts);
        CHECK(norm(santalo_point(t).point - centroid(t)) <= 1e-7);
    }
}

TEST_CASE("Santaló point against the grid oracle") {
    const Polygon tri = polygon_new({{0, 0}, {3, 0}, {0.5, 2}});
    CHECK(norm(santalo_point(tri).point - grid_minimizer(tri)) <= 1e-6);
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Polygon k = random_cyclic(rng, 5, 0.3);
        CHECK(norm(santalo_point(k).point - grid_minimizer(k)) <= 1e-6);
    }
}

TEST_CASE("Santaló point certificate, covariance and minimality") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon k = random_hull(rng, 4 + trial % 30);
        const auto rep = santalo_point(k);
        CHECK(rep.converged);
        CHECK(rep.polar_centroid_norm <= 1e-8 * std::max(1.0, k.scale()));

        const Mat2 m = random_linear(rng);
        const Point2 b{uniform(rng, -2, 2), uniform(rng, -2, 2)};
        const Point2 lhs = santalo_point(translate(apply_linear(k, m), b)).point;
        const Point2 rhs = m * rep.point + b;
        CHECK(norm(lhs - rhs) <= 1e-7 * std::max(1.0, norm(rhs)));

        const double f = polar_volume_at(k, rep.point);
        for (int i = 0; i < 8; ++i) {
            const Point2 z = rep.point + 1e-3 * boundary_distance(k, rep.point) * unit(2 * pi * i / 8);
            CHECK(polar_volume_at(k, z) >= f);
        }
    }
}

TEST_CASE("strict convexity and blow-up at the boundary") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Polygon k = random_hull(rng, 8);
        const Point2 a = random_interior_point(rng, k), b = random_interior_point(rng, k);
        const double fa = polar_volume_at(k, a), fb = polar_volume_at(k, b);
        CHECK(polar_volume_at(k, 0.5 * (a + b)) < 0.5 * (fa + fb));
    }
    const Polygon sq = polygon_new({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    double prev = 0.0;
    for (double d : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double f = polar_volume_at(sq, {1 - d, 0});
        CHECK(f > prev);
        prev = f;
    }
    CHECK(prev > 1e3);
    try {
        polar_volume_at(sq, {1, 0});
        FAIL("expected PointNotInterior");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PointNotInterior);
    }
}

TEST_CASE("inclusion constant at the Santaló point") {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(check_inclusion_0(random_symmetric(rng, 2 + trial % 6)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(check_inclusion_0(polygon_new({{0, 0}, {1, 0}, {0.2, 0.7}})) == doctest::Approx(2.0).epsilon(1e-8));
    for (int trial = 0; trial < 500; ++trial) CHECK(check_inclusion_0(random_hull(rng, 4 + trial % 25)) <= 2.0 + 1e-9);
}

TEST_CASE("stability constants") {
    CHECK(unit_ball_volume(2) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK(unit_ball_volume(4) == doctest::Approx(pi * pi / 2.0).epsilon(1e-15));
    const auto c = stability_constants(2, 2.0, pi);
    CHECK(c.kappa_d_minus_1 == 2.0);
    CHECK(c.eps1_K0 == doctest::Approx(1.0 / (128.0 * pi)).epsilon(1e-14));
    CHECK(c.theorem_e_coefficient == doctest::Approx(std::ldexp(81.0 * pi, 38)).epsilon(1e-12));
    // c(K0) = diam^9 vol^-4 * 2 * pi^4
    CHECK(c.c_K0 == doctest::Approx(std::pow(2.0, 9) / std::pow(pi, 4) * 2.0 * std::pow(pi, 4)).epsilon(1e-12));
    CHECK(stability_constants(2, 1e-3, 1.0).eps1_K0 == 0.5);
    try {
        stability_constants(1, 1.0, 1.0);
        FAIL("expected InvalidDimension");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidDimension);
    }
}

TEST_CASE("normalization for the stability experiment") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Polygon k = theorem_e_normalize(random_hull(rng, 12));
        CHECK(norm(santalo_point(k).point) <= 1e-8);
        for (int i = 0; i < 64; ++i) {
            const Point2 u = unit(2 * pi * i / 64);
            CHECK(support(k, u) >= 1.0 - 1e-7);
            CHECK(support(k, u) <= 2.0 * std::sqrt(2.0) + 1e-7);
        }
    }
}

TEST_CASE("stability experiment") {
    const Polygon hex = regular_polygon(6);
    const auto zero = theorem_e_experiment(hex, 0.0, 4, 1);
    for (const auto& r : zero) CHECK(std::abs(r.lhs) <= 1e-12);

    const Polygon k0 = polygon_new({{1, 0}, {0.6, 0.9}, {-0.8, 0.7}, {-1, -0.2}, {0.1, -1}});
    const double eps1 = stability_constants(2, diameter(theorem_e_normalize(k0)), area(theorem_e_normalize(k0))).eps1_K0;
    const auto rows = theorem_e_experiment(k0, 0.5 * eps1, 64, 99);
    CHECK(rows.size() == 64);
    for (const auto& r : rows) {
        CHECK_FALSE(r.violation);
        CHECK(r.lhs >= -1e-10);
    }
    try {
        theorem_e_experiment(k0, 2.0 * eps1, 1, 1);
        FAIL("expected SandwichUnsatisfiable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SandwichUnsatisfiable);
    }
}
