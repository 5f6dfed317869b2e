#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mahler/error.hpp"
#include "mahler/geom.hpp"
#include "mahler/random.hpp"

using namespace mahler;
using std::numbers::pi;

namespace {

Polygon diamond() { return polygon_new({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }
Polygon box() { return polygon_new({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidInput;
}

// Oracle: (1/2) * integral of h_K(u)^{-2} over the circle, midpoint rule.
double radial_polar_area(const Polygon& k, int samples) {
    double s = 0.0;
    const double du = 2.0 * pi / samples;
    for (int i = 0; i < samples; ++i) {
        const double h = support(k, unit((i + 0.5) * du));
        s += 1.0 / (h * h);
    }
    return 0.5 * s * du;
}

}  // namespace

TEST_CASE("polygon_new validates and orients") {
    const Polygon d = diamond();
    CHECK(d.size() == 4);
    CHECK(d.origin_interior());

    CHECK(kind_of([] { polygon_new({{0, 0}, {1, 0}, {2, 0}}); }) == ErrorKind::NonConvex);
    CHECK(kind_of([] { polygon_new({{0, 0}, {1, 0}}); }) == ErrorKind::TooFewVertices);
    CHECK(kind_of([] { polygon_new({{0, 0}, {2, 0}, {1, 0.1}, {2, 2}, {0, 2}}); }) == ErrorKind::NonConvex);
    CHECK(kind_of([] { polygon_new({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }) == ErrorKind::NonConvex);
    // pentagram: every turn is to the left but it winds twice
    std::vector<Point2> star;
    for (int i = 0; i < 5; ++i) star.push_back(unit(2.0 * pi * (2 * i) / 5));
    CHECK(kind_of([&] { polygon_new(star); }) == ErrorKind::NonConvex);

    const Polygon cw = polygon_new({{1, 0}, {0, -1}, {-1, 0}, {0, 1}});
    CHECK(area(cw) == doctest::Approx(2.0));
    CHECK(cw[0] == Point2{1, 0});
    CHECK(cw[1] == Point2{0, 1});

    const Polygon off = polygon_new({{2, 2}, {3, 2}, {2, 3}});
    CHECK_FALSE(off.origin_interior());
}

TEST_CASE("area") {
    CHECK(area(diamond()) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(area(regular_polygon(6)) == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(std::abs(area(regular_polygon(4096)) - pi) < 1e-5);
}

TEST_CASE("polar") {
    const Polygon p = polar(diamond());
    CHECK(area(p) == doctest::Approx(4.0));
    for (const auto& v : p.vertices()) {
        CHECK(std::abs(v.x) == doctest::Approx(1.0));
        CHECK(std::abs(v.y) == doctest::Approx(1.0));
    }
    CHECK(area(polar(regular_polygon(6))) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));

    const Polygon off = polygon_new({{2, 2}, {3, 2}, {2, 3}});
    CHECK(kind_of([&] { polar(off); }) == ErrorKind::OriginNotInterior);
    // origin on an edge
    const Polygon touching = polygon_new({{-1, 0}, {1, 0}, {0, 1}});
    CHECK(kind_of([&] { polar(touching); }) == ErrorKind::OriginNotInterior);
}

TEST_CASE("polar is an involution, vertex by vertex") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Polygon k = random_cyclic(rng, 3 + trial % 10, 0.3);
        if (!k.origin_interior()) continue;
        const Polygon kk = polar(polar(k));
        REQUIRE(kk.size() == k.size());
        // vertex i of K* is the pole of the edge ending at vertex i, so the round trip shifts indices by one
        for (std::size_t i = 0; i < k.size(); ++i)
            CHECK(norm(kk.at_cyclic(static_cast<long>(i) + 1) - k[i]) < 1e-12 * k.scale());
    }
}

TEST_CASE("volume product anchors and affine invariance") {
    CHECK(volume_product(regular_polygon(6)) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(volume_product(regular_polygon(4)) == doctest::Approx(8.0).epsilon(1e-14));
    Rng rng(3);
    const Polygon hex = regular_polygon(6);
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = random_linear(rng);
        CHECK(std::abs(volume_product(apply_linear(hex, m)) - 9.0) < 1e-10 * 9.0);
    }
    // det-preserving shear
    CHECK(volume_product(apply_linear(hex, Mat2{1.0, 0.7, 0.0, 1.0})) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("support function") {
    CHECK(support(box(), {1, 0}) == 1.0);
    CHECK(support(box(), {1, 1}) == 2.0);
    CHECK(kind_of([] { support(box(), {0, 0}); }) == ErrorKind::ZeroDirection);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Polygon k = random_hull(rng, 12);
        const Point2 z{uniform(rng, -2, 2), uniform(rng, -2, 2)};
        const Point2 u{uniform(rng, -1, 1), uniform(rng, -1, 1)};
        CHECK(support(translate(k, -z), u) == doctest::Approx(support(k, u) - dot(u, z)).epsilon(1e-12));
    }
}

TEST_CASE("apply_linear") {
    const Polygon hex = regular_polygon(6);
    const Polygon same = apply_linear(hex, Mat2::identity());
    for (std::size_t i = 0; i < hex.size(); ++i) CHECK(same[i] == hex[i]);
    CHECK(kind_of([&] { apply_linear(hex, Mat2{1, 2, 2, 4}); }) == ErrorKind::SingularMatrix);

    // (TK)* = T^{-T} K*
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon k = random_cyclic(rng, 5 + trial % 6, 0.2);
        if (!k.origin_interior()) continue;
        const Mat2 m = random_linear(rng);
        const Polygon lhs = polar(apply_linear(k, m));
        const Polygon rhs = apply_linear(polar(k), m.inverse().transpose());
        REQUIRE(lhs.size() == rhs.size());
        CHECK(hausdorff(lhs, rhs) < 1e-10 * lhs.scale());
        CHECK(signed_area(lhs.vertices()) > 0.0);
    }
}

TEST_CASE("centroid and first moment") {
    CHECK(norm(centroid(regular_polygon(6))) < 1e-15);
    CHECK(norm(centroid(box())) < 1e-15);
    const Polygon tri = polygon_new({{0, 0}, {1, 0}, {0, 1}});
    CHECK(centroid(tri).x == doctest::Approx(1.0 / 3.0));
    CHECK(centroid(tri).y == doctest::Approx(1.0 / 3.0));
    CHECK(first_moment(tri).x == doctest::Approx(1.0 / 6.0));
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const Polygon k = random_hull(rng, 10);
        const Point2 t{uniform(rng, -5, 5), uniform(rng, -5, 5)};
        const Point2 c1 = centroid(translate(k, t));
        const Point2 c0 = centroid(k) + t;
        CHECK(norm(c1 - c0) < 1e-12);
        const Point2 m = first_moment(translate(k, t));
        CHECK(norm(m - area(k) * c0) < 1e-12);
    }
}

TEST_CASE("hausdorff") {
    const Polygon sq = polygon_new({{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}});
    CHECK(hausdorff(sq, sq) == 0.0);
    CHECK(hausdorff(sq, scale(sq, 1.1)) == doctest::Approx(0.1 * std::sqrt(0.5)).epsilon(1e-12));

    // Oracle: sampled support-function difference bounds it from below, and for
    // convex bodies the two agree in the limit.
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const Polygon k = random_hull(rng, 8), l = random_hull(rng, 8);
        double sampled = 0.0;
        for (int j = 0; j < 20000; ++j) {
            const Point2 u = unit(2.0 * pi * j / 20000);
            sampled = std::max(sampled, std::abs(support(k, u) - support(l, u)));
        }
        const double h = hausdorff(k, l);
        CHECK(h >= sampled - 1e-12);
        CHECK(h <= sampled + 1e-3);
        // a linear map with operator norm <= s changes the distance by at most s times
        const Mat2 m = random_linear(rng);
        const double op = std::sqrt(0.5 * (m.norm() * m.norm() +
                                           std::sqrt(std::pow(m.norm(), 4) - 4.0 * m.det() * m.det())));
        CHECK(hausdorff(apply_linear(k, m), apply_linear(l, m)) <= op * h + 1e-12);
    }
}

TEST_CASE("polar reverses inclusion") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const Polygon l = random_symmetric(rng, 6);
        // K inside L: shrink L and cut with a random halfplane through the far side
        const Polygon k = scale(l, uniform(rng, 0.3, 0.95));
        REQUIRE(contains(l, k, 1e-12));
        CHECK(contains(polar(k), polar(l), 1e-12));
    }
}

TEST_CASE("polar area: shoelace vs radial integral") {
    Rng rng(19);
    for (int i = 0; i < 20; ++i) {
        const Polygon k = random_cyclic(rng, 3 + i % 9, 0.2);
        if (!k.origin_interior()) continue;
        const double direct = area(polar(k));
        CHECK(std::abs(radial_polar_area(k, 100000) - direct) < 1e-4 * direct);
    }
}

TEST_CASE("volume product of random symmetric n-gons stays below n^2 sin^2(pi/n)") {
    Rng rng(23);
    for (int trial = 0; trial < 10000; ++trial) {
        const Polygon k = random_symmetric(rng, 2 + trial % 5);
        const double n = static_cast<double>(k.size());
        const double bound = n * n * std::pow(std::sin(pi / n), 2);
        REQUIRE(volume_product(k) <= bound + 1e-9);
    }
}

TEST_CASE("clipping helpers") {
    const Polygon b = box();
    CHECK(signed_area(clip_halfplane(b.vertices(), {1, 0}, 0.0)) == doctest::Approx(2.0));
    CHECK(signed_area(clip_cone(b.vertices(), {1, 0}, {0, 1})) == doctest::Approx(1.0));
    CHECK(signed_area(clip_cone(b.vertices(), {1, 0}, {1, 1})) == doctest::Approx(0.5));
    const Polygon k = intersect(b, scale(diamond(), 1.5));
    CHECK(area(k) == doctest::Approx(4.0 - 4.0 * 0.125));
    CHECK(is_origin_symmetric(k));
}
