#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mahler/ellipse.hpp"
#include "mahler/error.hpp"
#include "mahler/random.hpp"

using namespace mahler;
using std::numbers::pi;

namespace {

double mat_dist(const Mat2& a, const Mat2& b) { return (a - b).norm(); }

Polygon diamond() { return polygon_new({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

// Brute-force oracle: grid over origin-centred forms [[a,b],[b,c]] containing the
// vertices, keeping the one of largest determinant (smallest area).
double brute_min_area(const Polygon& k) {
    double best_det = 0.0;
    const int g = 300;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            for (int l = -g / 2; l <= g / 2; ++l) {
                const Mat2 m{1.5 * i / g, 1.5 * l / g, 1.5 * l / g, 1.5 * j / g};
                if (m.det() <= best_det) continue;
                bool inside = true;
                for (const auto& v : k.vertices()) inside = inside && Ellipse{m, {}}.contains(v, 1e-12);
                if (inside) best_det = m.det();
            }
    return pi / std::sqrt(best_det);
}

}  // namespace

TEST_CASE("Löwner ellipse of standard bodies") {
    const Ellipse e = loewner(diamond());
    CHECK(mat_dist(e.form, Mat2::identity()) < 1e-9);
    const Ellipse h = loewner(regular_polygon(6));
    CHECK(mat_dist(h.form, Mat2::identity()) < 1e-9);

    const Polygon rhomb = polygon_new({{2, 0}, {0, 1}, {-2, 0}, {0, -1}});
    const Ellipse r = loewner(rhomb);
    CHECK(mat_dist(r.form, Mat2::diag(0.25, 1.0)) < 1e-9);
    CHECK(r.area() == doctest::Approx(brute_min_area(rhomb)).epsilon(1e-9));
    const Polygon skew = polygon_new({{1.2, 0.3}, {-0.2, 0.9}, {-1.2, -0.3}, {0.2, -0.9}});
    CHECK(loewner(skew).area() <= brute_min_area(skew) * (1.0 + 1e-9));
    CHECK(loewner(skew).area() >= brute_min_area(skew) * (1.0 - 2e-2));

    const Polygon tri = polygon_new({{1, 0}, {0, 1}, {-1, -1}});
    try {
        loewner(tri);
        FAIL("expected NotSymmetric");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotSymmetric);
    }
}

TEST_CASE("Löwner optimality certificate and containment") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Polygon k = random_symmetric(rng, 2 + trial % 6);
        const auto sol = minimum_enclosing_ellipse(k.vertices());
        CHECK(sol.gap <= 1e-9);
        const Ellipse& e = sol.ellipse;
        for (const auto& v : k.vertices()) CHECK(e.contains(v, 1e-12));
        // shrinking the area by (1 - 1e-6) must expel a vertex
        const Ellipse shrunk{(1.0 / (1.0 - 1e-6)) * e.form, {}};
        bool expelled = false;
        for (const auto& v : k.vertices()) expelled = expelled || !shrunk.contains(v);
        CHECK(expelled);
    }
}

TEST_CASE("John ellipse") {
    const Polygon box = polygon_new({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    CHECK(mat_dist(john(box).form, Mat2::identity()) < 1e-9);

    const Polygon disk = regular_polygon(4096);
    const Ellipse jd = john(disk);
    CHECK(std::abs(1.0 / std::sqrt(jd.form.a11) - 1.0) < 1e-5);
    CHECK(std::abs(1.0 / std::sqrt(jd.form.a22) - 1.0) < 1e-5);

    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const Polygon k = random_symmetric(rng, 3 + trial % 5);
        const Mat2 t = random_linear(rng);
        const Ellipse lhs = john(apply_linear(k, t));
        const Ellipse rhs = transform(john(k), t);
        CHECK(mat_dist(lhs.form, rhs.form) < 1e-8 * lhs.form.norm());
    }
}

TEST_CASE("duality, sandwich and the planar John bound") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Polygon k = random_symmetric(rng, 2 + trial % 6);
        const Ellipse ej = john(k), el = loewner(k);
        CHECK(mat_dist(ej.polar().form, loewner(polar(k)).form) < 1e-8 * ej.form.inverse().norm());
        for (int i = 0; i < 1000; ++i) {
            const Point2 u = unit(2.0 * pi * i / 1000);
            const double hk = support(k, u);
            CHECK(ej.support(u) <= hk + 1e-9);
            CHECK(hk <= el.support(u) + 1e-9);
            // planar symmetric John bounds: K inside sqrt(2) J, and L / sqrt(2) inside K
            CHECK(hk <= std::sqrt(2.0) * ej.support(u) + 1e-9);
            CHECK(el.support(u) / std::sqrt(2.0) <= hk + 1e-9);
        }
        CHECK(el.area() <= 2.0 * ej.area() * (1.0 + 1e-9));
    }
}

TEST_CASE("Behrend contact patterns") {
    const Polygon box = polygon_new({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    const auto sq = behrend_contacts(box, john(box), EllipseRole::inscribed);
    CHECK(sq.pattern == ContactPattern::square);
    CHECK(sq.contact_points.size() == 4);
    for (const auto& p : sq.contact_points) CHECK(std::abs(std::abs(p.x) + std::abs(p.y) - 1.0) < 1e-9);

    const Polygon hex = regular_polygon(6);
    const auto hx = behrend_contacts(hex, loewner(hex), EllipseRole::circumscribed);
    CHECK(hx.pattern == ContactPattern::hexagon);
    CHECK(hx.contact_points.size() == 6);
    CHECK(hx.max_gap_angle == doctest::Approx(pi / 3.0).epsilon(1e-9));

    const Polygon rhomb = polygon_new({{2, 0}, {0, 1}, {-2, 0}, {0, -1}});
    const auto rh = behrend_contacts(rhomb, loewner(rhomb), EllipseRole::circumscribed);
    CHECK(rh.pattern == ContactPattern::square);
    CHECK(rh.contact_points.size() == 4);

    try {
        behrend_contacts(box, Ellipse{Mat2::diag(4.0, 4.0), {}}, EllipseRole::circumscribed);
        FAIL("expected NoContacts");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoContacts);
    }
}

TEST_CASE("random symmetric polygons always certify a Behrend pattern") {
    Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const Polygon k = random_symmetric(rng, 2 + trial % 6);
        CHECK(behrend_contacts(k, loewner(k), EllipseRole::circumscribed).pattern != ContactPattern::none);
        CHECK(behrend_contacts(k, john(k), EllipseRole::inscribed).pattern != ContactPattern::none);
    }
}

TEST_CASE("Banach-Mazur upper bound") {
    const Polygon box = polygon_new({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    CHECK(bm_distance_upper(box) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    const Ellipse e{Mat2{0.5, 0.2, 0.2, 2.0}, {}};
    const double n = 512;
    const double lam = bm_distance_upper(e.to_polygon(512));
    CHECK(lam >= 1.0);
    // inscribed 512-gon: inradius/circumradius = cos(pi/n)
    CHECK(lam - 1.0 <= 1.0 / std::cos(pi / n) - 1.0 + 1e-9);
}
