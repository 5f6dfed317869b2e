#include "mahler/ellipse.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>

#include "mahler/error.hpp"

namespace mahler {

namespace {

constexpr double kPi = std::numbers::pi;

double quad(const Mat2& a, const Point2& x) {
    return a.a11 * x.x * x.x + (a.a12 + a.a21) * x.x * x.y + a.a22 * x.y * x.y;
}

Mat2 outer_sum(std::span<const Point2> pts, std::span<const double> w) {
    Mat2 x{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (w[i] == 0.0) continue;
        x.a11 += w[i] * pts[i].x * pts[i].x;
        x.a12 += w[i] * pts[i].x * pts[i].y;
        x.a22 += w[i] * pts[i].y * pts[i].y;
    }
    x.a21 = x.a12;
    return x;
}

// Solve a symmetric 3x3 system by Cramer's rule; false when singular.
bool solve3(const std::array<std::array<double, 3>, 3>& m, const std::array<double, 3>& b,
            std::array<double, 3>& x) {
    auto det3 = [](const std::array<std::array<double, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    const double d = det3(m);
    double scale = 0.0;
    for (const auto& r : m)
        for (double v : r) scale = std::max(scale, std::abs(v));
    if (!(std::abs(d) > 1e-13 * scale * scale * scale)) return false;
    for (int c = 0; c < 3; ++c) {
        auto mc = m;
        for (int r = 0; r < 3; ++r) mc[r][c] = b[r];
        x[c] = det3(mc) / d;
    }
    return true;
}

struct Polish {
    Mat2 form;
    double gap = std::numeric_limits<double>::infinity();
};

// Lower bound on the optimal area from dual weights w: pi * d^{d/2} * sqrt(det X(w)), d = 2.
double dual_area_bound(std::span<const Point2> pts, std::span<const double> w) {
    return 2.0 * kPi * std::sqrt(std::max(0.0, outer_sum(pts, w).det()));
}

double ellipse_area(const Mat2& a) { return kPi / std::sqrt(a.det()); }

// Exact ellipse through the (near-)active points, then dual weights on them.
Polish polish(std::span<const Point2> pts, std::span<const double> g, double gmax, double rel,
              std::span<const double> u) {
    Polish out;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (g[i] >= gmax * (1.0 - rel)) active.push_back(i);
    if (active.empty()) return out;

    // Least squares for (A11, A12, A22) on x^T A x = 1 over active points.
    std::array<std::array<double, 3>, 3> n{};
    std::array<double, 3> rhs{};
    for (auto i : active) {
        const std::array<double, 3> row{pts[i].x * pts[i].x, 2.0 * pts[i].x * pts[i].y, pts[i].y * pts[i].y};
        for (int r = 0; r < 3; ++r) {
            rhs[r] += row[r];
            for (int c = 0; c < 3; ++c) n[r][c] += row[r] * row[c];
        }
    }
    Mat2 a;
    std::array<double, 3> sol{};
    if (solve3(n, rhs, sol)) {
        a = Mat2{sol[0], sol[1], sol[1], sol[2]};
    } else {
        // Two directions only: they are conjugate diameters, A^{-1} = x1 x1^T + x2 x2^T.
        const Point2 x1 = pts[active.front()];
        std::size_t j = active.front();
        double best = 0.0;
        for (auto i : active) {
            const double c = std::abs(cross(x1, pts[i]));
            if (c > best) { best = c; j = i; }
        }
        const Point2 x2 = pts[j];
        if (best <= 1e-9 * norm(x1) * norm(x2)) return out;
        const Mat2 inv{x1.x * x1.x + x2.x * x2.x, x1.x * x1.y + x2.x * x2.y, x1.x * x1.y + x2.x * x2.y,
                       x1.y * x1.y + x2.y * x2.y};
        a = inv.inverse();
    }
    if (!(a.a11 > 0.0 && a.det() > 0.0)) return out;
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, quad(a, p));
    a = (1.0 / worst) * a;

    // Dual weights on the active set: minimum-norm solution of 2 sum w_i x_i x_i^T = A^{-1}.
    const Mat2 target = 0.5 * a.inverse();
    std::array<std::array<double, 3>, 3> mm{};
    for (auto i : active) {
        const std::array<double, 3> row{pts[i].x * pts[i].x, pts[i].x * pts[i].y, pts[i].y * pts[i].y};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) mm[r][c] += row[r] * row[c];
    }
    std::vector<double> w(pts.size(), 0.0);
    std::array<double, 3> lam{};
    bool have_w = false;
    if (solve3(mm, {target.a11, target.a12, target.a22}, lam)) {
        have_w = true;
        for (auto i : active) {
            w[i] = lam[0] * pts[i].x * pts[i].x + lam[1] * pts[i].x * pts[i].y + lam[2] * pts[i].y * pts[i].y;
            if (w[i] < 0.0) have_w = false;
        }
    }
    double lb = dual_area_bound(pts, u);
    if (have_w) {
        double s = 0.0;
        for (double v : w) s += v;
        for (double& v : w) v /= s;
        lb = std::max(lb, dual_area_bound(pts, w));
    }
    out.form = a;
    out.gap = std::max(0.0, ellipse_area(a) / lb - 1.0);
    return out;
}

}  // namespace

double Ellipse::area() const { return kPi / std::sqrt(form.det()); }

double Ellipse::support(const Point2& u) const { return std::sqrt(quad(form.inverse(), u)) + dot(u, center); }

bool Ellipse::contains(const Point2& p, double tol) const { return quad(form, p - center) <= 1.0 + tol; }

Ellipse Ellipse::polar() const { return Ellipse{form.inverse(), {}}; }

Mat2 sqrt_spd(const Mat2& a) {
    const double s = std::sqrt(a.det());
    const double t = std::sqrt(a.trace() + 2.0 * s);
    return (1.0 / t) * (a + Mat2::diag(s, s));
}

Mat2 Ellipse::normalizer() const { return sqrt_spd(form); }

Polygon Ellipse::to_polygon(int n) const {
    const Mat2 inv_root = normalizer().inverse();
    std::vector<Point2> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = center + inv_root * unit(2.0 * kPi * i / n);
    return Polygon::trusted(std::move(v));
}

Ellipse transform(const Ellipse& e, const Mat2& m) {
    // y = M x: x^T A x = y^T M^-T A M^-1 y
    const Mat2 mi = m.inverse();
    Mat2 a = mi.transpose() * e.form * mi;
    a.a12 = a.a21 = 0.5 * (a.a12 + a.a21);
    return Ellipse{a, m * e.center};
}

LoewnerSolve minimum_enclosing_ellipse(std::span<const Point2> pts) {
    const std::size_t m = pts.size();
    if (m < 2) throw Error(ErrorKind::DegenerateBody, "need at least two points");
    constexpr double d = 2.0;
    constexpr int kMaxIter = 100000;
    constexpr double kWeightTol = 1e-12;
    constexpr double kGapTarget = 1e-9;

    std::vector<double> u(m, 1.0 / static_cast<double>(m));
    std::vector<double> g(m);
    Mat2 x = outer_sum(pts, u);
    if (!(x.det() > 1e-14 * x.trace() * x.trace())) throw Error(ErrorKind::DegenerateBody, "points have rank < 2");

    Polish best;
    int it = 0;
    for (; it < kMaxIter; ++it) {
        const Mat2 xi = x.inverse();
        std::size_t jmax = 0, kmin = 0;
        double gmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            g[i] = quad(xi, pts[i]);
            if (g[i] > g[jmax]) jmax = i;
            if (u[i] > 0.0 && g[i] < gmin) { gmin = g[i]; kmin = i; }
        }
        const double eps_plus = g[jmax] / d - 1.0;
        const double eps_minus = 1.0 - gmin / d;

        if (it % 25 == 0 || std::max(eps_plus, eps_minus) <= kWeightTol) {
            for (double rel : {1e-3, 1e-6, 1e-9}) {
                Polish p = polish(pts, g, g[jmax], rel, u);
                if (p.gap < best.gap) best = p;
            }
            if (best.gap <= 1e-12 || std::max(eps_plus, eps_minus) <= kWeightTol) break;
        }

        if (eps_plus >= eps_minus) {
            const double kappa = g[jmax];
            const double beta = (kappa - d) / (d * (kappa - 1.0));
            for (auto& w : u) w *= (1.0 - beta);
            u[jmax] += beta;
        } else {
            const double gk = g[kmin];
            const double beta = std::min((d - gk) / (d * (gk - 1.0)), u[kmin] / (1.0 - u[kmin]));
            for (auto& w : u) w *= (1.0 + beta);
            u[kmin] -= beta;
            if (u[kmin] < 1e-300) u[kmin] = 0.0;
        }
        x = outer_sum(pts, u);
    }

    if (!std::isfinite(best.gap)) throw Error(ErrorKind::NoConvergence, "enclosing ellipse solve failed");
    if (best.gap > kGapTarget) {
        // Fall back to the Khachiyan ellipse scaled to contain every point.
        const Mat2 xi = x.inverse();
        double gmax = 0.0;
        for (const auto& p : pts) gmax = std::max(gmax, quad(xi, p));
        const Mat2 a = (1.0 / gmax) * xi;
        const double gap = ellipse_area(a) / dual_area_bound(pts, u) - 1.0;
        if (gap < best.gap) best = Polish{a, gap};
    }
    return LoewnerSolve{Ellipse{best.form, {}}, best.gap, it};
}

Ellipse loewner(const Polygon& k) {
    if (!is_origin_symmetric(k)) throw Error(ErrorKind::NotSymmetric, "Löwner ellipse needs an o-symmetric body");
    auto res = minimum_enclosing_ellipse(k.vertices());
    if (res.gap > 1e-6) throw Error(ErrorKind::NoConvergence, "Löwner ellipse optimality gap too large");
    return res.ellipse;
}

Ellipse john(const Polygon& k) {
    if (!is_origin_symmetric(k)) throw Error(ErrorKind::NotSymmetric, "John ellipse needs an o-symmetric body");
    return loewner(polar(k)).polar();
}

std::string_view to_string(ContactPattern p) {
    switch (p) {
        case ContactPattern::square: return "square";
        case ContactPattern::hexagon: return "hexagon";
        case ContactPattern::none: return "none";
    }
    return "none";
}

ContactReport behrend_contacts(const Polygon& k, const Ellipse& e, EllipseRole role) {
    constexpr double kDistTol = 1e-6;
    constexpr double kAngleTol = 1e-5;
    const Polygon kn = apply_linear(k, e.normalizer());
    const auto& v = kn.vertices();
    const std::size_t n = v.size();

    ContactReport rep;
    if (role == EllipseRole::circumscribed) {
        for (const auto& p : v)
            if (std::abs(norm(p) - 1.0) <= kDistTol) rep.contact_points.push_back(p);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a = v[i], b = v[(i + 1) % n];
            const Point2 ed = b - a;
            const double t = -dot(a, ed) / dot(ed, ed);
            const Point2 foot = a + t * ed;
            const double tt = kDistTol / norm(ed);
            if (std::abs(norm(foot) - 1.0) <= kDistTol && t >= -tt && t <= 1.0 + tt)
                rep.contact_points.push_back(foot);
        }
    }
    if (rep.contact_points.empty()) throw Error(ErrorKind::NoContacts, "no boundary point on the unit circle");

    std::vector<double> ang;
    for (const auto& p : rep.contact_points) {
        double a = std::atan2(p.y, p.x);
        if (a < 0.0) a += 2.0 * kPi;
        ang.push_back(a);
    }
    std::sort(ang.begin(), ang.end());
    rep.max_gap_angle = ang.front() + 2.0 * kPi - ang.back();
    for (std::size_t i = 0; i + 1 < ang.size(); ++i) rep.max_gap_angle = std::max(rep.max_gap_angle, ang[i + 1] - ang[i]);

    auto present = [&](double a) {
        a = std::fmod(a, 2.0 * kPi);
        for (double b : ang) {
            const double diff = std::abs(a - b);
            if (std::min(diff, 2.0 * kPi - diff) <= kAngleTol) return true;
        }
        return false;
    };
    for (double a : ang) {
        if (present(a + 0.5 * kPi) && present(a + kPi) && present(a + 1.5 * kPi)) {
            rep.pattern = ContactPattern::square;
            return rep;
        }
    }
    if (ang.size() >= 6 && rep.max_gap_angle < 0.5 * kPi) rep.pattern = ContactPattern::hexagon;
    return rep;
}

double bm_distance_upper(const Polygon& k) {
    const Ellipse e = loewner(k);
    const auto& v = k.vertices();
    const std::size_t n = v.size();
    double mu = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 ed = v[(i + 1) % n] - v[i];
        const Point2 nrm{ed.y, -ed.x};
        mu = std::min(mu, dot(nrm, v[i]) / e.support(nrm));
    }
    return 1.0 / mu;
}

}  // namespace mahler
