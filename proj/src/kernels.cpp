#include "mahler/kernels.hpp"

#include <numbers>

namespace mahler::kernels {

std::vector<double> volume_products_serial(std::span<const Polygon> bodies) {
    return map_serial(bodies.size(), [&](std::size_t i) { return volume_product(bodies[i]); });
}

std::vector<double> volume_products_parallel(std::span<const Polygon> bodies) {
    return map_parallel(bodies.size(), [&](std::size_t i) { return volume_product(bodies[i]); });
}

std::vector<SantaloSolveReport> santalo_points_serial(std::span<const Polygon> bodies) {
    return map_serial(bodies.size(), [&](std::size_t i) { return santalo_point(bodies[i]); });
}

std::vector<SantaloSolveReport> santalo_points_parallel(std::span<const Polygon> bodies) {
    return map_parallel(bodies.size(), [&](std::size_t i) { return santalo_point(bodies[i]); });
}

namespace {

double radial_term(const Polygon& k, const Point2& z, double angle) {
    const Point2 u = unit(angle);
    const double h = support(k, u) - dot(u, z);
    return 1.0 / (h * h);
}

}  // namespace

double radial_polar_area_serial(const Polygon& k, const Point2& z, int samples) {
    const double du = 2.0 * std::numbers::pi / samples;
    double s = 0.0;
    for (int i = 0; i < samples; ++i) s += radial_term(k, z, (i + 0.5) * du);
    return 0.5 * s * du;
}

double radial_polar_area_parallel(const Polygon& k, const Point2& z, int samples) {
    const double du = 2.0 * std::numbers::pi / samples;
    double s = 0.0;
#pragma omp parallel for reduction(+ : s) schedule(static)
    for (int i = 0; i < samples; ++i) s += radial_term(k, z, (i + 0.5) * du);
    return 0.5 * s * du;
}

}  // namespace mahler::kernels
