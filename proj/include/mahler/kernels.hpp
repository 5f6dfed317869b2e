#pragma once

// Batch kernels. Every parallel kernel has a serial twin with identical per-item
// arithmetic; results are stored by index, so both produce the same vector.

#include <cstddef>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include "mahler/geom.hpp"
#include "mahler/santalo.hpp"

namespace mahler::kernels {

template <class F>
auto map_serial(std::size_t n, F&& f) {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
}

// OpenMP over independent items. The exception of the lowest failing index is rethrown.
template <class F>
auto map_parallel(std::size_t n, F&& f) {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<double> volume_products_serial(std::span<const Polygon> bodies);
std::vector<double> volume_products_parallel(std::span<const Polygon> bodies);

std::vector<SantaloSolveReport> santalo_points_serial(std::span<const Polygon> bodies);
std::vector<SantaloSolveReport> santalo_points_parallel(std::span<const Polygon> bodies);

// (1/2) * integral of (h_K(u) - <z,u>)^{-2} du by the midpoint rule; the quadrature
// route to V((K - z)^*). The parallel version reduces in a different order.
double radial_polar_area_serial(const Polygon& k, const Point2& z, int samples);
double radial_polar_area_parallel(const Polygon& k, const Point2& z, int samples);

}  // namespace mahler::kernels
