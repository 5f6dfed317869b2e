#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mahler/geom.hpp"

namespace mahler {

enum class OptMode { symmetric, santalo_centered };
std::string_view to_string(OptMode m);

struct OptConfig {
    int n = 6;
    OptMode mode = OptMode::symmetric;
    std::uint64_t seed = 0;
    int max_iters = 200000;
    double step_init = 0.05;
    double step_min = 1e-9;
};

struct OptResult {
    Polygon final;
    std::vector<double> product_trace;
    double residual_i = 0.0;
    double residual_ii = 0.0;
    double regularity_score = 0.0;
    int iterations = 0;
    // false when max_iters ran out before every step fell below step_min
    bool converged = false;
};

struct Residuals {
    double residual_i = 0.0;
    double residual_ii = 0.0;
};

// Extremality conditions at o, as sines of angles: (i) o, (x1+x3)/2, x2 collinear
// for consecutive vertices; (ii) o, (y2+y3)/2 and aff{y1,y2} ∩ aff{y3,y4} collinear,
// the intersection taken projectively so parallel sides give a direction.
Residuals condition_residuals(const Polygon& k);

// x_i += t (x_{i+1} - x_{i-1}); area preserving. In symmetric mode the antipodal
// vertex follows.
Polygon move_slide_vertex(const Polygon& k, int i, double t, bool symmetric = false);

// Rotates the line of edge (x_i, x_{i+1}) about the edge midpoint by eps, then
// shifts it parallel to itself so the area is unchanged.
Polygon move_rotate_edge(const Polygon& k, int i, double eps, bool symmetric = false);

// V(K) V(K*) in symmetric mode, V(K) V((K - s(K))^*) otherwise.
double objective(const Polygon& k, OptMode mode);

OptResult maximize_product(const OptConfig& cfg);

// Distance to the nearest linear image of a regular polygon, after normalizing by
// the Löwner ellipse of K ∩ -K and the mean vertex radius.
double affine_regularity_score(const Polygon& k);

// n^2 sin^2(pi/n)
double regular_product(int n);

}  // namespace mahler
