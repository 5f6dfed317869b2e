#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahler/geom.hpp"

namespace mahler {

// {(x, y) in B² : |x| <= 1 - eps} as an n-gon: arc vertices at angles 2 pi j / n
// plus the four exact corners.
Polygon truncated_disk(double eps, int n);
// B² ∩ [-(1 - eps), 1 - eps]², eps < 1 - 1/sqrt(2).
Polygon square_intersection(double eps, int n);
// Regular n-gon with radii 1 + eps * u_j, u_j in [-1, 1] drawn from seed, symmetrized.
Polygon random_symmetric_ngon(double eps, int n, std::uint64_t seed);
// Exploratory: the two caps |x| > 1 - eps replaced by circular arcs of radius
// r >= 1 through the corners (r = infinity is the straight cut).
Polygon curved_truncation(double eps, int n, double r);

enum class Family { truncated_disk, square_intersection, random_symmetric_ngon };
Family parse_family(std::string_view name);
std::string_view to_string(Family f);
Polygon make_family_member(Family f, double eps, int n, std::uint64_t seed = 0);

struct StabilityRecord {
    double eps = 0.0;
    double vol_K = 0.0;
    double vol_Kstar = 0.0;  // V((K - s(K))^*)
    double product = 0.0;
    double bm_upper = 0.0;
    int n_discretization = 0;
};

StabilityRecord stability_record(const Polygon& k, double eps, int n);

struct FitReport {
    double exponent = 0.0;
    double coefficient = 0.0;
    double r_squared = 0.0;
    std::pair<double, double> eps_range{0.0, 0.0};
};

// Least squares of log(reference - product) against log(eps).
FitReport fit_exponent(const std::vector<StabilityRecord>& records, double reference);

struct ScanResult {
    std::vector<StabilityRecord> records;  // sorted by eps
    // deficit pi² - product positive and increasing in bm_upper
    bool ordering_holds = false;
    // every product <= pi² + 1e-3
    bool ceiling_holds = false;
    // max over records of deficit / (bm_upper - 1)^3
    double max_cube_ratio = 0.0;
};

ScanResult theorem_d_scan(Family family, const std::vector<double>& eps_grid, int n, std::uint64_t seed = 0);

struct RemarkConstant {
    std::string label;
    double value = 0.0;
    double bound = 0.0;    // the ball quantity it is compared with
    double printed = 0.0;  // digits as printed
    bool exceeds = false;
    bool matches_printed = false;
};

// The planar triangle and the cross-polytope/cube constants in dimensions 3, 4, 5;
// the triangle value is also recomputed from actual polygon areas.
struct RemarkReport {
    std::vector<RemarkConstant> constants;
    double triangle_from_polygons = 0.0;
    bool all_hold = false;
};
RemarkReport remark_constants_check();

}  // namespace mahler
