// Command-line driver: one subcommand per computation, Polygon JSON in, JSON/CSV out.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "mahler/ellipse.hpp"
#include "mahler/error.hpp"
#include "mahler/experiments.hpp"
#include "mahler/io.hpp"
#include "mahler/optimize.hpp"
#include "mahler/santalo.hpp"
#include "mahler/sector.hpp"
#include "mahler/symmetrize.hpp"

using namespace mahler;

namespace {

constexpr int kOk = 0, kInputError = 1, kVerifyFailed = 2;
constexpr double kPi = std::numbers::pi;

struct Common {
    std::string input = "-";
    std::string out;
    std::string svg;
    std::uint64_t seed = 0;
    int n = 4096;
    double tolerance = -1.0;  // < 0: the subcommand's default

    double tol(double fallback) const { return tolerance >= 0.0 ? tolerance : fallback; }
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, e.what());
    }
}

Polygon read_polygon(const Common& c) { return polygon_from_json(read_json(c.input)); }

// "disk" is the regular n-gon in S¹; anything else is a Polygon JSON path.
Polygon body_or_input(const std::string& body, const Common& c) {
    if (body == "disk") return regular_polygon(c.n);
    if (!body.empty()) throw Error(ErrorKind::InvalidInput, "unknown body " + body);
    return read_polygon(c);
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + c.out);
    f << text;
}

void emit(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

void emit_svg(const Common& c, const Polygon& k, const std::vector<Ellipse>& ellipses = {}) {
    if (c.svg.empty()) return;
    std::ofstream f(c.svg);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + c.svg);
    f << svg_document(k, ellipses);
}

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput:
        case ErrorKind::TooFewVertices:
        case ErrorKind::NonConvex:
        case ErrorKind::OriginNotInterior:
        case ErrorKind::ZeroDirection:
        case ErrorKind::PointNotInterior:
        case ErrorKind::InvalidDimension:
        case ErrorKind::NotSymmetric:
        case ErrorKind::DegenerateBody:
        case ErrorKind::AreaOutOfRange:
        case ErrorKind::DomainError:
        case ErrorKind::SandwichUnsatisfiable:
            return true;
        default:
            return false;
    }
}

std::vector<double> default_stability_grid() {
    std::vector<double> g;
    for (double e : {-2.0, -2.5, -3.0, -3.5, -4.0}) g.push_back(std::pow(10.0, e));
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volume products, Santaló points and extremal ellipses of planar convex polygons"};
    app.require_subcommand(1);
    Common c;
    int status = kOk;

    auto add_common = [&](CLI::App* s, bool takes_input = true) {
        if (takes_input) s->add_option("input", c.input, "Polygon JSON file, - for stdin");
        s->add_option("-o,--out", c.out, "write the result here instead of stdout");
        s->add_option("--svg", c.svg, "also draw the body");
        s->add_option("--seed", c.seed, "random seed");
        s->add_option("--n-discretization,--n", c.n, "vertices used to discretize smooth bodies");
        s->add_option("--tolerance", c.tolerance, "verification tolerance");
    };

    auto* polar_cmd = app.add_subcommand("polar", "polar body");
    add_common(polar_cmd);
    polar_cmd->callback([&] {
        const Polygon k = read_polygon(c);
        const Polygon p = polar(k);
        emit_svg(c, p);
        emit(c, polygon_to_json(p));
    });

    auto* volprod_cmd = app.add_subcommand("volprod", "V(K) V(K*) about o");
    add_common(volprod_cmd);
    volprod_cmd->callback([&] {
        const Polygon k = read_polygon(c);
        emit_svg(c, k);
        emit(c, Json{{"product", volume_product(k)}, {"vol_K", area(k)}, {"vol_Kstar", area(polar(k))}});
    });

    auto* santalo_cmd = app.add_subcommand("santalo", "Santaló point");
    add_common(santalo_cmd);
    santalo_cmd->callback([&] {
        const Polygon k = read_polygon(c);
        const SantaloSolveReport r = santalo_point(k);
        Json j = santalo_to_json(r);
        j["centroid"] = {centroid(k).x, centroid(k).y};
        j["polar_volume"] = polar_volume_at(k, r.point);
        j["inclusion_factor"] = check_inclusion_0(k);
        emit_svg(c, translate(k, -r.point));
        emit(c, j);
        if (!r.converged || r.polar_centroid_norm > c.tol(1e-8)) status = kVerifyFailed;
    });

    for (const char* name : {"john", "loewner"}) {
        const bool inner = std::string(name) == "john";
        auto* cmd = app.add_subcommand(name, inner ? "maximal inscribed ellipse (o-symmetric input)"
                                                   : "minimal enclosing ellipse (o-symmetric input)");
        add_common(cmd);
        cmd->callback([&, inner] {
            const Polygon k = read_polygon(c);
            const Ellipse e = inner ? john(k) : loewner(k);
            emit_svg(c, k, {e});
            emit(c, ellipse_to_json(e));
        });
    }

    double axis = 0.0;
    auto* steiner_cmd = app.add_subcommand("steiner", "Steiner symmetrization about a line through o");
    add_common(steiner_cmd);
    steiner_cmd->add_option("--axis", axis, "axis angle in radians");
    steiner_cmd->callback([&] {
        const Polygon k = read_polygon(c);
        const SteinerReport r = steiner(k, axis);
        emit_svg(c, r.symmetral);
        emit(c, steiner_to_json(r));
        const double tol = c.tol(1e-9);
        if (r.area_drift > 1e-10 * area(k) || r.polar_area_after < r.polar_area_before * (1.0 - tol)) status = kVerifyFailed;
    });

    double alpha = kPi / 4, sector_area = 0.0;
    std::string spec_path;
    auto* sector_cmd = app.add_subcommand("sector", "extremal boundary in the deltoid for a prescribed area");
    add_common(sector_cmd, false);
    sector_cmd->add_option("--alpha", alpha, "half-angle of the cone, in (0, pi/2)");
    sector_cmd->add_option("--area", sector_area, "V(C); defaults to alpha (the self-dual case)");
    sector_cmd->add_option("--spec", spec_path, "re-evaluate a SectorSpec JSON instead");
    sector_cmd->callback([&] {
        const SectorSpec s = !spec_path.empty() ? sector_spec_from_json(read_json(spec_path))
                                                : resolve_sector(alpha, sector_area > 0.0 ? sector_area : alpha);
        const Polygon body = sector_body(s, c.n);
        Json j = sector_spec_to_json(s);
        j["dual"] = sector_spec_to_json(dual_spec(s));
        j["dual_conic"] = std::string(dual_conic_type(s));
        j["polar_area"] = sector_polar_area(s, c.n);
        j["area_sum"] = s.target_area + sector_polar_area(s, c.n);
        emit_svg(c, body);
        emit(c, j);
        if (s.case_tag == SectorCase::ii && std::abs(sector_polar_area(s, c.n) - s.alpha) > c.tol(2e-3)) status = kVerifyFailed;
    });

    OptConfig cfg;
    std::string mode = "symmetric";
    auto* opt_cmd = app.add_subcommand("optimize", "local search for the maximal volume product among n-gons");
    add_common(opt_cmd, false);
    opt_cmd->add_option("--vertices", cfg.n, "number of vertices")->required();
    opt_cmd->add_option("--mode", mode, "symmetric or santalo_centered")->check(CLI::IsMember({"symmetric", "santalo_centered"}));
    opt_cmd->add_option("--max-iters", cfg.max_iters, "coordinate step budget");
    opt_cmd->callback([&] {
        cfg.mode = mode == "symmetric" ? OptMode::symmetric : OptMode::santalo_centered;
        cfg.seed = c.seed;
        const OptResult r = maximize_product(cfg);
        emit_svg(c, r.final);
        emit(c, opt_result_to_json(r, cfg));
        const double target = regular_product(cfg.n);
        if (std::abs(r.product_trace.back() - target) > c.tol(1e-5) * target) status = kVerifyFailed;
    });

    std::string body, which = "loewner";
    auto* b_cmd = app.add_subcommand("theorem-b", "V(K) + V(K*) <= 2 pi with the extremal ellipse as B²");
    add_common(b_cmd);
    b_cmd->add_option("--body", body, "disk for the discretized unit disk; otherwise the input polygon");
    b_cmd->add_option("--ellipse", which, "john or loewner")->check(CLI::IsMember({"john", "loewner"}));
    b_cmd->callback([&] {
        const Polygon k = body_or_input(body, c);
        const ExtremalEllipse e = which == "john" ? ExtremalEllipse::john : ExtremalEllipse::loewner;
        TheoremBReport r = theoremB_check(k, e, body == "disk" ? c.n : 0);
        if (c.tolerance >= 0.0) r.violation = r.sum > 2.0 * kPi + c.tolerance;
        Json j = theorem_b_to_json(r);
        j["two_pi"] = 2.0 * kPi;
        if (r.symmetric) emit_svg(c, k, {which == "john" ? john(k) : loewner(k)});
        else emit_svg(c, k);
        emit(c, j);
        if (r.violation) status = kVerifyFailed;
    });

    std::string family = "truncated_disk", format = "csv", reference = "disk";
    std::vector<double> eps_grid;
    auto* d_cmd = app.add_subcommand("theorem-d", "stability scan of a body family and exponent fit");
    add_common(d_cmd, false);
    d_cmd->add_option("--family", family, "truncated_disk, square_intersection or random_symmetric_ngon");
    d_cmd->add_option("--eps", eps_grid, "eps grid (default 1e-2 ... 1e-4 in half decades)");
    d_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    d_cmd->add_option("--reference", reference, "fit reference: disk (N-gon product) or pi2")
        ->check(CLI::IsMember({"disk", "pi2"}));
    d_cmd->callback([&] {
        if (eps_grid.empty()) eps_grid = default_stability_grid();
        const ScanResult s = theorem_d_scan(parse_family(family), eps_grid, c.n, c.seed);
        if (format == "csv") {
            std::ostringstream o;
            write_stability_csv(o, s.records);
            emit(c, o.str());
        } else {
            Json j{{"family", family}, {"ordering_holds", s.ordering_holds}, {"ceiling_holds", s.ceiling_holds},
                   {"max_cube_ratio", s.max_cube_ratio}};
            j["records"] = Json::array();
            for (const auto& r : s.records) j["records"].push_back(stability_record_to_json(r));
            const double ref = reference == "disk" ? regular_product(c.n) : kPi * kPi;
            j["reference"] = ref;
            try {
                j["fit"] = fit_to_json(fit_exponent(s.records, ref));
            } catch (const Error& e) {
                j["fit"] = nullptr;
                j["fit_error"] = e.what();
            }
            emit(c, j);
        }
        if (!s.ordering_holds || !s.ceiling_holds) status = kVerifyFailed;
    });

    std::vector<double> e_eps;
    int trials = 100;
    auto* e_cmd = app.add_subcommand("theorem-e", "random sandwich trials against the eps² bound");
    add_common(e_cmd);
    e_cmd->add_option("--body", body, "disk for the discretized unit disk; otherwise the input polygon");
    e_cmd->add_option("--eps", e_eps, "eps values")->required();
    e_cmd->add_option("--trials", trials, "trials per eps");
    e_cmd->callback([&] {
        const Polygon k0 = body_or_input(body, c);
        std::vector<TheoremERow> rows;
        for (double eps : e_eps) {
            const auto r = theorem_e_experiment(k0, eps, trials, c.seed);
            rows.insert(rows.end(), r.begin(), r.end());
        }
        std::ostringstream o;
        write_theorem_e_csv(o, rows);
        emit_svg(c, theorem_e_normalize(k0));
        emit(c, o.str());
        for (const auto& r : rows)
            if (r.violation) status = kVerifyFailed;
    });

    int dimension = 2;
    auto* const_cmd = app.add_subcommand("constants", "closed-form constants and the counterexample values");
    add_common(const_cmd);
    const_cmd->add_option("--dimension", dimension, "dimension for the ball constants (no input: the unit ball)");
    const_cmd->callback([&] {
        Json j;
        if (c.input != "-") {
            const Polygon k = theorem_e_normalize(read_polygon(c));
            j["stability"] = constants_to_json(stability_constants(2, diameter(k), area(k)));
        } else {
            const double kd = unit_ball_volume(dimension);
            j["stability"] = constants_to_json(stability_constants(dimension, 2.0, kd));
        }
        const RemarkReport rep = remark_constants_check();
        j["remark"] = remark_to_json(rep);
        emit(c, j);
        if (!rep.all_hold) status = kVerifyFailed;
    });

    double t_eps = 1e-2;
    std::vector<double> radii;
    auto* trunc_cmd = app.add_subcommand("truncate", "exploratory: cut the disk with circular arcs instead of lines");
    add_common(trunc_cmd, false);
    trunc_cmd->add_option("--eps", t_eps, "truncation depth");
    trunc_cmd->add_option("--radius", radii, "arc radii >= 1; inf for the straight cut");
    trunc_cmd->callback([&] {
        if (radii.empty()) radii = {1.0, 1.5, 2.0, 4.0, 16.0, INFINITY};
        std::ostringstream o;
        CsvWriter w(o, {"radius", "vol_K", "product", "bm_upper", "deficit_over_bm_cubed"});
        for (double r : radii) {
            const Polygon k = curved_truncation(t_eps, c.n, r);
            const StabilityRecord s = stability_record(k, t_eps, c.n);
            const double d = s.bm_upper - 1.0;
            w.row({format_double(r), format_double(s.vol_K), format_double(s.product), format_double(s.bm_upper),
                   format_double(d > 0.0 ? (regular_product(c.n) - s.product) / (d * d * d) : 0.0)});
        }
        emit(c, o.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? kInputError : kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return status;
}
