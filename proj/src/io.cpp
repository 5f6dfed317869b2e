#include "mahler/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "mahler/error.hpp"

namespace mahler {

namespace {

Point2 point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorKind::InvalidInput, "a point is a pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json point_to_json(const Point2& p) { return Json::array({p.x, p.y}); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field ") + key);
    return j.at(key);
}

double number(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number()) throw Error(ErrorKind::InvalidInput, std::string(key) + " must be a number");
    return v.get<double>();
}

SectorCase parse_case(const std::string& s) {
    if (s == "i") return SectorCase::i;
    if (s == "ii") return SectorCase::ii;
    if (s == "iii") return SectorCase::iii;
    throw Error(ErrorKind::InvalidInput, "unknown sector case " + s);
}

std::string quote(const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string q = "\"";
    for (char c : f) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

}  // namespace

Polygon polygon_from_json(const Json& j) {
    const Json& v = field(j, "vertices");
    if (!v.is_array()) throw Error(ErrorKind::InvalidInput, "vertices must be an array");
    std::vector<Point2> pts;
    for (const auto& p : v) pts.push_back(point_from_json(p));
    return polygon_new(std::move(pts));
}

Json polygon_to_json(const Polygon& k) {
    Json v = Json::array();
    for (const auto& p : k.vertices()) v.push_back(point_to_json(p));
    return {{"vertices", v}};
}

Json ellipse_to_json(const Ellipse& e) {
    return {{"A", Json::array({Json::array({e.form.a11, e.form.a12}), Json::array({e.form.a21, e.form.a22})})},
            {"center", point_to_json(e.center)}};
}

Ellipse ellipse_from_json(const Json& j) {
    const Json& a = field(j, "A");
    if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::InvalidInput, "A must be 2x2");
    const Point2 r1 = point_from_json(a[0]), r2 = point_from_json(a[1]);
    Ellipse e;
    e.form = {r1.x, r1.y, r2.x, r2.y};
    e.center = j.contains("center") ? point_from_json(j.at("center")) : Point2{};
    if (e.form.a12 != e.form.a21 || !(e.form.a11 > 0.0) || !(e.form.det() > 0.0))
        throw Error(ErrorKind::InvalidInput, "A must be symmetric positive definite");
    return e;
}

Json sector_spec_to_json(const SectorSpec& s) {
    return {{"alpha", s.alpha},
            {"target_area", s.target_area},
            {"case", std::string(to_string(s.case_tag))},
            {"arc_ellipse", ellipse_to_json(s.arc_ellipse)},
            {"segment_length", s.segment_length}};
}

SectorSpec sector_spec_from_json(const Json& j) {
    SectorSpec s;
    s.alpha = number(j, "alpha");
    s.target_area = number(j, "target_area");
    const Json& c = field(j, "case");
    if (!c.is_string()) throw Error(ErrorKind::InvalidInput, "case must be a string");
    s.case_tag = parse_case(c.get<std::string>());
    s.arc_ellipse = ellipse_from_json(field(j, "arc_ellipse"));
    s.segment_length = number(j, "segment_length");
    return s;
}

Json opt_result_to_json(const OptResult& r, const OptConfig& cfg) {
    return {{"n", cfg.n},
            {"mode", std::string(to_string(cfg.mode))},
            {"seed", cfg.seed},
            {"final", polygon_to_json(r.final)},
            {"product", r.product_trace.empty() ? 0.0 : r.product_trace.back()},
            {"target", regular_product(cfg.n)},
            {"product_trace", r.product_trace},
            {"residual_i", r.residual_i},
            {"residual_ii", r.residual_ii},
            {"regularity_score", r.regularity_score},
            {"iterations", r.iterations},
            {"converged", r.converged}};
}

Json santalo_to_json(const SantaloSolveReport& r) {
    return {{"point", point_to_json(r.point)},
            {"iterations", r.iterations},
            {"final_gradient_norm", r.final_gradient_norm},
            {"polar_centroid_norm", r.polar_centroid_norm},
            {"converged", r.converged}};
}

Json steiner_to_json(const SteinerReport& r) {
    return {{"symmetral", polygon_to_json(r.symmetral)},
            {"area_drift", r.area_drift},
            {"polar_area_before", r.polar_area_before},
            {"polar_area_after", r.polar_area_after},
            {"equality_case", r.equality_case}};
}

Json theorem_b_to_json(const TheoremBReport& r) {
    Json sectors = Json::array();
    for (const auto& s : r.sectors) sectors.push_back({{"angle", s.angle}, {"value", s.value}, {"violation", s.violation}});
    return {{"symmetric", r.symmetric},
            {"pattern", std::string(to_string(r.pattern))},
            {"vol_K", r.vol_K},
            {"vol_Kstar", r.vol_Kstar},
            {"sum", r.sum},
            {"sector_sum", r.sector_sum},
            {"tolerance", r.tolerance},
            {"sectors", sectors},
            {"violation", r.violation}};
}

Json stability_record_to_json(const StabilityRecord& r) {
    return {{"eps", r.eps},
            {"vol_K", r.vol_K},
            {"vol_Kstar", r.vol_Kstar},
            {"product", r.product},
            {"bm_upper", r.bm_upper},
            {"n_discretization", r.n_discretization}};
}

Json fit_to_json(const FitReport& f) {
    return {{"exponent", f.exponent},
            {"coefficient", f.coefficient},
            {"r_squared", f.r_squared},
            {"eps_range", Json::array({f.eps_range.first, f.eps_range.second})}};
}

Json constants_to_json(const StabilityConstants& c) {
    return {{"dimension", c.dimension},
            {"kappa_d", c.kappa_d},
            {"kappa_d_minus_1", c.kappa_d_minus_1},
            {"c_K0", c.c_K0},
            {"eps1_K0", c.eps1_K0},
            {"theorem_e_coefficient", c.theorem_e_coefficient}};
}

Json remark_to_json(const RemarkReport& r) {
    Json cs = Json::array();
    for (const auto& c : r.constants)
        cs.push_back({{"label", c.label},
                      {"value", c.value},
                      {"bound", c.bound},
                      {"printed", c.printed},
                      {"exceeds", c.exceeds},
                      {"matches_printed", c.matches_printed}});
    return {{"constants", cs}, {"triangle_from_polygons", r.triangle_from_polygons}, {"all_hold", r.all_hold}};
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), width_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != width_) throw Error(ErrorKind::InvalidInput, "csv row width differs from header");
    for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << quote(fields[i]);
    out_ << "\r\n";
}

void write_theorem_e_csv(std::ostream& out, const std::vector<TheoremERow>& rows) {
    CsvWriter w(out, {"eps", "trial", "lhs", "rhs", "violation"});
    for (const auto& r : rows)
        w.row({format_double(r.eps), std::to_string(r.trial), format_double(r.lhs), format_double(r.rhs), r.violation ? "1" : "0"});
}

void write_stability_csv(std::ostream& out, const std::vector<StabilityRecord>& rows) {
    CsvWriter w(out, {"eps", "vol_K", "vol_Kstar", "product", "bm_upper", "n_discretization"});
    for (const auto& r : rows)
        w.row({format_double(r.eps), format_double(r.vol_K), format_double(r.vol_Kstar), format_double(r.product),
               format_double(r.bm_upper), std::to_string(r.n_discretization)});
}

std::string svg_document(const Polygon& k, const std::vector<Ellipse>& ellipses) {
    double extent = 1.0;
    for (const auto& p : k.vertices()) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    for (const auto& e : ellipses)
        for (const Point2 u : {Point2{1, 0}, Point2{0, 1}})
            extent = std::max(extent, std::abs(dot(u, e.center)) + e.support(u));
    extent *= 1.05;
    const double px = 512.0, s = px / (2.0 * extent);
    auto pt = [&](const Point2& p) { return format_double(s * (p.x + extent)) + "," + format_double(s * (extent - p.y)); };
    auto path = [&](const std::vector<Point2>& v) {
        std::string d = "M";
        for (std::size_t i = 0; i < v.size(); ++i) d += (i ? " L" : "") + pt(v[i]);
        return d + " Z";
    };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px << "\" viewBox=\"0 0 " << px << ' ' << px
      << "\">\n";
    o << "  <circle cx=\"" << s * extent << "\" cy=\"" << s * extent << "\" r=\"" << s
      << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    const char* colors[] = {"#c0392b", "#2e86c1", "#27ae60"};
    for (std::size_t i = 0; i < ellipses.size(); ++i) {
        o << "  <path d=\"" << path(ellipses[i].to_polygon(256).vertices()) << "\" fill=\"none\" stroke=\"" << colors[i % 3] << "\"/>\n";
    }
    o << "  <path d=\"" << path(k.vertices()) << "\" fill=\"#f4d03f\" fill-opacity=\"0.4\" stroke=\"#000\"/>\n";
    o << "  <circle cx=\"" << s * extent << "\" cy=\"" << s * extent << "\" r=\"2\"/>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace mahler
