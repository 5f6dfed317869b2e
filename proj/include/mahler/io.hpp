#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mahler/ellipse.hpp"
#include "mahler/experiments.hpp"
#include "mahler/geom.hpp"
#include "mahler/optimize.hpp"
#include "mahler/santalo.hpp"
#include "mahler/sector.hpp"
#include "mahler/symmetrize.hpp"

namespace mahler {

using Json = nlohmann::json;

// {"vertices": [[x, y], ...]}; malformed documents raise InvalidInput, geometric
// problems keep their own kind.
Polygon polygon_from_json(const Json& j);
Json polygon_to_json(const Polygon& k);

// {"A": [[a11, a12], [a21, a22]], "center": [x, y]}
Json ellipse_to_json(const Ellipse& e);
Ellipse ellipse_from_json(const Json& j);

Json sector_spec_to_json(const SectorSpec& s);
SectorSpec sector_spec_from_json(const Json& j);

Json opt_result_to_json(const OptResult& r, const OptConfig& cfg);
Json santalo_to_json(const SantaloSolveReport& r);
Json steiner_to_json(const SteinerReport& r);
Json theorem_b_to_json(const TheoremBReport& r);
Json stability_record_to_json(const StabilityRecord& r);
Json fit_to_json(const FitReport& f);
Json constants_to_json(const StabilityConstants& c);
Json remark_to_json(const RemarkReport& r);

// Shortest text that reads back as the same double ("%.17g").
std::string format_double(double x);

// RFC 4180: CRLF records, fields quoted when they hold a comma, quote or line break.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
    std::size_t width_;
};

void write_theorem_e_csv(std::ostream& out, const std::vector<TheoremERow>& rows);
void write_stability_csv(std::ostream& out, const std::vector<StabilityRecord>& rows);

// One body per document with the unit circle and the given ellipses overlaid.
std::string svg_document(const Polygon& k, const std::vector<Ellipse>& ellipses);

}  // namespace mahler
