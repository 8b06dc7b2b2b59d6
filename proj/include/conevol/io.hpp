#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "conevol/checker.hpp"
#include "conevol/exact/certificates.hpp"
#include "conevol/measures.hpp"
#include "conevol/symmetrization.hpp"

namespace conevol::io {

// On-disk polytope description: vertices and/or halfspaces.
struct PolytopeFile {
    int dim = 0;
    std::string name;
    std::vector<Vec> vertices;
    std::vector<std::pair<Vec, double>> halfspaces;

    // Builds from halfspaces when present, else from vertices.
    Polytope build() const;
};

// Parses the JSON schema {dim, name?, vertices?, halfspaces?}. Halfspace
// normals are normalized on load (offset rescaled accordingly).
PolytopeFile parse_polytope_json(const std::string& text);
PolytopeFile load_polytope(const std::string& path);  // .json or .off by extension

// Minimal OFF importer (dim 3, vertices only; faces ignored, hull rebuilt).
PolytopeFile parse_off(const std::string& text);

std::string format_double(double x);  // 17 significant digits, '.' decimal

nlohmann::json condition_report_json(const ConditionReport& r);
nlohmann::json measure_json(const DiscreteMeasure& mu);
nlohmann::json certificate_json(const exact::Certificate& c);
nlohmann::json polytope_json(const Polytope& P, const std::string& name = "");

std::string profile_csv(const SliceProfile& prof);
std::string condition_reports_csv(const std::vector<ConditionReport>& reports);

}  // namespace conevol::io
