#include "conevol/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "conevol/linalg.hpp"

namespace conevol::io {

using nlohmann::json;
namespace la = linalg;

Polytope PolytopeFile::build() const {
    if (!halfspaces.empty()) return Polytope::from_halfspaces(dim, halfspaces);
    if (!vertices.empty()) return Polytope::from_vertices(dim, vertices);
    throw input_error("polytope file has neither vertices nor halfspaces");
}

namespace {

Vec parse_vec(const json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw input_error(std::string(what) + ": expected an array of " + std::to_string(dim) +
                          " numbers");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_number()) throw input_error(std::string(what) + ": non-numeric coordinate");
        const double d = x.get<double>();
        if (!std::isfinite(d)) throw input_error(std::string(what) + ": non-finite coordinate");
        v.push_back(d);
    }
    return v;
}

}  // namespace

PolytopeFile parse_polytope_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("polytope file: ") + e.what());
    }
    PolytopeFile f;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw input_error("polytope file: missing integer field 'dim'");
    f.dim = j["dim"].get<int>();
    if (f.dim < 2) throw input_error("polytope file: dim must be >= 2");
    if (j.contains("name")) f.name = j["name"].get<std::string>();
    if (j.contains("vertices"))
        for (const auto& v : j["vertices"]) f.vertices.push_back(parse_vec(v, f.dim, "vertex"));
    if (j.contains("halfspaces")) {
        for (const auto& h : j["halfspaces"]) {
            if (!h.contains("normal") || !h.contains("offset"))
                throw input_error("halfspace entries need 'normal' and 'offset'");
            Vec nrm = parse_vec(h["normal"], f.dim, "halfspace normal");
            double off = h["offset"].get<double>();
            if (!std::isfinite(off)) throw input_error("halfspace offset not finite");
            const double len = la::norm(nrm);
            if (len < 1e-12) throw input_error("halfspace normal is (near-)zero");
            f.halfspaces.emplace_back(la::scale(nrm, 1.0 / len), off / len);
        }
    }
    if (f.vertices.empty() && f.halfspaces.empty())
        throw input_error("polytope file needs 'vertices' or 'halfspaces'");
    return f;
}

PolytopeFile parse_off(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "OFF") throw input_error("OFF: missing header");
    long nv = 0, nf = 0, ne = 0;
    if (!(in >> nv >> nf >> ne)) throw input_error("OFF: malformed count line");
    PolytopeFile f;
    f.dim = 3;
    for (long i = 0; i < nv; ++i) {
        Vec v(3);
        if (!(in >> v[0] >> v[1] >> v[2]))
            throw input_error("OFF: vertex " + std::to_string(i) + " malformed");
        f.vertices.push_back(std::move(v));
    }
    return f;  // faces ignored; the hull is rebuilt
}

PolytopeFile load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".off") return parse_off(ss.str());
    return parse_polytope_json(ss.str());
}

std::string format_double(double x) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json condition_report_json(const ConditionReport& r) {
    json j;
    j["direction"] = r.direction;
    j["x"] = r.x;
    j["y"] = r.y;
    j["psi"] = r.psi;
    j["slack"] = r.slack;
    j["scc_value"] = r.scc_value;
    j["gap"] = refinement_gap(r);
    j["classification"] = to_string(r.classification);
    if (r.equality_warning) j["equality_warning"] = true;
    return j;
}

json measure_json(const DiscreteMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms) atoms.push_back({{"direction", a.direction}, {"mass", a.mass}});
    return {{"dim", mu.dim},
            {"atoms", atoms},
            {"total", mu.total()},
            {"closure_residual", mu.closure_residual()}};
}

json certificate_json(const exact::Certificate& c) {
    json j;
    j["n"] = c.n;
    j["target"] = c.target;
    j["method"] = to_string(c.method);
    j["status"] = to_string(c.status);
    json w;
    if (c.shift_total_coeffs >= 0) {
        w["shift_nonneg_coeffs"] = c.shift_nonneg_coeffs;
        w["shift_total_coeffs"] = c.shift_total_coeffs;
    }
    if (c.sturm_roots >= 0) w["sturm_roots_above_1"] = c.sturm_roots;
    if (!c.notes.empty()) w["notes"] = c.notes;
    j["witness"] = w;
    return j;
}

json polytope_json(const Polytope& P, const std::string& name) {
    json j;
    j["dim"] = P.dim();
    if (!name.empty()) j["name"] = name;
    j["vertices"] = P.vertices();
    return j;
}

std::string profile_csv(const SliceProfile& prof) {
    std::ostringstream os;
    os << "t,area,radius\n";
    for (size_t i = 0; i < prof.ts.size(); ++i)
        os << format_double(prof.ts[i]) << "," << format_double(prof.areas[i]) << ","
           << format_double(schwarz_radius(prof, prof.ts[i])) << "\n";
    return os.str();
}

std::string condition_reports_csv(const std::vector<ConditionReport>& reports) {
    std::ostringstream os;
    os << "direction,x,y,psi,slack,scc_value,gap,classification\n";
    for (const auto& r : reports) {
        os << "\"";
        for (size_t i = 0; i < r.direction.size(); ++i)
            os << (i ? " " : "") << format_double(r.direction[i]);
        os << "\"," << format_double(r.x) << "," << format_double(r.y) << ","
           << format_double(r.psi) << "," << format_double(r.slack) << ","
           << format_double(r.scc_value) << "," << format_double(refinement_gap(r)) << ","
           << to_string(r.classification) << "\n";
    }
    return os.str();
}

}  // namespace conevol::io
