#include "conevol/measures.hpp"

#include <cmath>

#include "conevol/linalg.hpp"

namespace conevol {

namespace la = linalg;

double DiscreteMeasure::total() const {
    double s = 0.0;
    for (const Atom& a : atoms) s += a.mass;
    return s;
}

double DiscreteMeasure::closure_residual() const {
    Vec s(dim, 0.0);
    for (const Atom& a : atoms) s = la::add(s, la::scale(a.direction, a.mass));
    return la::norm(s);
}

DiscreteMeasure surface_area_measure(const Polytope& P) {
    DiscreteMeasure mu;
    mu.dim = P.dim();
    for (const Facet& f : P.facets()) mu.atoms.push_back({f.normal, f.area});
    return mu;
}

DiscreteMeasure lp_surface_measure(const Polytope& P, double p) {
    if (p != 1.0 && !P.origin_interior())
        throw domain_error("L_p surface measure with p != 1 needs the origin strictly interior");
    DiscreteMeasure mu;
    mu.dim = P.dim();
    for (const Facet& f : P.facets())
        mu.atoms.push_back({f.normal, std::pow(f.offset, 1.0 - p) * f.area});
    return mu;
}

DiscreteMeasure cone_volume_measure(const Polytope& P) {
    if (!P.origin_interior())
        throw domain_error("cone-volume measure needs the origin strictly interior");
    DiscreteMeasure mu;
    mu.dim = P.dim();
    for (const Facet& f : P.facets())
        mu.atoms.push_back({f.normal, f.offset * f.area / static_cast<double>(P.dim())});
    return mu;
}

double mass_at(const DiscreteMeasure& mu, const Vec& u) {
    if (std::abs(la::norm(u) - 1.0) > 1e-12) throw input_error("direction must be unit");
    double mass = 0.0;
    int hits = 0;
    for (const auto& a : mu.atoms)
        if (la::dist(a.direction, u) <= tol_angle) {
            mass = a.mass;
            ++hits;
        }
    if (hits > 1) throw invariant_error("two atoms within tol_angle of the query direction");
    return mass;
}

SubspaceReport subspace_concentration(const DiscreteMeasure& mu, const std::vector<Vec>& basis) {
    if (basis.empty() || static_cast<int>(basis.size()) >= mu.dim)
        throw input_error("subspace dimension must be in (0, n)");
    auto ortho = la::orthonormal_basis(basis);
    if (ortho.size() != basis.size()) throw input_error("subspace basis is linearly dependent");

    double in_mass = 0.0;
    for (const auto& a : mu.atoms) {
        Vec proj(mu.dim, 0.0);
        for (const Vec& b : ortho) proj = la::add(proj, la::scale(b, la::dot(b, a.direction)));
        if (la::dist(a.direction, proj) <= tol_angle) in_mass += a.mass;
    }
    SubspaceReport r;
    r.ratio = in_mass / mu.total();
    r.bound = static_cast<double>(basis.size()) / static_cast<double>(mu.dim);
    r.ok = r.ratio <= r.bound + 1e-9;
    return r;
}

}  // namespace conevol
