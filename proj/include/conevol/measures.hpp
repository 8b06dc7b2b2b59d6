#pragma once

#include "conevol/polytope.hpp"

namespace conevol {

// Finite atomic measure on the sphere: (unit direction, positive mass) pairs
// with pairwise-distinct directions.
struct DiscreteMeasure {
    int dim = 0;
    struct Atom {
        Vec direction;
        double mass = 0.0;
    };
    std::vector<Atom> atoms;

    double total() const;
    // || sum mass * direction || — zero for any closed surface (Minkowski).
    double closure_residual() const;
};

// Angular identity tolerance for atoms (radians; compared by chord length).
inline constexpr double tol_angle = 1e-8;

// One atom per facet normal with mass = facet (n-1)-area.
DiscreteMeasure surface_area_measure(const Polytope& P);

// Atom mass h_i^(1-p) * area_i. Requires origin strictly interior when p != 1.
DiscreteMeasure lp_surface_measure(const Polytope& P, double p);

// Atom mass h_i * area_i / n; total equals volume when origin is interior.
DiscreteMeasure cone_volume_measure(const Polytope& P);

// Mass of the unique atom within tol_angle of u; 0 when there is none.
double mass_at(const DiscreteMeasure& mu, const Vec& u);

struct SubspaceReport {
    double ratio = 0.0;  // measure fraction carried by span(basis)
    double bound = 0.0;  // dim(span) / n
    bool ok = false;
};

// Subspace concentration check for the subspace spanned by `basis`.
SubspaceReport subspace_concentration(const DiscreteMeasure& mu, const std::vector<Vec>& basis);

}  // namespace conevol
