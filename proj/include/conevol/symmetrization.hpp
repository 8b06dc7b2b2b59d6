#pragma once

#include <functional>

#include "conevol/polytope.hpp"

namespace conevol {

// Sampled section-area profile A(t) of a body along a unit direction u,
// t in [-h(-u), h(u)]. The Schwarz symmetrization of the body is the solid of
// revolution with radius (A(t)/omega_{n-1})^(1/(n-1)); all downstream
// quantities depend only on this profile, so the symmetrized body is never
// meshed.
//
// Samples are laid out as composite-Simpson panels: each interval between
// consecutive breakpoints carries an even number of uniform subintervals, so
// Simpson quadrature never straddles a kink of A.
struct SliceProfile {
    int dim = 0;
    Vec direction;
    double t_lo = 0.0, t_hi = 0.0;
    std::vector<double> ts;
    std::vector<double> areas;
    std::vector<int> panel_starts;  // sample index of each breakpoint (incl. both ends)

    double span() const { return t_hi - t_lo; }
    // Composite Simpson of f(t) * A(t) over the profile.
    double integrate(const std::function<double(double, double)>& f) const;
    double volume() const;        // integral of A
    double first_moment() const;  // integral of t * A
    // Linear interpolation of A between samples.
    double area_at(double t) const;
};

// k-dimensional unit-ball volume pi^(k/2) / Gamma(k/2 + 1).
double unit_ball_volume(int k);

// Builds the profile of P along unit u: per-breakpoint-interval uniform grids
// of ~resolution total subintervals, breakpoints at all vertex levels v.u.
SliceProfile profile(const Polytope& P, const Vec& u, int resolution = 2048);

// Builds the analytic profile of a frustum r(h) affine on [h_lo, h_hi].
SliceProfile frustum_profile(int dim, double h_lo, double h_hi, double r_lo, double r_hi,
                             int resolution = 256);

// Builds the analytic profile of the unit ball.
SliceProfile ball_profile(int dim, int resolution = 256);

// Schwarz radius r(t) = (A(t)/omega_{n-1})^(1/(n-1)).
double schwarz_radius(const SliceProfile& profile, double t);

struct Prop1Report {
    double volume_body = 0.0, volume_profile = 0.0;
    double volume_abs_dev = 0.0, volume_rel_dev = 0.0;
    double centroid_u = 0.0;       // first moment / V, should be 0
    double centroid_rel_dev = 0.0; // |centroid_u| / diameter
    // endpoint cone-volume masses h * A(+-h) / n vs the measure atoms
    double top_mass_profile = 0.0, top_mass_measure = 0.0, top_rel_dev = 0.0;
    double bot_mass_profile = 0.0, bot_mass_measure = 0.0, bot_rel_dev = 0.0;
};

// Checks volume preservation, centroid preservation along u, and the endpoint
// cone-volume identity for the Schwarz symmetrization of a centered P.
Prop1Report verify_prop1(const Polytope& P, const Vec& u, int resolution = 2048);

struct ConcavityReport {
    // max positive second difference of A^(1/(n-1)), normalized by
    // max r / span^2; 0 for concave profiles (Brunn-Minkowski).
    double concavity_defect = 0.0;
    // max deviation of r(t) from the chord through its endpoints, / max r.
    double linearity_defect = 0.0;
};

ConcavityReport concavity_defect(const SliceProfile& profile);

}  // namespace conevol
