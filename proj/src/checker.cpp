#include "conevol/checker.hpp"

#include <algorithm>
#include <cmath>

#include "conevol/linalg.hpp"
#include "conevol/symmetrization.hpp"
#include "conevol/truncated_cone.hpp"

namespace conevol {

namespace la = linalg;

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Strict: return "Strict";
        case Classification::PrismEquality: return "PrismEquality";
        case Classification::ConeEquality: return "ConeEquality";
        case Classification::Violated: return "Violated";
    }
    return "?";
}

namespace {

void require_centered(const Polytope& P) {
    const double off = la::norm(P.centroid());
    if (off > 1e-9 * P.diameter())
        throw input_error("body must have centroid at the origin (offset " +
                          std::to_string(off) + ", diameter " + std::to_string(P.diameter()) +
                          "); re-center first");
    if (!P.origin_interior()) throw domain_error("origin must be interior");
}

}  // namespace

Classification classify_equality(const Polytope& P, const Vec& u, const CheckerOptions& opt,
                                 bool* warning) {
    if (warning) *warning = false;
    const SliceProfile prof = profile(P, la::normalized(u), opt.resolution);
    const ConcavityReport cr = concavity_defect(prof);
    if (cr.linearity_defect <= opt.tol_lin) {
        const double r_lo = schwarz_radius(prof, prof.t_lo);
        const double r_hi = schwarz_radius(prof, prof.t_hi);
        const double r_max = std::max(r_lo, r_hi);
        if (std::abs(r_hi - r_lo) <= 10.0 * opt.tol_lin * r_max)
            return Classification::PrismEquality;
        if (std::min(r_lo, r_hi) <= 10.0 * opt.tol_lin * r_max)
            return Classification::ConeEquality;
    }
    if (warning) *warning = true;
    return Classification::Strict;
}

ConditionReport check_direction(const Polytope& P, const Vec& u, const CheckerOptions& opt) {
    require_centered(P);
    const Vec un = la::normalized(u);
    const int n = P.dim();
    const DiscreteMeasure cvm = cone_volume_measure(P);
    const double V = P.volume();

    ConditionReport r;
    r.direction = un;
    r.x = mass_at(cvm, un) / V;
    r.y = mass_at(cvm, la::scale(un, -1.0)) / V;
    r.psi = cone::psi(r.x, r.y, n);
    r.slack = 1.0 - r.psi;
    r.scc_value = n * (r.x + r.y);

    if (r.slack < -opt.tol_violate) {
        r.classification = Classification::Violated;
    } else if (std::abs(r.slack) <= opt.tol_eq) {
        r.classification = classify_equality(P, un, opt, &r.equality_warning);
    } else {
        r.classification = Classification::Strict;
    }
    return r;
}

std::vector<ConditionReport> check_all_facets(const Polytope& P, const CheckerOptions& opt,
                                              const std::vector<Vec>& include_axes) {
    require_centered(P);
    std::vector<Vec> axes;
    auto add_axis = [&](const Vec& u) {
        for (const Vec& a : axes)
            if (la::dist(a, u) <= tol_angle || la::dist(a, la::scale(u, -1.0)) <= tol_angle)
                return;
        axes.push_back(u);
    };
    for (const Facet& f : P.facets()) add_axis(f.normal);
    for (const Vec& u : include_axes) add_axis(la::normalized(u));

    std::vector<ConditionReport> reports;
    reports.reserve(axes.size());
    for (const Vec& u : axes) reports.push_back(check_direction(P, u, opt));
    std::sort(reports.begin(), reports.end(),
              [](const ConditionReport& a, const ConditionReport& b) { return a.slack < b.slack; });
    return reports;
}

double refinement_gap(const ConditionReport& report) { return report.psi - report.scc_value; }

}  // namespace conevol
