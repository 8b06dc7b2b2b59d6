#pragma once

#include "conevol/measures.hpp"
#include "conevol/polytope.hpp"

// Evaluation of the refined necessary condition
//   n (mu(u) + mu(-u))/V + (n+1)^(n-1) |(mu(u) - mu(-u))/V|^n <= 1
// for centered bodies, with equality-case classification.

namespace conevol {

enum class Classification { Strict, PrismEquality, ConeEquality, Violated };

const char* to_string(Classification c);

struct ConditionReport {
    Vec direction;
    double x = 0.0;          // mu(u)/V
    double y = 0.0;          // mu(-u)/V
    double psi = 0.0;        // n(x+y) + (n+1)^(n-1)|x-y|^n
    double slack = 0.0;      // 1 - psi
    double scc_value = 0.0;  // n(x+y), the 1-D subspace concentration value
    Classification classification = Classification::Strict;
    bool equality_warning = false;  // numerical equality without a geometric signature
};

struct CheckerOptions {
    double tol_eq = 1e-7;       // |1 - psi| below this triggers equality classification
    double tol_violate = 1e-7;  // psi above 1 + this is flagged Violated
    double tol_lin = 1e-6;      // profile linearity threshold for the classifier
    int resolution = 512;       // profile resolution used by the classifier
};

// Evaluates the condition for one unit direction. P must have its centroid at
// the origin (within 1e-9 * diameter) and contain the origin.
ConditionReport check_direction(const Polytope& P, const Vec& u,
                                const CheckerOptions& opt = {});

// One report per distinct facet-normal axis {u, -u}, sorted by ascending
// slack. include_axes appends extra directions (deduped against the axes).
std::vector<ConditionReport> check_all_facets(const Polytope& P, const CheckerOptions& opt = {},
                                              const std::vector<Vec>& include_axes = {});

// Geometric equality classifier: decides Prism vs Cone from the section-area
// profile along u. Preconditions as check_direction plus |1 - psi| <= tol_eq.
Classification classify_equality(const Polytope& P, const Vec& u, const CheckerOptions& opt = {},
                                 bool* warning = nullptr);

// psi - scc_value = (n+1)^(n-1) |x-y|^n >= 0: the strengthening over the 1-D
// subspace concentration bound.
double refinement_gap(const ConditionReport& report);

}  // namespace conevol
