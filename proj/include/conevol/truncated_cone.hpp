#pragma once

#include "conevol/common.hpp"

// Closed-form analysis of truncated cones (bodies of revolution with radius
// affine in height). The base-radius ratio t lives in [1, +inf]; t = 1 is a
// right cylinder, t = +inf a right circular cone.

namespace conevol::cone {

struct TruncatedConeParams {
    int dim = 3;
    double ratio = 1.0;  // t >= 1, +inf admitted

    TruncatedConeParams(int n, double t);
};

// Cone-volume fractions (x, y) = (mu(u)/V, mu(-u)/V) of the centered frustum
// with radii 1 and t. Exact limits at t = 1 and t = +inf.
std::pair<double, double> xy_of_ratio(const TruncatedConeParams& params);

// V/omega_{n-1} = (t^n - 1)/n and the centroid height of the frustum in the
// proof's [1, t] coordinates. Requires 1 < t < +inf.
std::pair<double, double> volume_and_centroid(const TruncatedConeParams& params);

// Psi(x, y) = n (x + y) + (n+1)^(n-1) |x - y|^n.
double psi(double x, double y, int n);

// Closed-form gradient of Psi; returns (n, n) on the diagonal x == y.
std::pair<double, double> psi_gradient(double x, double y, int n);

struct RangeReport {
    double x = 0.0, y = 0.0;
    double x_slack = 0.0;    // 1/(n+1) - x
    double y_slack = 0.0;    // 1/(n+1) - y
    double sum_slack = 0.0;  // 1/n - (x+y)
    bool x_ok = false, y_ok = false, sum_ok = false;
};

// The three range bounds x <= 1/(n+1), y <= 1/(n+1), x + y <= 1/n.
RangeReport range_check(const TruncatedConeParams& params);

// F(t)/G(t) with F = (t^n-1)^(2n) - n^2 t^(n-1) (t-1)^2 (t^n-1)^(2n-2) and
// G = (t^(2n) - n t^(n+1) + n t^(n-1) - 1)^n, evaluated via a factored form
// that has no cancellation or overflow for any t > 1 (t = +inf gives 1).
double key_ratio(int n, double t);

struct AbForm {
    double A = 0.0, B = 0.0, lhs = 0.0;  // lhs = n A + (1-B)^n
};

// The (A, B) reformulation; lhs <= 1 is equivalent to psi <= 1 via
// lhs = (n+1) psi - n.
AbForm ab_form(int n, double t);

}  // namespace conevol::cone
