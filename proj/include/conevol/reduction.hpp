#pragma once

#include "conevol/symmetrization.hpp"

// Step-3 machinery: replace a symmetrized profile by an equal-volume truncated
// cone through the family K_s, s in [0, 1], locate the centroid-balanced
// member, and verify the comparison chain that transfers the main inequality.

namespace conevol::reduction {

// Body of revolution with radius affine in height.
struct FrustumSpec {
    int dim = 0;
    double h_lo = 0.0, h_hi = 0.0;
    double r_lo = 0.0, r_hi = 0.0;  // radii at h_lo / h_hi

    FrustumSpec(int n, double h_lo_, double h_hi_, double r_lo_, double r_hi_);
    double height() const { return h_hi - h_lo; }
};

// omega_{n-1} * H * (r_hi^n - r_lo^n) / (n (r_hi - r_lo)), evaluated as the
// power sum so the cylinder case needs no branch.
double frustum_volume(const FrustumSpec& f);

// Centroid height: integral of h A(h) over the volume, closed form.
double centroid_u(const FrustumSpec& f);

// The enlarged-disk frustums K0 (bottom kept, top disk D0 grown) and K1
// (top kept, bottom disk D1 grown), each matching the profile's volume.
std::pair<FrustumSpec, FrustumSpec> build_d0_d1(const SliceProfile& profile);

// Member of the deformation family: top radius interpolates D0 -> top face,
// bottom radius solved under the volume constraint. s=0 gives K0, s=1 gives K1.
FrustumSpec family_member(const SliceProfile& profile, double s);

struct BalanceResult {
    double s_star = 0.5;
    FrustumSpec frustum;
    bool degenerate = false;  // constant family (profile already a cylinder)
};

// Bisection for the member with centroid_u == 0. Throws invariant_error when
// the endpoint sign claim c(K0).u >= 0 >= c(K1).u fails beyond tolerance.
BalanceResult find_balanced(const SliceProfile& profile);

struct CompareReport {
    double x_prime = 0.0, y_prime = 0.0;      // profile endpoint cone fractions
    double x_frustum = 0.0, y_frustum = 0.0;  // balanced-frustum fractions
    double psi_prime = 0.0, psi_frustum = 0.0;
    bool x_le = false, y_le = false, psi_le = false;
    bool degenerate = false;
    double s_star = 0.5;
};

// The monotone-transfer comparison between a centered profile and its
// balanced frustum.
CompareReport compare(const SliceProfile& profile);

}  // namespace conevol::reduction
