#pragma once

#include "conevol/exact/rational_poly.hpp"

// Exact certification of the appendix inequalities: the f1/f2/g/h range
// bounds and the p1 -> p2 -> p3 -> p4 derivative chain behind the key ratio
// F/G >= 1, plus direct nonnegativity of F - G.

namespace conevol::exact {

enum class Method { ShiftExpansion, Sturm, DerivativeChain, Identity };
enum class Status { ProvenNonneg, ProvenIdentity, Failed };

const char* to_string(Method m);
const char* to_string(Status s);

struct Certificate {
    int n = 0;
    std::string target;
    Method method = Method::ShiftExpansion;
    Status status = Status::Failed;
    // witness data
    int shift_nonneg_coeffs = -1;  // count of (all) nonnegative shift coefficients
    int shift_total_coeffs = -1;
    int sturm_roots = -1;          // roots counted in (1, inf)
    std::vector<std::string> notes;

    bool proven() const { return status != Status::Failed; }
};

struct Lemma1Polys {
    RationalPoly f1, f2, g, h;
};

// f1 = t^n - n t + (n-1); f2 = (n-1) t^n - n t^(n-1) + 1;
// g = t^(2n) - n^2 t^(n+1) + (2n^2-2) t^n - n^2 t^(n-1) + 1;
// h = 2 t^(n+1) - n(n+1) t^2 + (2n^2-2) t - n(n-1).
Lemma1Polys lemma1_polys(int n);

// Nonnegativity of p on [1, inf): first tries the shift expansion p(1+s)
// (all coefficients >= 0), then an exact Sturm count of roots in (1, inf)
// combined with p(1) >= 0 and p(2) > 0. Failure is a status, not an error.
Certificate certify_nonneg_on_ray(const RationalPoly& p, const std::string& target, int n,
                                  bool allow_sturm = true);

// The long displayed polynomial whose nonnegativity is equivalent to
// F'/F <= G'/G. Requires n >= 3.
RationalPoly build_p1(int n);

struct ChainData {
    RationalPoly p2, p3, p4;
    std::vector<Rational> p2_derivs_at_1;  // orders 0..4 (all zero)
    std::vector<Rational> p3_derivs_at_1;  // orders 0..5
    Rational p4_slope;                     // the constant p4'
};

// p2 = p1''/t^(n-4), p3 = p2^(5)/t^(n-5), p4 = p3^(5)/t^(n-4); negative
// exponents multiply instead of divide. Divisibility failures throw.
ChainData chain_p2_p3_p4(int n);

// Reference closed forms for the chain values (exact rationals).
std::vector<Rational> reference_p3_derivs(int n);
Rational reference_p4_slope(int n);

struct FGPair {
    RationalPoly F, G;
};

// F = (t^n-1)^(2n) - n^2 t^(n-1) (t-1)^2 (t^n-1)^(2n-2);
// G = (t^(2n) - n t^(n+1) + n t^(n-1) - 1)^n.
FGPair build_FG(int n);

// psi0 = t^(2n) - n t^(n+1) + n t^(n-1) - 1 (the base of G).
RationalPoly build_psi0(int n);

// Exact identity G'F - F'G == n^2 t^(n-1) (t^n-1)^(2n-3) psi0^(n-1) p1.
bool verify_wronskian_factorization(int n);

enum class Lemma2Route { Chain, DirectFG, Both };

// Full verification of the key inequality for one n >= 3:
//  (a) chain identities reproduce the closed forms exactly,
//  (b) the descent p4' > 0 => p3 > 0 => p2 >= 0 => p1 >= 0,
//  (c) direct certify_nonneg_on_ray(F - G),
// filtered by the requested route. For test/fault-injection use, `tamper`
// (when nonzero) is added to the p1 coefficient of t^1 before verification.
Certificate verify_lemma2(int n, Lemma2Route route = Lemma2Route::Both,
                          const Rational& tamper = Rational(0));

// n = 2: F - G must be the zero polynomial, coefficientwise.
Certificate verify_n2_identity();

// Certificates for f1, f2, g, h plus the structural identities
// g' == n t^(n-2) h and h'' == 2 n (n+1) (t^(n-1) - 1).
std::vector<Certificate> verify_lemma1(int n, bool allow_sturm = true);

}  // namespace conevol::exact
