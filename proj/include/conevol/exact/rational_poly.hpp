#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "conevol/common.hpp"

// Exact univariate polynomial arithmetic over arbitrary-precision rationals.
// Coefficients are dense, indexed by exponent, with the leading coefficient
// kept nonzero (the zero polynomial is the empty coefficient list). No
// floating point enters this module.

namespace conevol::exact {

using Rational = mpq_class;

class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly from_monomial(const Rational& c, int exponent);
    static RationalPoly constant(const Rational& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int exponent) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rational& s) const;
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    RationalPoly pow(unsigned e) const;
    RationalPoly derivative() const;
    RationalPoly derivative(int order) const;
    Rational evaluate(const Rational& x) const;

    // p / t^k for k >= 0 (requires the k lowest coefficients to vanish,
    // otherwise throws input_error naming the offending exponent);
    // multiplication by t^(-k) for k < 0.
    RationalPoly shift_by_monomial(int k) const;

    // Taylor shift: coefficients of p(1 + s) as a polynomial in s.
    RationalPoly shifted_arg_plus_one() const;

    // Divides by the content (gcd of numerators / positive), keeping the sign
    // of the leading coefficient. Used to tame Sturm chains.
    RationalPoly primitive_part() const;

    // Euclidean division remainder.
    RationalPoly rem(const RationalPoly& divisor) const;

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rational> c_;  // c_[k] is the coefficient of t^k
};

// Number of distinct real roots in the open interval (a, +inf) by Sturm's
// theorem (sign variations at a minus at +inf).
int sturm_roots_above(const RationalPoly& p, const Rational& a);

}  // namespace conevol::exact
