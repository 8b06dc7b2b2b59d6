#include "conevol/exact/rational_poly.hpp"

#include <sstream>

namespace conevol::exact {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::from_monomial(const Rational& c, int exponent) {
    if (exponent < 0) throw input_error("monomial exponent must be >= 0");
    if (c == 0) return {};
    std::vector<Rational> v(exponent + 1, Rational(0));
    v[exponent] = c;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::constant(const Rational& c) { return from_monomial(c, 0); }

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return Rational(0);
    return c_[exponent];
}

Rational RationalPoly::leading() const {
    if (is_zero()) return Rational(0);
    return c_.back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    std::vector<Rational> v = c_;
    for (Rational& x : v) x *= s;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::pow(unsigned e) const {
    RationalPoly r = constant(1);
    RationalPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::derivative(int order) const {
    RationalPoly r = *this;
    for (int i = 0; i < order; ++i) r = r.derivative();
    return r;
}

Rational RationalPoly::evaluate(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) {
        r *= x;
        r += c_[i];
    }
    return r;
}

RationalPoly RationalPoly::shift_by_monomial(int k) const {
    if (k <= 0) {
        std::vector<Rational> v(c_.size() - k, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i - k] = c_[i];
        return RationalPoly(std::move(v));
    }
    if (is_zero()) return {};
    for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0)
            throw input_error("shift_by_monomial: coefficient of t^" + std::to_string(i) +
                              " is nonzero; division by t^" + std::to_string(k) + " is not exact");
    if (static_cast<int>(c_.size()) <= k) return {};
    return RationalPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

RationalPoly RationalPoly::shifted_arg_plus_one() const {
    // repeated synthetic division by (t - 1): classic O(d^2) Taylor shift
    std::vector<Rational> a = c_;
    const int d = static_cast<int>(a.size());
    std::vector<Rational> out(d, Rational(0));
    for (int k = 0; k < d; ++k) {
        // divide a by (t - 1); remainder becomes the s^k coefficient
        for (int i = d - 2 - k; i >= 0; --i) a[i] += a[i + 1];
        out[k] = a[0];
        a.erase(a.begin());
    }
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class num_gcd(0), den_lcm(1);
    for (const Rational& c : c_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);  // positive since num_gcd > 0
    scale.canonicalize();
    return *this * scale;
}

RationalPoly RationalPoly::rem(const RationalPoly& divisor) const {
    if (divisor.is_zero()) throw input_error("polynomial division by zero");
    std::vector<Rational> r = c_;
    const int dd = divisor.degree();
    const Rational& lead = divisor.c_.back();
    while (static_cast<int>(r.size()) - 1 >= dd) {
        const Rational f = r.back() / lead;
        const int shift = static_cast<int>(r.size()) - 1 - dd;
        for (int i = 0; i <= dd; ++i) r[shift + i] -= f * divisor.c_[i];
        // the top term cancels exactly
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return RationalPoly(std::move(r));
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int sturm_roots_above(const RationalPoly& p, const Rational& a) {
    if (p.is_zero()) throw input_error("Sturm chain of the zero polynomial");
    // variation counting needs p(a) != 0: strip (t - a)^m first (the roots at
    // a itself are not in the open interval anyway)
    RationalPoly q = p;
    while (q.degree() > 0 && q.evaluate(a) == 0) {
        std::vector<Rational> c = q.coeffs();
        std::vector<Rational> div(c.size() - 1, Rational(0));
        Rational carry = c.back();
        for (size_t i = c.size() - 1; i-- > 0;) {
            div[i] = carry;
            carry = c[i] + carry * a;
        }
        q = RationalPoly(std::move(div));
    }
    std::vector<RationalPoly> chain;
    chain.push_back(q.primitive_part());
    RationalPoly d = q.derivative();
    if (!d.is_zero()) chain.push_back(d.primitive_part());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RationalPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) break;
        chain.push_back((r * Rational(-1)).primitive_part());
    }
    std::vector<int> at_a, at_inf;
    for (const RationalPoly& q : chain) {
        at_a.push_back(sign_of(q.evaluate(a)));
        at_inf.push_back(sign_of(q.leading()));
    }
    return variations(at_a) - variations(at_inf);
}

}  // namespace conevol::exact
