#include "conevol/truncated_cone.hpp"

#include <cmath>
#include <limits>

namespace conevol::cone {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// geometric sum 1 + q + ... + q^(m-1)
double geom_sum(double q, int m) {
    double s = 0.0, p = 1.0;
    for (int k = 0; k < m; ++k) {
        s += p;
        p *= q;
    }
    return s;
}

double int_pow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

TruncatedConeParams::TruncatedConeParams(int n, double t) : dim(n), ratio(t) {
    if (n < 2) throw input_error("dimension must be >= 2");
    if (!(t >= 1.0))  // NaN and t < 1 both rejected
        throw input_error("radius ratio must satisfy t >= 1 (or +inf)");
}

std::pair<double, double> xy_of_ratio(const TruncatedConeParams& params) {
    const int n = params.dim;
    const double t = params.ratio;
    if (std::isinf(t)) return {1.0 / (n + 1), 0.0};
    if (t <= 2.0) {
        // Factored forms with double roots at t=1 removed:
        //   x = t^(n-1) S1 / ((n+1) gs^2),  S1 = sum_k (n-k) t^k
        //   y = S2 / ((n+1) gs^2),          S2 = sum_k (k+1) t^k
        // valid and cancellation-free at t = 1 itself.
        double s1 = 0.0, s2 = 0.0, p = 1.0;
        for (int k = 0; k < n; ++k) {
            s1 += (n - k) * p;
            s2 += (k + 1) * p;
            p *= t;
        }
        const double gs2 = geom_sum(t, n) * geom_sum(t, n);
        return {int_pow(t, n - 1) * s1 / ((n + 1) * gs2), s2 / ((n + 1) * gs2)};
    }
    // reciprocal form for large t: divide everything by t^(2n)
    const double w = 1.0 / t;
    const double wn = int_pow(w, n);
    const double den = (n + 1) * (1.0 - wn) * (1.0 - wn);
    const double x = (1.0 - (n + 1) * wn + n * wn * w) / den;
    const double y = (n * int_pow(w, n - 1) - (n + 1) * wn + int_pow(w, 2 * n)) / den;
    return {x, y};
}

std::pair<double, double> volume_and_centroid(const TruncatedConeParams& params) {
    const int n = params.dim;
    const double t = params.ratio;
    if (!(t > 1.0) || std::isinf(t))
        throw input_error("volume_and_centroid needs 1 < t < +inf");
    const double v = (t - 1.0) * geom_sum(t, n) / n;
    const double c = n * geom_sum(t, n + 1) / ((n + 1) * geom_sum(t, n));
    return {v, c};
}

double psi(double x, double y, int n) {
    if (n < 2) throw input_error("dimension must be >= 2");
    const double d = std::abs(x - y);
    return n * (x + y) + int_pow(static_cast<double>(n + 1), n - 1) * int_pow(d, n);
}

std::pair<double, double> psi_gradient(double x, double y, int n) {
    if (n < 2) throw input_error("dimension must be >= 2");
    if (x == y) return {static_cast<double>(n), static_cast<double>(n)};
    const double d = x - y;
    const double sgn = d > 0.0 ? 1.0 : -1.0;
    const double term =
        n * int_pow(static_cast<double>(n + 1), n - 1) * sgn * int_pow(std::abs(d), n - 1);
    return {n + term, n - term};
}

RangeReport range_check(const TruncatedConeParams& params) {
    const auto [x, y] = xy_of_ratio(params);
    const int n = params.dim;
    RangeReport r;
    r.x = x;
    r.y = y;
    r.x_slack = 1.0 / (n + 1) - x;
    r.y_slack = 1.0 / (n + 1) - y;
    r.sum_slack = 1.0 / n - (x + y);
    const double tol = 1e-12;
    r.x_ok = r.x_slack >= -tol;
    r.y_ok = r.y_slack >= -tol;
    r.sum_ok = r.sum_slack >= -tol;
    return r;
}

double key_ratio(int n, double t) {
    if (n < 2) throw input_error("dimension must be >= 2");
    if (std::isinf(t)) return 1.0;
    if (!(t > 1.0)) throw input_error("key_ratio needs t > 1");
    // Fully factored form in w = 1/t. Writing gs(q,m) for 1+q+...+q^(m-1):
    //   F t^(-2n^2) = (1-w^n)^(2n-2) (1-w)^2 (S - n w^((n-1)/2))(S + n w^((n-1)/2))
    //     with S = gs(w,n) and
    //     S - n w^((n-1)/2) = (1-sqw)^2 Q,  Q = sum_{0<=k<(n-1)/2} w^k gs(sqw, n-1-2k)^2
    //   G t^(-2n^2) = ((1-w)^3 Sigma)^n,
    //     Sigma = sum_{k=0}^{n-2} w^k gs(w,n-k) gs(w,n-1-k)
    // so F/G = (1-w)^(2-n) gs(w,n)^(2n-2) Q (S + n w^((n-1)/2))
    //          / ((1+sqw)^2 Sigma^n).
    // Every factor is a sum of nonnegative terms: no cancellation anywhere.
    const double w = 1.0 / t;
    const double sqw = std::sqrt(w);

    double Q = 0.0, wk = 1.0;
    for (int k = 0; 2 * k < n - 1; ++k) {
        const double g = geom_sum(sqw, n - 1 - 2 * k);
        Q += wk * g * g;
        wk *= w;
    }
    const double S = geom_sum(w, n);
    const double Splus = S + n * int_pow(sqw, n - 1);

    double Sigma = 0.0;
    wk = 1.0;
    for (int k = 0; k <= n - 2; ++k) {
        Sigma += wk * geom_sum(w, n - k) * geom_sum(w, n - 1 - k);
        wk *= w;
    }
    const double one_m_w = (t - 1.0) / t;
    const double gsn = geom_sum(w, n);
    return std::pow(one_m_w, 2 - n) * std::pow(gsn, 2 * n - 2) * Q * Splus /
           ((1.0 + sqw) * (1.0 + sqw) * std::pow(Sigma, n));
}

AbForm ab_form(int n, double t) {
    if (n < 2) throw input_error("dimension must be >= 2");
    AbForm r;
    if (std::isinf(t)) {
        r.A = 0.0;
        r.B = 0.0;
        r.lhs = 1.0;
        return r;
    }
    if (!(t > 1.0)) throw input_error("ab_form needs t > 1");
    if (t <= 2.0) {
        // (t^n - 1) = (t-1) gs(t,n); the cubic root of the B-numerator at t=1
        // is factored the same way as in key_ratio.
        const double gs = geom_sum(t, n);
        r.A = n * int_pow(t, n - 1) / (gs * gs);
        double Sigma = 0.0, tk = 1.0;
        for (int k = 0; k <= n - 2; ++k) {
            Sigma += tk * geom_sum(t, n - k) * geom_sum(t, n - 1 - k);
            tk *= t;
        }
        const double one_minus_b = (t - 1.0) * Sigma / (gs * gs);
        r.B = 1.0 - one_minus_b;
        r.lhs = n * r.A + int_pow(one_minus_b, n);
        return r;
    }
    const double w = 1.0 / t;
    const double wn = int_pow(w, n);
    const double den = (1.0 - wn) * (1.0 - wn);
    r.A = n * int_pow(w, n - 1) * (1.0 - w) * (1.0 - w) / den;
    const double g_scaled = 1.0 - n * int_pow(w, n - 1) + n * wn * w - wn * wn;
    const double one_minus_b = g_scaled / den;
    r.B = 1.0 - one_minus_b;
    r.lhs = n * r.A + int_pow(one_minus_b, n);
    return r;
}

}  // namespace conevol::cone
