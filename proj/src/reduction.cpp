#include "conevol/reduction.hpp"

#include <cmath>

#include "conevol/truncated_cone.hpp"

namespace conevol::reduction {

namespace {

// binomial coefficients up to the ambient dimensions we use
double binom(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Deterministic bisection: sign change assumed, 200-iteration cap, stops on
// residual or relative interval width 1e-13.
template <typename F>
double bisect(F&& fn, double lo, double hi, double f_lo, double residual_tol) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if (std::abs(fm) <= residual_tol ||
            (hi - lo) <= 1e-13 * (std::abs(lo) + std::abs(hi) + 1.0))
            return mid;
        if ((fm > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

FrustumSpec::FrustumSpec(int n, double h_lo_, double h_hi_, double r_lo_, double r_hi_)
    : dim(n), h_lo(h_lo_), h_hi(h_hi_), r_lo(r_lo_), r_hi(r_hi_) {
    if (n < 2) throw input_error("dimension must be >= 2");
    if (!(h_lo < h_hi)) throw input_error("frustum heights must satisfy h_lo < h_hi");
    if (r_lo < 0.0 || r_hi < 0.0 || (r_lo == 0.0 && r_hi == 0.0))
        throw input_error("frustum radii must be nonnegative and not both zero");
}

double frustum_volume(const FrustumSpec& f) {
    const int n = f.dim;
    // (r_hi^n - r_lo^n)/(r_hi - r_lo) = sum_k r_hi^k r_lo^(n-1-k)
    double ps = 0.0;
    for (int k = 0; k < n; ++k)
        ps += std::pow(f.r_hi, k) * std::pow(f.r_lo, n - 1 - k);
    return unit_ball_volume(n - 1) * f.height() * ps / n;
}

double centroid_u(const FrustumSpec& f) {
    const int n = f.dim;
    const double H = f.height();
    const double d = f.r_hi - f.r_lo;
    // r(h)^(n-1) expanded binomially in s = (h - h_lo)/H
    double num = 0.0, den = 0.0;
    for (int k = 0; k <= n - 1; ++k) {
        const double c = binom(n - 1, k) * std::pow(f.r_lo, n - 1 - k) * std::pow(d, k);
        num += c * (f.h_lo / (k + 1) + H / (k + 2));
        den += c / (k + 1);
    }
    return num / den;
}

std::pair<FrustumSpec, FrustumSpec> build_d0_d1(const SliceProfile& prof) {
    const double V = prof.volume();
    if (!(V > 0.0)) throw input_error("profile volume must be positive");
    const int n = prof.dim;
    const double omega = unit_ball_volume(n - 1);
    const double r_bot = std::pow(prof.areas.front() / omega, 1.0 / (n - 1));
    const double r_top = std::pow(prof.areas.back() / omega, 1.0 / (n - 1));

    auto grow = [&](double fixed_r, bool fixed_is_bottom) {
        auto vol_of = [&](double r) {
            if (fixed_r == 0.0 && r == 0.0) return -V;  // degenerate segment
            FrustumSpec f(n, prof.t_lo, prof.t_hi, fixed_is_bottom ? fixed_r : r,
                          fixed_is_bottom ? r : fixed_r);
            return frustum_volume(f) - V;
        };
        double lo = fixed_is_bottom ? r_top : r_bot;
        double hi = std::max(lo, 1e-9);
        while (vol_of(hi) < 0.0) hi *= 2.0;
        const double r = bisect(vol_of, lo, hi, vol_of(lo), 1e-12 * V);
        return FrustumSpec(n, prof.t_lo, prof.t_hi, fixed_is_bottom ? fixed_r : r,
                           fixed_is_bottom ? r : fixed_r);
    };
    return {grow(r_bot, true), grow(r_top, false)};
}

FrustumSpec family_member(const SliceProfile& prof, double s) {
    if (s < 0.0 || s > 1.0) throw input_error("family parameter must lie in [0, 1]");
    const double V = prof.volume();
    const int n = prof.dim;
    const double omega = unit_ball_volume(n - 1);
    const double r_bot = std::pow(prof.areas.front() / omega, 1.0 / (n - 1));
    const double r_top = std::pow(prof.areas.back() / omega, 1.0 / (n - 1));
    auto [K0, K1] = build_d0_d1(prof);
    const double top = (1.0 - s) * K0.r_hi + s * r_top;

    auto vol_of = [&](double r) {
        if (top == 0.0 && r == 0.0) return -V;  // degenerate segment
        return frustum_volume(FrustumSpec(n, prof.t_lo, prof.t_hi, r, top)) - V;
    };
    double lo = r_bot, hi = std::max(K1.r_lo, r_bot) + 1e-9;
    while (vol_of(hi) < 0.0) hi *= 2.0;
    const double f_lo = vol_of(lo);
    double r;
    if (f_lo >= 0.0) {
        // volume already met at the profile's own bottom radius (s = 0 case)
        r = lo;
    } else {
        r = bisect(vol_of, lo, hi, f_lo, 1e-12 * V);
    }
    return FrustumSpec(n, prof.t_lo, prof.t_hi, r, top);
}

BalanceResult find_balanced(const SliceProfile& prof) {
    const double H = prof.span();
    if (std::abs(prof.first_moment()) > 1e-6 * H * prof.volume())
        throw input_error("find_balanced needs a profile of a centered body");
    auto [K0, K1] = build_d0_d1(prof);
    const double tol = 1e-9 * H;
    const double c0 = centroid_u(K0);
    const double c1 = centroid_u(K1);
    if (c0 < -tol || c1 > tol)
        throw invariant_error("endpoint centroid signs violate c(K0).u >= 0 >= c(K1).u");

    if (std::abs(c0) <= tol && std::abs(c1) <= tol) {
        // constant family: the profile is already volume-matched by a cylinder
        return {0.5, family_member(prof, 0.5), true};
    }
    auto c_of = [&](double s) { return centroid_u(family_member(prof, s)); };
    const double s_star = bisect(c_of, 0.0, 1.0, c0, tol);
    return {s_star, family_member(prof, s_star), false};
}

CompareReport compare(const SliceProfile& prof) {
    const BalanceResult bal = find_balanced(prof);
    const int n = prof.dim;
    const double V = prof.volume();
    const double omega = unit_ball_volume(n - 1);

    CompareReport rep;
    rep.degenerate = bal.degenerate;
    rep.s_star = bal.s_star;
    // signed heights: h(u) = t_hi > 0 > t_lo = -h(-u) for a centered profile
    rep.x_prime = prof.t_hi * prof.areas.back() / (n * V);
    rep.y_prime = -prof.t_lo * prof.areas.front() / (n * V);
    const double vf = frustum_volume(bal.frustum);
    rep.x_frustum = bal.frustum.h_hi * omega * std::pow(bal.frustum.r_hi, n - 1) / (n * vf);
    rep.y_frustum = -bal.frustum.h_lo * omega * std::pow(bal.frustum.r_lo, n - 1) / (n * vf);
    rep.psi_prime = cone::psi(rep.x_prime, rep.y_prime, n);
    rep.psi_frustum = cone::psi(rep.x_frustum, rep.y_frustum, n);
    const double tol = 1e-9;
    rep.x_le = rep.x_prime <= rep.x_frustum + tol;
    rep.y_le = rep.y_prime <= rep.y_frustum + tol;
    rep.psi_le = rep.psi_prime <= rep.psi_frustum + tol;
    return rep;
}

}  // namespace conevol::reduction
