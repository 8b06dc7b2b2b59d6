#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "conevol/common.hpp"
#include "conevol/generators.hpp"

// Shared test oracles. Everything in here is deliberately independent of the
// library paths it is used to check: plain Simpson, shoelace on sorted
// angles, rejection-sampled volume.

namespace testsup {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// composite Simpson with m (even) subintervals
inline double simpson(const std::function<double(double)>& f, double a, double b, int m) {
    double s = f(a) + f(b);
    const double h = (b - a) / m;
    for (int i = 1; i < m; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// area of the convex hull of 2D points via angular sort + shoelace
inline double hull_area_2d(std::vector<std::array<double, 2>> pts) {
    double cx = 0, cy = 0;
    for (auto& p : pts) {
        cx += p[0];
        cy += p[1];
    }
    cx /= pts.size();
    cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
    });
    double area2 = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        area2 += p[0] * q[1] - q[0] * p[1];
    }
    return std::abs(area2) / 2.0;
}

// Monte-Carlo volume of a polytope by halfspace membership over the bounding box
inline double monte_carlo_volume(const conevol::Polytope& P, int samples, uint64_t seed,
                                 double* sigma_out = nullptr) {
    const int n = P.dim();
    conevol::Vec lo(n, 1e300), hi(n, -1e300);
    for (const auto& v : P.vertices())
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    double box = 1.0;
    for (int i = 0; i < n; ++i) box *= hi[i] - lo[i];
    conevol::gen::Rng rng(seed);
    int hits = 0;
    conevol::Vec x(n);
    for (int s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(lo[i], hi[i]);
        bool inside = true;
        for (const auto& f : P.facets()) {
            double d = -f.offset;
            for (int i = 0; i < n; ++i) d += f.normal[i] * x[i];
            if (d > 0) {
                inside = false;
                break;
            }
        }
        if (inside) ++hits;
    }
    const double p = static_cast<double>(hits) / samples;
    if (sigma_out) *sigma_out = box * std::sqrt(p * (1.0 - p) / samples);
    return box * p;
}

}  // namespace testsup
