#include "conevol/symmetrization.hpp"

#include <algorithm>
#include <cmath>

#include "conevol/linalg.hpp"
#include "conevol/measures.hpp"

namespace conevol {

namespace la = linalg;

double unit_ball_volume(int k) {
    if (k < 1) throw input_error("unit_ball_volume needs k >= 1");
    return std::pow(M_PI, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
}

double SliceProfile::integrate(const std::function<double(double, double)>& f) const {
    double total = 0.0;
    for (size_t p = 0; p + 1 < panel_starts.size(); ++p) {
        const int lo = panel_starts[p], hi = panel_starts[p + 1];
        // even number of uniform subintervals by construction
        for (int i = lo; i + 2 <= hi; i += 2) {
            const double h = ts[i + 1] - ts[i];
            total += h / 3.0 *
                     (f(ts[i], areas[i]) + 4.0 * f(ts[i + 1], areas[i + 1]) +
                      f(ts[i + 2], areas[i + 2]));
        }
    }
    return total;
}

double SliceProfile::volume() const {
    return integrate([](double, double a) { return a; });
}

double SliceProfile::first_moment() const {
    return integrate([](double t, double a) { return t * a; });
}

double SliceProfile::area_at(double t) const {
    if (t < t_lo - 1e-12 * (1.0 + span()) || t > t_hi + 1e-12 * (1.0 + span()))
        throw input_error("t outside the profile range");
    const auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.begin()) return areas.front();
    if (it == ts.end()) return areas.back();
    const size_t j = it - ts.begin();
    const double t1 = ts[j - 1], t2 = ts[j];
    const double lam = (t - t1) / (t2 - t1);
    return (1.0 - lam) * areas[j - 1] + lam * areas[j];
}

namespace {

// Panel layout shared by the polytope and analytic builders: breakpoints plus
// an even uniform subdivision of each interval, ~resolution subintervals total.
SliceProfile build_from_breakpoints(int dim, Vec direction, double t_lo, double t_hi,
                                    std::vector<double> breakpoints, int resolution,
                                    const std::function<double(double)>& area_fn) {
    if (resolution < 16) throw input_error("resolution must be >= 16");
    SliceProfile prof;
    prof.dim = dim;
    prof.direction = std::move(direction);
    prof.t_lo = t_lo;
    prof.t_hi = t_hi;

    std::vector<double> bps;
    bps.push_back(t_lo);
    std::sort(breakpoints.begin(), breakpoints.end());
    const double span = t_hi - t_lo;
    for (double b : breakpoints)
        if (b > bps.back() + 1e-12 * span && b < t_hi - 1e-12 * span) bps.push_back(b);
    bps.push_back(t_hi);

    prof.ts.push_back(t_lo);
    prof.areas.push_back(area_fn(t_lo));
    for (size_t k = 0; k + 1 < bps.size(); ++k) {
        const double a = bps[k], b = bps[k + 1];
        int m = static_cast<int>(std::lround(resolution * (b - a) / span));
        m = std::max(2, m + (m % 2));  // even, at least 2
        prof.panel_starts.push_back(static_cast<int>(prof.ts.size()) - 1);
        for (int i = 1; i <= m; ++i) {
            const double t = (i == m) ? b : a + (b - a) * i / m;
            prof.ts.push_back(t);
            prof.areas.push_back(area_fn(t));
        }
    }
    prof.panel_starts.push_back(static_cast<int>(prof.ts.size()) - 1);
    return prof;
}

}  // namespace

SliceProfile profile(const Polytope& P, const Vec& u, int resolution) {
    const Vec un = la::normalized(u);
    const double t_hi = P.support(un);
    const double t_lo = -P.support(la::scale(un, -1.0));
    std::vector<double> bps;
    for (const Vec& v : P.vertices()) bps.push_back(la::dot(un, v));
    return build_from_breakpoints(P.dim(), un, t_lo, t_hi, std::move(bps), resolution,
                                  [&](double t) { return P.slice_area(un, t); });
}

SliceProfile frustum_profile(int dim, double h_lo, double h_hi, double r_lo, double r_hi,
                             int resolution) {
    if (!(h_lo < h_hi)) throw input_error("frustum heights must satisfy h_lo < h_hi");
    const double omega = unit_ball_volume(dim - 1);
    Vec axis(dim, 0.0);
    axis[dim - 1] = 1.0;
    return build_from_breakpoints(dim, axis, h_lo, h_hi, {}, resolution, [=](double h) {
        const double r = r_lo + (r_hi - r_lo) * (h - h_lo) / (h_hi - h_lo);
        return omega * std::pow(r, dim - 1);
    });
}

SliceProfile ball_profile(int dim, int resolution) {
    const double omega = unit_ball_volume(dim - 1);
    Vec axis(dim, 0.0);
    axis[dim - 1] = 1.0;
    return build_from_breakpoints(dim, axis, -1.0, 1.0, {}, resolution, [=](double t) {
        return omega * std::pow(std::max(0.0, 1.0 - t * t), (dim - 1) / 2.0);
    });
}

double schwarz_radius(const SliceProfile& prof, double t) {
    const double a = prof.area_at(t);  // throws outside range
    return std::pow(a / unit_ball_volume(prof.dim - 1), 1.0 / (prof.dim - 1));
}

Prop1Report verify_prop1(const Polytope& P, const Vec& u, int resolution) {
    const double centroid_off = la::norm(P.centroid());
    if (centroid_off > 1e-9 * P.diameter())
        throw input_error("verify_prop1 needs the centroid at the origin (offset " +
                          std::to_string(centroid_off) + ")");
    if (!P.origin_interior()) throw domain_error("origin must be interior");

    const SliceProfile prof = profile(P, u, resolution);
    Prop1Report r;
    r.volume_body = P.volume();
    r.volume_profile = prof.volume();
    r.volume_abs_dev = std::abs(r.volume_body - r.volume_profile);
    r.volume_rel_dev = r.volume_abs_dev / r.volume_body;

    r.centroid_u = prof.first_moment() / r.volume_body;
    r.centroid_rel_dev = std::abs(r.centroid_u) / P.diameter();

    const DiscreteMeasure cvm = cone_volume_measure(P);
    const int n = P.dim();
    r.top_mass_profile = prof.t_hi * prof.areas.back() / n;
    r.bot_mass_profile = -prof.t_lo * prof.areas.front() / n;
    r.top_mass_measure = mass_at(cvm, prof.direction);
    r.bot_mass_measure = mass_at(cvm, la::scale(prof.direction, -1.0));
    auto rel = [](double a, double b) {
        const double ref = std::max(std::abs(a), std::abs(b));
        return ref == 0.0 ? 0.0 : std::abs(a - b) / ref;
    };
    r.top_rel_dev = rel(r.top_mass_profile, r.top_mass_measure);
    r.bot_rel_dev = rel(r.bot_mass_profile, r.bot_mass_measure);
    return r;
}

ConcavityReport concavity_defect(const SliceProfile& prof) {
    const int n = prof.dim;
    const double span = prof.span();
    std::vector<double> r(prof.ts.size());
    double r_max = 0.0;
    for (size_t i = 0; i < prof.ts.size(); ++i) {
        r[i] = std::pow(std::max(0.0, prof.areas[i]), 1.0 / (n - 1));
        r_max = std::max(r_max, r[i]);
    }
    ConcavityReport rep;
    if (r_max == 0.0) return rep;

    // Second differences on a decimated stencil: raw spacing would amplify
    // slice-area rounding by (span/h)^2 past the reporting tolerance, so the
    // stencil is coarsened to span/256 with breakpoints always included.
    const double min_step = span / 256.0;
    std::vector<size_t> idx;
    size_t bp = 0;
    for (size_t i = 0; i < prof.ts.size(); ++i) {
        bool keep = idx.empty() || prof.ts[i] >= prof.ts[idx.back()] + min_step ||
                    i + 1 == prof.ts.size();
        while (bp < prof.panel_starts.size() &&
               static_cast<size_t>(prof.panel_starts[bp]) < i)
            ++bp;
        if (bp < prof.panel_starts.size() && static_cast<size_t>(prof.panel_starts[bp]) == i)
            keep = true;
        if (keep && (idx.empty() || idx.back() != i)) idx.push_back(i);
    }
    double worst = 0.0;
    for (size_t k = 1; k + 1 < idx.size(); ++k) {
        const size_t i0 = idx[k - 1], i1 = idx[k], i2 = idx[k + 1];
        const double h1 = prof.ts[i1] - prof.ts[i0];
        const double h2 = prof.ts[i2] - prof.ts[i1];
        if (h1 <= 0.0 || h2 <= 0.0) continue;
        // nonuniform second difference; positive = convexity violation
        const double d2 = 2.0 * (r[i0] * h2 - r[i1] * (h1 + h2) + r[i2] * h1) /
                          (h1 * h2 * (h1 + h2));
        worst = std::max(worst, d2);
    }
    rep.concavity_defect = worst / (r_max / (span * span));

    double lin = 0.0;
    const double r0 = r.front(), r1 = r.back();
    for (size_t i = 0; i < prof.ts.size(); ++i) {
        const double lam = (prof.ts[i] - prof.t_lo) / span;
        lin = std::max(lin, std::abs(r[i] - ((1.0 - lam) * r0 + lam * r1)));
    }
    rep.linearity_defect = lin / r_max;
    return rep;
}

}  // namespace conevol
