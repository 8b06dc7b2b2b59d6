#include "conevol/generators.hpp"

#include <cmath>

#include "conevol/linalg.hpp"

namespace conevol::gen {

namespace la = linalg;

Rng::Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

uint64_t Rng::next_u64() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

Vec Rng::normal_vec(int dim) {
    Vec v(dim);
    for (double& x : v) x = normal();
    return v;
}

Polytope cube(int dim, double a) {
    std::vector<std::pair<Vec, double>> hs;
    for (int i = 0; i < dim; ++i) {
        Vec n(dim, 0.0);
        n[i] = 1.0;
        hs.emplace_back(n, a);
        n[i] = -1.0;
        hs.emplace_back(n, a);
    }
    return Polytope::from_halfspaces(dim, hs);
}

Polytope box(const std::vector<std::pair<double, double>>& intervals) {
    const int dim = static_cast<int>(intervals.size());
    std::vector<std::pair<Vec, double>> hs;
    for (int i = 0; i < dim; ++i) {
        Vec n(dim, 0.0);
        n[i] = 1.0;
        hs.emplace_back(n, intervals[i].second);
        n[i] = -1.0;
        hs.emplace_back(n, -intervals[i].first);
    }
    return Polytope::from_halfspaces(dim, hs);
}

Polytope standard_simplex(int dim) {
    std::vector<Vec> pts;
    pts.push_back(Vec(dim, 0.0));
    for (int i = 0; i < dim; ++i) {
        Vec e(dim, 0.0);
        e[i] = 1.0;
        pts.push_back(e);
    }
    return Polytope::from_vertices(dim, pts);
}

Polytope regular_tetrahedron() {
    const std::vector<Vec> pts = {
        {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    return Polytope::from_vertices(3, pts);
}

namespace {

// corners of the (n-1)-dim base box at e_n-height 0
std::vector<Vec> base_corners(int dim, double half_width) {
    std::vector<Vec> pts;
    const int m = dim - 1;
    for (int mask = 0; mask < (1 << m); ++mask) {
        Vec p(dim, 0.0);
        for (int i = 0; i < m; ++i) p[i] = (mask >> i & 1) ? half_width : -half_width;
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

Polytope prism(int dim, const Vec& shift, double base_half_width) {
    if (static_cast<int>(shift.size()) != dim) throw input_error("shift of wrong dimension");
    if (std::abs(shift[dim - 1]) < 1e-9)
        throw input_error("prism shift must leave the base hyperplane");
    std::vector<Vec> pts = base_corners(dim, base_half_width);
    const size_t base_count = pts.size();
    for (size_t i = 0; i < base_count; ++i) pts.push_back(la::add(pts[i], shift));
    return Polytope::from_vertices(dim, pts);
}

Polytope cone_body(int dim, const Vec& apex, double base_half_width) {
    if (static_cast<int>(apex.size()) != dim) throw input_error("apex of wrong dimension");
    if (std::abs(apex[dim - 1]) < 1e-9)
        throw input_error("cone apex must leave the base hyperplane");
    std::vector<Vec> pts = base_corners(dim, base_half_width);
    pts.push_back(apex);
    return Polytope::from_vertices(dim, pts);
}

Polytope random_hull(int dim, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i < 4 * dim; ++i) pts.push_back(rng.normal_vec(dim));
        try {
            return Polytope::from_vertices(dim, pts);
        } catch (const construction_error&) {
            // astronomically unlikely degenerate draw; redraw
        }
    }
    throw invariant_error("random_hull failed to produce a full-dimensional body");
}

namespace {

Polytope perturb_vertices(const Polytope& P, Rng& rng, double amplitude) {
    std::vector<Vec> pts = P.vertices();
    for (Vec& p : pts)
        for (double& c : p) c += rng.uniform(-amplitude, amplitude);
    return Polytope::from_vertices(P.dim(), pts);
}

}  // namespace

Polytope perturbed_prism(int dim, Rng& rng, double amplitude) {
    Vec shift(dim, 0.0);
    shift[dim - 1] = 2.0;
    for (int i = 0; i + 1 < dim; ++i) shift[i] = rng.uniform(-0.5, 0.5);
    return perturb_vertices(prism(dim, shift), rng, amplitude);
}

Polytope perturbed_cone(int dim, Rng& rng, double amplitude) {
    Vec apex(dim, 0.0);
    apex[dim - 1] = 2.0;
    for (int i = 0; i + 1 < dim; ++i) apex[i] = rng.uniform(-0.5, 0.5);
    return perturb_vertices(cone_body(dim, apex), rng, amplitude);
}

std::vector<Vec> random_rotation(int dim, Rng& rng) {
    while (true) {
        std::vector<Vec> rows;
        for (int i = 0; i < dim; ++i) rows.push_back(rng.normal_vec(dim));
        auto basis = la::orthonormal_basis(rows, 1e-6);
        if (static_cast<int>(basis.size()) == dim) return basis;
    }
}

}  // namespace conevol::gen
