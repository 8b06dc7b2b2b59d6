#include "conevol/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "conevol/linalg.hpp"

namespace conevol {

namespace la = linalg;

namespace {

double max_norm(const std::vector<Vec>& pts) {
    double m = 0.0;
    for (const Vec& p : pts) m = std::max(m, la::norm(p));
    return m;
}

Vec mean_point(const std::vector<Vec>& pts) {
    Vec m(pts[0].size(), 0.0);
    for (const Vec& p : pts) m = la::add(m, p);
    return la::scale(m, 1.0 / static_cast<double>(pts.size()));
}

std::vector<Vec> dedupe_points(const std::vector<Vec>& pts, double tol) {
    std::vector<Vec> out;
    for (const Vec& p : pts) {
        bool dup = false;
        for (const Vec& q : out)
            if (la::dist(p, q) <= tol * (1.0 + la::norm(p))) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(p);
    }
    return out;
}

// Convex polygon area + centroid from points in convex position (any order).
std::pair<double, Vec> polygon_measure(const std::vector<Vec>& pts) {
    const Vec c = mean_point(pts);
    struct Ang {
        double a, r;
        int i;
    };
    std::vector<Ang> order;
    order.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        const double dx = pts[i][0] - c[0], dy = pts[i][1] - c[1];
        order.push_back({std::atan2(dy, dx), dx * dx + dy * dy, static_cast<int>(i)});
    }
    std::sort(order.begin(), order.end(), [](const Ang& a, const Ang& b) {
        return a.a < b.a || (a.a == b.a && a.r < b.r);
    });
    double area2 = 0.0, cx = 0.0, cy = 0.0;
    for (size_t k = 0; k < order.size(); ++k) {
        const Vec& p = pts[order[k].i];
        const Vec& q = pts[order[(k + 1) % order.size()].i];
        const double cross = (p[0] - c[0]) * (q[1] - c[1]) - (q[0] - c[0]) * (p[1] - c[1]);
        area2 += cross;
        cx += cross * (p[0] + q[0] + c[0]);
        cy += cross * (p[1] + q[1] + c[1]);
    }
    const double area = std::abs(area2) / 2.0;
    if (area <= 0.0) return {0.0, c};
    return {area, Vec{cx / (3.0 * area2), cy / (3.0 * area2)}};
}

// Enumerates d-subsets of {0..m-1} via an index vector.
struct SubsetIter {
    int m, d;
    std::vector<int> idx;
    bool done = false;
    SubsetIter(int m_, int d_) : m(m_), d(d_), idx(d_) {
        if (d > m) {
            done = true;
            return;
        }
        std::iota(idx.begin(), idx.end(), 0);
    }
    void next() {
        int i = d - 1;
        while (i >= 0 && idx[i] == m - d + i) --i;
        if (i < 0) {
            done = true;
            return;
        }
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
};

}  // namespace

namespace hull {

std::vector<HFacet> facets(const std::vector<Vec>& points, int d) {
    const int m = static_cast<int>(points.size());
    const double scale = 1.0 + max_norm(points);
    const double tol = 1e-9 * scale;
    std::vector<HFacet> out;
    // Bitmasks of facet membership let us skip subsets lying inside an
    // already-found facet (the dominant cost for facet-rich hulls).
    std::vector<uint64_t> masks_lo, masks_hi;
    const bool use_masks = m <= 128;

    std::vector<Vec> sub(d);
    for (SubsetIter it(m, d); !it.done; it.next()) {
        if (use_masks) {
            uint64_t lo = 0, hi = 0;
            for (int i : it.idx)
                (i < 64 ? lo : hi) |= (uint64_t{1} << (i & 63));
            bool covered = false;
            for (size_t f = 0; f < masks_lo.size(); ++f)
                if ((lo & masks_lo[f]) == lo && (hi & masks_hi[f]) == hi) {
                    covered = true;
                    break;
                }
            if (covered) continue;
        }
        for (int i = 0; i < d; ++i) sub[i] = points[it.idx[i]];
        auto plane = la::hyperplane_through(sub);
        if (!plane) continue;
        Vec nrm = plane->first;
        double off = plane->second;
        // supporting side check
        bool above = false, below = false;
        for (const Vec& p : points) {
            const double s = la::dot(nrm, p) - off;
            if (s > tol) above = true;
            if (s < -tol) below = true;
            if (above && below) break;
        }
        if (above && below) continue;
        if (above) {
            nrm = la::scale(nrm, -1.0);
            off = -off;
        }
        HFacet f;
        f.normal = nrm;
        f.offset = off;
        for (int i = 0; i < m; ++i)
            if (std::abs(la::dot(nrm, points[i]) - off) <= tol) f.members.push_back(i);
        // merge with an existing coplanar facet if present
        bool merged = false;
        for (HFacet& g : out) {
            if (la::dist(g.normal, f.normal) <= 1e-9 && std::abs(g.offset - f.offset) <= tol) {
                merged = true;
                break;  // identical support plane already recorded
            }
        }
        if (!merged) {
            out.push_back(std::move(f));
            if (use_masks) {
                uint64_t lo = 0, hi = 0;
                for (int i : out.back().members)
                    (i < 64 ? lo : hi) |= (uint64_t{1} << (i & 63));
                masks_lo.push_back(lo);
                masks_hi.push_back(hi);
            }
        }
    }
    return out;
}

std::pair<double, Vec> measure_centroid(const std::vector<Vec>& points, int d) {
    std::vector<Vec> pts = dedupe_points(points, 1e-12);
    if (pts.empty()) return {0.0, Vec(d, 0.0)};
    if (static_cast<int>(pts.size()) <= d || la::affine_rank(pts) < d)
        return {0.0, mean_point(pts)};
    if (d == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const Vec& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return {hi - lo, Vec{(hi + lo) / 2.0}};
    }
    if (d == 2) return polygon_measure(pts);

    const Vec ref = mean_point(pts);
    auto fcts = facets(pts, d);
    double vol = 0.0;
    Vec cent(d, 0.0);
    for (const HFacet& f : fcts) {
        // project members into an orthonormal frame of the facet plane
        auto frame = la::orthonormal_complement(f.normal);
        const Vec& p0 = pts[f.members[0]];
        std::vector<Vec> proj;
        proj.reserve(f.members.size());
        for (int i : f.members) {
            const Vec rel = la::sub(pts[i], p0);
            Vec q(d - 1);
            for (int k = 0; k < d - 1; ++k) q[k] = la::dot(frame[k], rel);
            proj.push_back(std::move(q));
        }
        auto [farea, fcent_local] = measure_centroid(proj, d - 1);
        if (farea <= 0.0) continue;
        Vec fcent = p0;
        for (int k = 0; k < d - 1; ++k) fcent = la::add(fcent, la::scale(frame[k], fcent_local[k]));
        const double height = f.offset - la::dot(f.normal, ref);
        const double cone_vol = farea * height / static_cast<double>(d);
        // centroid of the cone over the facet from ref
        const double w = static_cast<double>(d) / static_cast<double>(d + 1);
        Vec cone_cent = la::add(ref, la::scale(la::sub(fcent, ref), w));
        vol += cone_vol;
        cent = la::add(cent, la::scale(cone_cent, cone_vol));
    }
    if (vol <= 0.0) return {0.0, ref};
    return {vol, la::scale(cent, 1.0 / vol)};
}

}  // namespace hull

// ---------------------------------------------------------------------------
// Polytope
// ---------------------------------------------------------------------------

Polytope Polytope::assemble(int dim, std::vector<Vec> vertices,
                            std::vector<std::pair<Vec, double>> facet_planes) {
    Polytope P;
    P.dim_ = dim;
    P.vertices_ = std::move(vertices);
    P.facets_.reserve(facet_planes.size());
    const double scale = 1.0 + max_norm(P.vertices_);
    for (auto& [nrm, off] : facet_planes) {
        Facet f;
        f.normal = std::move(nrm);
        f.offset = off;
        for (int i = 0; i < static_cast<int>(P.vertices_.size()); ++i)
            if (std::abs(la::dot(f.normal, P.vertices_[i]) - off) <= tol_incidence(scale))
                f.vertex_indices.push_back(i);
        P.facets_.push_back(std::move(f));
    }
    P.finalize();
    return P;
}

void Polytope::finalize() {
    const int n = dim_;
    const double scale = 1.0 + max_norm(vertices_);
    const double tol = tol_incidence(scale);

    if (static_cast<int>(vertices_.size()) < n + 1)
        throw construction_error("polytope needs at least dim+1 vertices");
    if (static_cast<int>(facets_.size()) < n + 1)
        throw construction_error("polytope needs at least dim+1 facets");

    // facet areas and barycenters
    for (Facet& f : facets_) {
        if (la::affine_rank([&] {
                std::vector<Vec> m;
                for (int i : f.vertex_indices) m.push_back(vertices_[i]);
                return m;
            }()) < n - 1)
            throw construction_error("facet vertex set is not (n-1)-dimensional");
        auto frame = la::orthonormal_complement(f.normal);
        const Vec& p0 = vertices_[f.vertex_indices[0]];
        std::vector<Vec> proj;
        for (int i : f.vertex_indices) {
            const Vec rel = la::sub(vertices_[i], p0);
            Vec q(n - 1);
            for (int k = 0; k < n - 1; ++k) q[k] = la::dot(frame[k], rel);
            proj.push_back(std::move(q));
        }
        auto [area, cent_local] = hull::measure_centroid(proj, n - 1);
        f.area = area;
        f.barycenter = p0;
        for (int k = 0; k < n - 1; ++k)
            f.barycenter = la::add(f.barycenter, la::scale(frame[k], cent_local[k]));
        if (!(f.area > 0.0)) throw construction_error("facet with zero area");
    }

    // volume + centroid by cone decomposition from the vertex mean
    const Vec ref = mean_point(vertices_);
    volume_ = 0.0;
    Vec cent(n, 0.0);
    for (const Facet& f : facets_) {
        const double height = f.offset - la::dot(f.normal, ref);
        if (height <= 0.0)
            throw construction_error("vertex mean is not interior (unbounded or flat input?)");
        const double cone_vol = f.area * height / static_cast<double>(n);
        const double w = static_cast<double>(n) / static_cast<double>(n + 1);
        const Vec cone_cent = la::add(ref, la::scale(la::sub(f.barycenter, ref), w));
        volume_ += cone_vol;
        cent = la::add(cent, la::scale(cone_cent, cone_vol));
    }
    if (!(volume_ > 0.0)) throw construction_error("zero volume");
    centroid_ = la::scale(cent, 1.0 / volume_);

    // validation: every vertex feasible for every facet, and on >= n facets
    // whose normals span R^n
    for (int vi = 0; vi < static_cast<int>(vertices_.size()); ++vi) {
        std::vector<Vec> active;
        for (const Facet& f : facets_) {
            const double s = la::dot(f.normal, vertices_[vi]) - f.offset;
            if (s > tol) throw construction_error("vertex outside a facet halfspace");
            if (std::abs(s) <= tol) active.push_back(f.normal);
        }
        if (static_cast<int>(active.size()) < n || la::rank(active) < n)
            throw construction_error("point is not a vertex (active facets do not span)");
    }

    // edges: vertex pairs whose common active facets have rank n-1
    std::vector<std::vector<int>> vertex_facets(vertices_.size());
    for (int fi = 0; fi < static_cast<int>(facets_.size()); ++fi)
        for (int vi : facets_[fi].vertex_indices) vertex_facets[vi].push_back(fi);
    for (auto& vf : vertex_facets) std::sort(vf.begin(), vf.end());
    for (int a = 0; a < static_cast<int>(vertices_.size()); ++a) {
        for (int b = a + 1; b < static_cast<int>(vertices_.size()); ++b) {
            std::vector<int> common;
            std::set_intersection(vertex_facets[a].begin(), vertex_facets[a].end(),
                                  vertex_facets[b].begin(), vertex_facets[b].end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) < n - 1) continue;
            std::vector<Vec> normals;
            for (int fi : common) normals.push_back(facets_[fi].normal);
            if (la::rank(normals) == n - 1) edges_.emplace_back(a, b);
        }
    }

    diameter_ = 0.0;
    for (size_t a = 0; a < vertices_.size(); ++a)
        for (size_t b = a + 1; b < vertices_.size(); ++b)
            diameter_ = std::max(diameter_, la::dist(vertices_[a], vertices_[b]));
}

Polytope Polytope::from_vertices(int dim, const std::vector<Vec>& points) {
    if (dim < 2) throw input_error("dimension must be >= 2");
    if (points.size() > 64) throw input_error("from_vertices: more than 64 points");
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != dim) throw input_error("point of wrong dimension");
    std::vector<Vec> pts = dedupe_points(points, 1e-9);
    const int arank = la::affine_rank(pts);
    if (arank < dim)
        throw construction_error("degenerate input: affine rank " + std::to_string(arank) +
                                 " < dim " + std::to_string(dim));

    auto hfacets = hull::facets(pts, dim);
    // a point is a hull vertex iff its active facet normals span R^n
    std::vector<std::vector<Vec>> active(pts.size());
    for (const auto& f : hfacets)
        for (int i : f.members) active[i].push_back(f.normal);
    std::vector<int> remap(pts.size(), -1);
    std::vector<Vec> verts;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (static_cast<int>(active[i].size()) >= dim && la::rank(active[i]) == dim) {
            remap[i] = static_cast<int>(verts.size());
            verts.push_back(pts[i]);
        }
    }
    std::vector<std::pair<Vec, double>> planes;
    planes.reserve(hfacets.size());
    for (auto& f : hfacets) planes.emplace_back(std::move(f.normal), f.offset);
    return assemble(dim, std::move(verts), std::move(planes));
}

Polytope Polytope::from_halfspaces(int dim,
                                   const std::vector<std::pair<Vec, double>>& halfspaces) {
    if (dim < 2) throw input_error("dimension must be >= 2");
    if (static_cast<int>(halfspaces.size()) < dim + 1)
        throw input_error("need at least dim+1 halfspaces");
    for (const auto& [nrm, off] : halfspaces) {
        (void)off;
        if (static_cast<int>(nrm.size()) != dim) throw input_error("normal of wrong dimension");
        if (std::abs(la::norm(nrm) - 1.0) > 1e-9) throw input_error("halfspace normal not unit");
    }
    // drop near-duplicate planes, keeping the tighter offset
    std::vector<std::pair<Vec, double>> hs;
    for (const auto& h : halfspaces) {
        bool dup = false;
        for (auto& g : hs)
            if (la::dist(g.first, h.first) <= 1e-9 && std::abs(g.second - h.second) <= 1e-7 * (1.0 + std::abs(g.second))) {
                g.second = std::min(g.second, h.second);
                dup = true;
                break;
            }
        if (!dup) hs.push_back(h);
    }

    const int m = static_cast<int>(hs.size());
    double offset_scale = 1.0;
    for (const auto& h : hs) offset_scale = std::max(offset_scale, std::abs(h.second));

    std::vector<Vec> cand;
    std::vector<Vec> rows(dim);
    Vec rhs(dim);
    for (SubsetIter it(m, dim); !it.done; it.next()) {
        for (int i = 0; i < dim; ++i) {
            rows[i] = hs[it.idx[i]].first;
            rhs[i] = hs[it.idx[i]].second;
        }
        auto sol = la::solve(rows, rhs, 1e-10);
        if (!sol) continue;  // singular subset: skipped silently
        const Vec& v = *sol;
        bool feasible = true;
        for (const auto& [nrm, off] : hs)
            if (la::dot(nrm, v) > off + tol_incidence(la::norm(v) + offset_scale)) {
                feasible = false;
                break;
            }
        if (feasible) cand.push_back(v);
    }
    std::vector<Vec> verts = dedupe_points(cand, 1e-9);
    if (static_cast<int>(verts.size()) < dim + 1)
        throw construction_error("halfspace intersection is empty, flat, or unbounded");
    if (la::affine_rank(verts) < dim)
        throw construction_error("halfspace intersection has empty interior");

    // Facets: halfspaces whose incident vertex set is (n-1)-dimensional.
    // Everything else is redundant and dropped.
    const double scale = 1.0 + max_norm(verts);
    std::vector<std::pair<Vec, double>> planes;
    for (const auto& [nrm, off] : hs) {
        std::vector<Vec> inc;
        for (const Vec& v : verts)
            if (std::abs(la::dot(nrm, v) - off) <= tol_incidence(scale)) inc.push_back(v);
        if (static_cast<int>(inc.size()) >= dim && la::affine_rank(inc) == dim - 1)
            planes.emplace_back(nrm, off);
    }
    Polytope P = assemble(dim, std::move(verts), std::move(planes));

    // Boundedness audit: every facet of conv(vertices) must be one of the
    // input planes. An unbounded region would show a synthetic closure facet.
    auto check = hull::facets(P.vertices_, dim);
    for (const auto& f : check) {
        bool matched = false;
        for (const Facet& g : P.facets_)
            if (la::dist(g.normal, f.normal) <= 1e-7 &&
                std::abs(g.offset - f.offset) <= 1e-7 * (1.0 + std::abs(g.offset))) {
                matched = true;
                break;
            }
        if (!matched)
            throw construction_error("halfspace intersection is unbounded");
    }
    return P;
}

double Polytope::support(const Vec& u) const {
    if (static_cast<int>(u.size()) != dim_) throw input_error("direction of wrong dimension");
    if (std::abs(la::norm(u) - 1.0) > 1e-12) throw input_error("direction must be unit");
    double h = -1e300;
    for (const Vec& v : vertices_) h = std::max(h, la::dot(u, v));
    return h;
}

double Polytope::slice_area(const Vec& u, double t) const {
    if (std::abs(la::norm(u) - 1.0) > 1e-12) throw input_error("direction must be unit");
    const double scale = 1.0 + max_norm(vertices_);
    const double tol = tol_incidence(scale);

    std::vector<double> proj(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) proj[i] = la::dot(u, vertices_[i]);

    std::vector<Vec> section;
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (std::abs(proj[i] - t) <= tol) section.push_back(vertices_[i]);
    for (const auto& [a, b] : edges_) {
        const double sa = proj[a] - t, sb = proj[b] - t;
        if (std::abs(sa) <= tol || std::abs(sb) <= tol) continue;  // endpoint handled above
        if (sa * sb < 0.0) {
            const double lam = sa / (sa - sb);
            section.push_back(la::add(vertices_[a], la::scale(la::sub(vertices_[b], vertices_[a]), lam)));
        }
    }
    if (static_cast<int>(section.size()) < dim_) return 0.0;

    auto frame = la::orthonormal_complement(la::normalized(u));
    const Vec& p0 = section[0];
    std::vector<Vec> flat;
    flat.reserve(section.size());
    for (const Vec& p : section) {
        const Vec rel = la::sub(p, p0);
        Vec q(dim_ - 1);
        for (int k = 0; k < dim_ - 1; ++k) q[k] = la::dot(frame[k], rel);
        flat.push_back(std::move(q));
    }
    return hull::measure_centroid(flat, dim_ - 1).first;
}

bool Polytope::origin_interior(double margin) const {
    for (const Facet& f : facets_)
        if (f.offset <= margin * (1.0 + std::abs(f.offset))) return false;
    return true;
}

Polytope Polytope::translated(const Vec& shift) const {
    Polytope P = *this;
    for (Vec& v : P.vertices_) v = la::add(v, shift);
    for (Facet& f : P.facets_) {
        f.offset += la::dot(f.normal, shift);
        f.barycenter = la::add(f.barycenter, shift);
    }
    P.centroid_ = la::add(P.centroid_, shift);
    return P;
}

Polytope Polytope::scaled(double factor) const {
    if (!(factor > 0.0)) throw input_error("scale factor must be positive");
    Polytope P = *this;
    for (Vec& v : P.vertices_) v = la::scale(v, factor);
    for (Facet& f : P.facets_) {
        f.offset *= factor;
        f.area *= std::pow(factor, dim_ - 1);
        f.barycenter = la::scale(f.barycenter, factor);
    }
    P.volume_ *= std::pow(factor, dim_);
    P.centroid_ = la::scale(P.centroid_, factor);
    P.diameter_ *= factor;
    return P;
}

Polytope Polytope::rotated(const std::vector<Vec>& R) const {
    Polytope P = *this;
    for (Vec& v : P.vertices_) v = la::mat_apply(R, v);
    for (Facet& f : P.facets_) {
        f.normal = la::mat_apply(R, f.normal);
        f.barycenter = la::mat_apply(R, f.barycenter);
    }
    P.centroid_ = la::mat_apply(R, P.centroid_);
    return P;
}

Polytope Polytope::translate_to_centroid() const {
    return translated(la::scale(centroid_, -1.0));
}

}  // namespace conevol
