#pragma once

#include <utility>

#include "conevol/common.hpp"

namespace conevol {

// One facet of a polytope: outward unit normal, support value along it, the
// indices of the incident vertices, and the cached (n-1)-area.
struct Facet {
    Vec normal;
    double offset = 0.0;
    std::vector<int> vertex_indices;
    double area = 0.0;
    Vec barycenter;  // (n-1)-volume-weighted centroid of the facet
};

// Immutable full-dimensional compact convex polytope. All geometry is double
// precision; construction validates the invariants (bounded, nonempty
// interior, vertex/facet incidence) and caches volume, centroid, edges and
// facet areas. Instances are safe to share across threads.
class Polytope {
  public:
    // Convex hull of the given points (brute force over n-subsets; interior
    // points are discarded). Throws construction_error on degenerate input
    // (names the affine rank found) and input_error for > 64 points.
    static Polytope from_vertices(int dim, const std::vector<Vec>& points);

    // Intersection of halfspaces {x : normal . x <= offset}. Normals must be
    // unit. Throws construction_error when the region is unbounded or has
    // empty interior; redundant halfspaces are dropped.
    static Polytope from_halfspaces(int dim,
                                    const std::vector<std::pair<Vec, double>>& halfspaces);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    double volume() const { return volume_; }
    const Vec& centroid() const { return centroid_; }
    double diameter() const { return diameter_; }

    // h_P(u) = max_v v . u ; u must be unit within 1e-12.
    double support(const Vec& u) const;

    // (n-1)-measure of P intersected with {x . u = t}; 0 outside the support
    // slab. A hyperplane containing a facet returns that facet's area.
    double slice_area(const Vec& u, double t) const;

    // True when the origin is strictly interior with the given relative margin.
    bool origin_interior(double margin = 0.0) const;

    Polytope translated(const Vec& shift) const;
    Polytope scaled(double factor) const;
    Polytope rotated(const std::vector<Vec>& orthogonal_rows) const;
    Polytope translate_to_centroid() const;

  private:
    Polytope() = default;
    static Polytope assemble(int dim, std::vector<Vec> vertices,
                             std::vector<std::pair<Vec, double>> facet_planes);
    void finalize();  // areas, volume, centroid, edges, validation

    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::pair<int, int>> edges_;
    double volume_ = 0.0;
    Vec centroid_;
    double diameter_ = 0.0;
};

// Scale-aware incidence tolerance used throughout construction.
inline double tol_incidence(double point_norm) { return 1e-9 * (1.0 + point_norm); }

namespace hull {

// A supporting hyperplane of conv(points) together with the incident points.
struct HFacet {
    Vec normal;
    double offset = 0.0;
    std::vector<int> members;
};

// All facets of conv(points) in R^d by brute force over d-subsets; coplanar
// candidates are merged. Points need not be in convex position.
std::vector<HFacet> facets(const std::vector<Vec>& points, int d);

// d-volume and centroid of conv(points); volume 0 when the set is not
// full-dimensional (centroid then is the point average).
std::pair<double, Vec> measure_centroid(const std::vector<Vec>& points, int d);

}  // namespace hull

}  // namespace conevol
