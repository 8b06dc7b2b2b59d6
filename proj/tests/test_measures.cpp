#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conevol/generators.hpp"
#include "conevol/linalg.hpp"
#include "conevol/measures.hpp"
#include "test_support.hpp"

using namespace conevol;
namespace la = linalg;
using testsup::close;
using testsup::close_rel;

TEST_CASE("surface area measure of cube and simplex") {
    const DiscreteMeasure mu = surface_area_measure(gen::cube(3));
    CHECK(mu.atoms.size() == 6);
    for (const auto& a : mu.atoms) CHECK(close(a.mass, 4.0, 1e-12));
    CHECK(mu.closure_residual() <= 1e-10 * mu.total());

    const DiscreteMeasure ms = surface_area_measure(gen::standard_simplex(3));
    REQUIRE(ms.atoms.size() == 4);
    const double s = 1.0 / std::sqrt(3.0);
    for (const auto& a : ms.atoms) {
        if (la::dist(a.direction, {s, s, s}) < 1e-9)
            CHECK(close(a.mass, std::sqrt(3.0) / 2.0, 1e-12));
        else
            CHECK(close(a.mass, 0.5, 1e-12));
    }
}

TEST_CASE("L_p measures") {
    const Polytope cube = gen::cube(3);
    const DiscreteMeasure m1 = lp_surface_measure(cube, 1.0);
    const DiscreteMeasure surf = surface_area_measure(cube);
    for (size_t i = 0; i < m1.atoms.size(); ++i)
        CHECK(close(m1.atoms[i].mass, surf.atoms[i].mass, 1e-12));

    for (const auto& a : lp_surface_measure(cube, 0.0).atoms) CHECK(close(a.mass, 4.0, 1e-12));
    for (const auto& a : lp_surface_measure(cube, 2.0).atoms) CHECK(close(a.mass, 4.0, 1e-12));
    for (const auto& a : lp_surface_measure(gen::cube(3, 2.0), 2.0).atoms)
        CHECK(close(a.mass, 8.0, 1e-12));

    // origin on the boundary: p != 1 is a domain error, p = 1 is fine
    const Polytope off = gen::box({{0.0, 2.0}, {-1.0, 1.0}, {-1.0, 1.0}});
    CHECK_THROWS_AS(lp_surface_measure(off, 2.0), domain_error);
    CHECK_NOTHROW(lp_surface_measure(off, 1.0));
    CHECK_THROWS_AS(cone_volume_measure(off), domain_error);
}

TEST_CASE("cone-volume measure: cube, tetrahedron, random total") {
    const DiscreteMeasure mc = cone_volume_measure(gen::cube(3));
    for (const auto& a : mc.atoms) CHECK(close(a.mass, 4.0 / 3.0, 1e-12));
    CHECK(close(mc.total(), 8.0, 1e-12));

    const Polytope T = gen::regular_tetrahedron();  // centroid already at 0
    const DiscreteMeasure mt = cone_volume_measure(T);
    REQUIRE(mt.atoms.size() == 4);
    for (const auto& a : mt.atoms) CHECK(close(a.mass, T.volume() / 4.0, 1e-12));

    gen::Rng rng(31);
    const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
    const DiscreteMeasure mp = cone_volume_measure(P);
    CHECK(close_rel(mp.total(), P.volume(), 1e-9));
}

TEST_CASE("mass_at") {
    const DiscreteMeasure mu = cone_volume_measure(gen::cube(3));
    CHECK(close(mass_at(mu, {1, 0, 0}), 4.0 / 3.0, 1e-12));
    CHECK(mass_at(mu, la::normalized({1, 0, 0.001})) == 0.0);
    const DiscreteMeasure mt = cone_volume_measure(gen::regular_tetrahedron());
    const Vec u = la::scale(mt.atoms[0].direction, -1.0);
    CHECK(mass_at(mt, u) == 0.0);  // no facet with the opposite normal
    CHECK_THROWS_AS(mass_at(mu, {1, 1, 0}), input_error);
}

TEST_CASE("subspace concentration") {
    const DiscreteMeasure mu = cone_volume_measure(gen::cube(3));
    const SubspaceReport line = subspace_concentration(mu, {{1, 0, 0}});
    CHECK(close(line.ratio, 1.0 / 3.0, 1e-12));
    CHECK(close(line.bound, 1.0 / 3.0, 1e-12));
    CHECK(line.ok);

    const SubspaceReport plane = subspace_concentration(mu, {{1, 0, 0}, {0, 1, 0}});
    CHECK(close(plane.ratio, 2.0 / 3.0, 1e-12));
    CHECK(close(plane.bound, 2.0 / 3.0, 1e-12));
    CHECK(plane.ok);

    const DiscreteMeasure mt = cone_volume_measure(gen::regular_tetrahedron());
    const SubspaceReport tl = subspace_concentration(mt, {mt.atoms[0].direction});
    CHECK(close(tl.ratio, 0.25, 1e-12));
    CHECK(tl.ok);

    CHECK_THROWS_AS(subspace_concentration(mu, {{1, 0, 0}, {2, 0, 0}}), input_error);
    CHECK_THROWS_AS(subspace_concentration(mu, std::vector<Vec>{}), input_error);
}

TEST_CASE("scaling laws on the cube") {
    const Polytope c1 = gen::cube(3);
    const Polytope c2 = c1.scaled(2.0);
    const double s1 = surface_area_measure(c1).total();
    const double s2 = surface_area_measure(c2).total();
    CHECK(close_rel(s2, 4.0 * s1, 1e-12));  // lambda^(n-1)
    const double v1 = cone_volume_measure(c1).total();
    const double v2 = cone_volume_measure(c2).total();
    CHECK(close_rel(v2, 8.0 * v1, 1e-12));  // lambda^n
}

TEST_CASE("origin-symmetric bodies pass concentration on random frames") {
    gen::Rng rng(77);
    // symmetrize a random hull by including the antipodes
    std::vector<Vec> pts;
    for (int i = 0; i < 10; ++i) {
        const Vec p = rng.normal_vec(3);
        pts.push_back(p);
        pts.push_back(la::scale(p, -1.0));
    }
    const Polytope P = Polytope::from_vertices(3, pts);
    const DiscreteMeasure mu = cone_volume_measure(P);
    for (int rep = 0; rep < 8; ++rep) {
        const auto frame = gen::random_rotation(3, rng);
        for (const Vec& axis : frame) CHECK(subspace_concentration(mu, {axis}).ok);
    }
}

TEST_CASE("closure holds for random polytopes") {
    gen::Rng rng(123);
    for (int rep = 0; rep < 20; ++rep) {
        const Polytope P = gen::random_hull(3, rng);
        const DiscreteMeasure mu = surface_area_measure(P);
        CHECK(mu.closure_residual() <= 1e-10 * mu.total());
    }
}
