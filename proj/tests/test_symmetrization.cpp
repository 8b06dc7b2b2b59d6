#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conevol/generators.hpp"
#include "conevol/linalg.hpp"
#include "conevol/symmetrization.hpp"
#include "test_support.hpp"

using namespace conevol;
namespace la = linalg;
using testsup::close;
using testsup::close_rel;

TEST_CASE("unit ball volumes") {
    CHECK(close(unit_ball_volume(1), 2.0, 1e-14));
    CHECK(close(unit_ball_volume(2), M_PI, 1e-14));
    CHECK(close(unit_ball_volume(3), 4.0 * M_PI / 3.0, 1e-14));
    CHECK_THROWS_AS(unit_ball_volume(0), input_error);
}

TEST_CASE("cube profile along an axis is constant") {
    const Polytope P = gen::cube(3);
    const SliceProfile prof = profile(P, {0, 0, 1}, 64);
    CHECK(close(prof.t_lo, -1.0, 1e-12));
    CHECK(close(prof.t_hi, 1.0, 1e-12));
    for (double a : prof.areas) CHECK(close(a, 4.0, 1e-12));
    CHECK(close_rel(prof.volume(), 8.0, 1e-12));
    CHECK(close(prof.first_moment(), 0.0, 1e-12));
}

TEST_CASE("simplex profile along the diagonal peaks at the far facet") {
    const Polytope P = gen::standard_simplex(3);
    const double s = 1.0 / std::sqrt(3.0);
    const SliceProfile prof = profile(P, {s, s, s}, 128);
    CHECK(close(prof.t_lo, 0.0, 1e-12));
    CHECK(close(prof.t_hi, s, 1e-12));
    CHECK(close(prof.areas.front(), 0.0, 1e-12));
    // the t_hi level contains the big facet: area sqrt(3)/2
    CHECK(close(prof.areas.back(), std::sqrt(3.0) / 2.0, 1e-10));
    CHECK(close_rel(prof.volume(), P.volume(), 1e-10));
}

TEST_CASE("cube diagonal profile is symmetric with the hexagon max at 0") {
    const Polytope P = gen::cube(3);
    const double s = 1.0 / std::sqrt(3.0);
    const SliceProfile prof = profile(P, {s, s, s}, 256);
    CHECK(close(prof.area_at(0.0), 3.0 * std::sqrt(3.0), 1e-9));
    CHECK(close(prof.areas.front(), 0.0, 1e-12));
    CHECK(close(prof.areas.back(), 0.0, 1e-12));
    for (double t : {0.3, 0.9, 1.4})
        CHECK(close_rel(prof.area_at(t), prof.area_at(-t), 1e-9));
    CHECK(close_rel(prof.volume(), 8.0, 1e-9));
}

TEST_CASE("schwarz radius") {
    const Polytope P = gen::cube(3);
    const SliceProfile prof = profile(P, {0, 0, 1}, 64);
    CHECK(close(schwarz_radius(prof, 0.0), 2.0 / std::sqrt(M_PI), 1e-12));
    // the revolution volume with the interpolated radius reproduces V
    const double vol = testsup::simpson(
        [&](double t) {
            const double r = schwarz_radius(prof, t);
            return M_PI * r * r;
        },
        -1.0, 1.0, 512);
    CHECK(close_rel(vol, 8.0, 1e-10));
    CHECK_THROWS_AS(schwarz_radius(prof, 3.0), input_error);

    const SliceProfile zero = frustum_profile(3, 0.0, 1.0, 0.0, 1.0, 64);
    CHECK(close(schwarz_radius(zero, 0.0), 0.0, 1e-12));
}

TEST_CASE("verify_prop1 on the cube (axis and diagonal)") {
    const Polytope P = gen::cube(3);
    const Prop1Report r = verify_prop1(P, {0, 0, 1}, 256);
    CHECK(r.volume_rel_dev < 1e-9);
    CHECK(r.centroid_rel_dev < 1e-9);
    CHECK(close(r.top_mass_profile, 4.0 / 3.0, 1e-12));
    CHECK(r.top_rel_dev < 1e-9);
    CHECK(r.bot_rel_dev < 1e-9);

    const double s = 1.0 / std::sqrt(3.0);
    const Prop1Report d = verify_prop1(P, {s, s, s}, 512);
    CHECK(d.top_mass_profile == 0.0);  // no perpendicular facet
    CHECK(d.top_mass_measure == 0.0);
    CHECK(d.centroid_rel_dev < 1e-6);
}

TEST_CASE("verify_prop1 on random centered polytopes") {
    gen::Rng rng(404);
    for (int rep = 0; rep < 5; ++rep) {
        const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
        const size_t fi = rng.next_u64() % P.facets().size();
        const Prop1Report r = verify_prop1(P, P.facets()[fi].normal, 2048);
        CHECK(r.volume_rel_dev < 1e-6);
        CHECK(r.centroid_rel_dev < 1e-6);
        CHECK(r.top_rel_dev < 1e-8);
        CHECK(r.bot_rel_dev < 1e-8);
    }
}

TEST_CASE("verify_prop1 rejects non-centered bodies") {
    const Polytope P = gen::box({{0.0, 2.0}, {-1.0, 1.0}, {-1.0, 1.0}});
    CHECK_THROWS_AS(verify_prop1(P, {0, 0, 1}, 64), input_error);
}

TEST_CASE("concavity and linearity defects on canonical profiles") {
    // cylinder: both zero
    const SliceProfile cyl = frustum_profile(3, -1.0, 1.0, 1.0, 1.0, 128);
    const ConcavityReport rc = concavity_defect(cyl);
    CHECK(rc.concavity_defect <= 1e-12);
    CHECK(rc.linearity_defect <= 1e-12);

    // cone hitting zero: affine radius, both defects zero
    const SliceProfile cone = frustum_profile(3, 0.0, 1.0, 1.0, 0.0, 128);
    const ConcavityReport rk = concavity_defect(cone);
    CHECK(rk.concavity_defect <= 1e-10);
    CHECK(rk.linearity_defect <= 1e-10);

    // ball: concave but far from affine; chord deviation at t=0 is exactly 1
    const ConcavityReport rb = concavity_defect(ball_profile(3, 512));
    CHECK(rb.concavity_defect <= 1e-8);
    CHECK(rb.linearity_defect > 0.2);
    CHECK(close(rb.linearity_defect, 1.0, 1e-3));
}

TEST_CASE("Brunn-Minkowski signature for polytope profiles") {
    gen::Rng rng(505);
    for (int rep = 0; rep < 10; ++rep) {
        const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
        const Vec u = la::normalized(rng.normal_vec(3));
        const SliceProfile prof = profile(P, u, 2048);
        CHECK(concavity_defect(prof).concavity_defect <= 1e-8);
    }
}

TEST_CASE("endpoint areas equal perpendicular facet areas") {
    gen::Rng rng(606);
    const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
    const Facet& f = P.facets()[3];
    const SliceProfile prof = profile(P, f.normal, 64);
    CHECK(close_rel(prof.areas.back(), f.area, 1e-9));
    CHECK(close(prof.areas.front(), 0.0, 1e-12));  // generic: vertex at the bottom
}

TEST_CASE("resolution floor") {
    CHECK_THROWS_AS(profile(gen::cube(3), {0, 0, 1}, 8), input_error);
}
