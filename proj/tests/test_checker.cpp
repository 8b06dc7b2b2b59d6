#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conevol/checker.hpp"
#include "conevol/generators.hpp"
#include "conevol/linalg.hpp"
#include "test_support.hpp"

using namespace conevol;
namespace la = linalg;
using testsup::close;

TEST_CASE("cube: psi = 1 and PrismEquality on all three axes") {
    const Polytope P = gen::cube(3);
    const auto reports = check_all_facets(P);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(close(r.x, 1.0 / 6.0, 1e-12));
        CHECK(close(r.y, 1.0 / 6.0, 1e-12));
        CHECK(close(r.psi, 1.0, 1e-9));
        CHECK(r.classification == Classification::PrismEquality);
        CHECK(close(refinement_gap(r), 0.0, 1e-12));
    }
}

TEST_CASE("regular tetrahedron: psi = 1 and ConeEquality on all four axes") {
    const Polytope P = gen::regular_tetrahedron();
    const auto reports = check_all_facets(P);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        CHECK(close(r.x + r.y, 0.25, 1e-12));  // one side carries 1/4, other 0
        CHECK(close(r.psi, 1.0, 1e-9));
        CHECK(r.classification == Classification::ConeEquality);
        CHECK(close(refinement_gap(r), 16.0 * std::pow(0.25, 3), 1e-12));
    }
}

TEST_CASE("oblique prism classifies as PrismEquality along the base normal") {
    const Polytope P = gen::prism(3, {0.4, 0.3, 2.0}).translate_to_centroid();
    const ConditionReport r = check_direction(P, {0, 0, 1});
    CHECK(close(r.x, 1.0 / 6.0, 1e-10));
    CHECK(close(r.y, 1.0 / 6.0, 1e-10));
    CHECK(close(r.psi, 1.0, 1e-9));
    CHECK(r.classification == Classification::PrismEquality);
}

TEST_CASE("square-based cone classifies as ConeEquality along the axis") {
    const Polytope P = gen::cone_body(3, {0.0, 0.0, 2.0}).translate_to_centroid();
    const ConditionReport r = check_direction(P, {0, 0, 1});
    CHECK(close(r.psi, 1.0, 1e-9));
    CHECK(r.classification == Classification::ConeEquality);
    // the apex side has mass 0
    CHECK(r.x == 0.0);
    CHECK(close(r.y, 0.25, 1e-10));
}

TEST_CASE("perturbing one prism vertex flips the classification to Strict") {
    std::vector<Vec> pts;
    for (int m = 0; m < 4; ++m)
        pts.push_back({(m & 1) ? 1.0 : -1.0, (m & 2) ? 1.0 : -1.0, 0.0});
    const size_t base = pts.size();
    for (size_t i = 0; i < base; ++i) pts.push_back(la::add(pts[i], {0.4, 0.3, 2.0}));
    pts[0][0] += 1e-2;  // dent one base vertex
    const Polytope P = Polytope::from_vertices(3, pts).translate_to_centroid();
    const ConditionReport r = check_direction(P, {0, 0, 1});
    CHECK(r.classification == Classification::Strict);
    CHECK(r.slack > 0.0);
    CHECK(r.slack > 1e-7);
}

TEST_CASE("random centered hull: all Strict with positive slack") {
    gen::Rng rng(909);
    std::vector<Vec> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(rng.normal_vec(3));
    const Polytope P = Polytope::from_vertices(3, pts).translate_to_centroid();
    const auto reports = check_all_facets(P);
    CHECK(reports.size() >= 10);
    for (const auto& r : reports) {
        CHECK(r.classification == Classification::Strict);
        CHECK(r.slack > 0.0);
        CHECK(r.scc_value <= 1.0 + 1e-9);
        CHECK(refinement_gap(r) >= 0.0);
    }
    // reports come sorted by ascending slack
    for (size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].slack <= reports[i].slack);
}

TEST_CASE("non-centered input is a loud precondition error") {
    const Polytope P = gen::box({{0.0, 2.0}, {-1.0, 1.0}, {-1.0, 1.0}});
    CHECK_THROWS_AS(check_direction(P, {0, 0, 1}), input_error);
    CHECK_NOTHROW(check_direction(P.translate_to_centroid(), {0, 0, 1}));
}

TEST_CASE("vacuous direction: psi = 0, include only on request") {
    const Polytope P = gen::regular_tetrahedron();
    const Vec u = la::normalized({1, 0, 0});  // not a facet normal
    const ConditionReport r = check_direction(P, u);
    CHECK(r.x == 0.0);
    CHECK(r.y == 0.0);
    CHECK(r.psi == 0.0);
    CHECK(r.classification == Classification::Strict);

    CHECK(check_all_facets(P).size() == 4);
    CHECK(check_all_facets(P, {}, {u}).size() == 5);
}

TEST_CASE("reports invariant under joint rotation and under scaling") {
    gen::Rng rng(111);
    const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
    const Vec u = P.facets()[0].normal;
    const ConditionReport r0 = check_direction(P, u);

    const auto R = gen::random_rotation(3, rng);
    const ConditionReport r1 = check_direction(P.rotated(R), la::mat_apply(R, u));
    CHECK(close(r0.x, r1.x, 1e-9));
    CHECK(close(r0.y, r1.y, 1e-9));
    CHECK(close(r0.psi, r1.psi, 1e-9));

    const ConditionReport r2 = check_direction(P.scaled(3.0), u);
    CHECK(close(r0.x, r2.x, 1e-9));
    CHECK(close(r0.y, r2.y, 1e-9));
    CHECK(close(r0.psi, r2.psi, 1e-9));
}

TEST_CASE("scc agreement with the measures module") {
    gen::Rng rng(222);
    const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
    const DiscreteMeasure mu = cone_volume_measure(P);
    for (const auto& rep : check_all_facets(P)) {
        const SubspaceReport sr = subspace_concentration(mu, {rep.direction});
        // n * ratio == scc_value for the line through the facet axis
        CHECK(close(3.0 * sr.ratio, rep.scc_value, 1e-9));
        CHECK((rep.scc_value <= 1.0 + 1e-9) == sr.ok);
    }
}

TEST_CASE("tetrahedron along a facet normal: psi decomposition") {
    const Polytope P = gen::regular_tetrahedron();
    const Vec u = P.facets()[0].normal;
    const ConditionReport r = check_direction(P, u);
    // x = 1/4, y = 0 (or mirrored depending on orientation)
    CHECK(close(std::max(r.x, r.y), 0.25, 1e-12));
    CHECK(close(std::min(r.x, r.y), 0.0, 1e-15));
    CHECK(close(r.scc_value, 0.75, 1e-12));
    CHECK(close(r.psi, 1.0, 1e-12));
}
