#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conevol/generators.hpp"
#include "conevol/linalg.hpp"
#include "conevol/reduction.hpp"
#include "test_support.hpp"

using namespace conevol;
using namespace conevol::reduction;
namespace la = linalg;
using testsup::close;
using testsup::close_rel;

TEST_CASE("frustum volume closed forms") {
    CHECK(close(frustum_volume({3, 0.0, 1.0, 1.0, 1.0}), M_PI, 1e-14));
    CHECK(close(frustum_volume({3, 1.0, 2.0, 1.0, 2.0}), 7.0 * M_PI / 3.0, 1e-13));
    CHECK(close(frustum_volume({3, 0.0, 1.0, 0.0, 1.0}), M_PI / 3.0, 1e-14));  // cone
    CHECK_THROWS_AS(FrustumSpec(3, 1.0, 0.0, 1.0, 1.0), input_error);
    CHECK_THROWS_AS(FrustumSpec(3, 0.0, 1.0, 0.0, 0.0), input_error);
}

TEST_CASE("frustum centroid closed forms") {
    CHECK(close(centroid_u({3, -1.0, 1.0, 1.0, 1.0}), 0.0, 1e-14));
    CHECK(close(centroid_u({3, 1.0, 2.0, 1.0, 2.0}), 45.0 / 28.0, 1e-13));
    CHECK(close(centroid_u({3, 0.0, 1.0, 0.0, 1.0}), 0.75, 1e-14));
    // against quadrature for a generic spec
    const FrustumSpec f(4, -0.7, 1.3, 0.4, 1.9);
    const double omega = unit_ball_volume(3);
    auto area = [&](double h) {
        const double r = f.r_lo + (f.r_hi - f.r_lo) * (h - f.h_lo) / f.height();
        return omega * r * r * r;
    };
    const double V = testsup::simpson(area, f.h_lo, f.h_hi, 4096);
    const double M = testsup::simpson([&](double h) { return h * area(h); }, f.h_lo, f.h_hi, 4096);
    CHECK(close_rel(frustum_volume(f), V, 1e-10));
    CHECK(close_rel(centroid_u(f), M / V, 1e-10));
}

TEST_CASE("build_d0_d1 is idempotent on frustum profiles") {
    const SliceProfile prof = frustum_profile(3, -0.6, 0.9, 0.8, 1.7, 256);
    const auto [K0, K1] = build_d0_d1(prof);
    CHECK(close_rel(K0.r_hi, 1.7, 1e-9));  // already the right top radius
    CHECK(close_rel(K0.r_lo, 0.8, 1e-12));
    CHECK(close_rel(K1.r_lo, 0.8, 1e-9));
    CHECK(close_rel(K1.r_hi, 1.7, 1e-12));
    CHECK(close_rel(frustum_volume(K0), prof.volume(), 1e-11));
}

TEST_CASE("build_d0_d1 on the ball matches a bisection oracle") {
    const SliceProfile prof = ball_profile(3, 1024);
    const double V = prof.volume();
    CHECK(close_rel(V, 4.0 * M_PI / 3.0, 1e-7));
    const auto [K0, K1] = build_d0_d1(prof);
    // oracle: cone over radius R with height 2 has volume (pi/3) R^2 * 2
    const double R = std::sqrt(3.0 * V / (2.0 * M_PI));
    CHECK(close_rel(K0.r_hi, R, 1e-9));
    CHECK(close_rel(K1.r_lo, R, 1e-9));
    CHECK(close(K0.r_lo, 0.0, 1e-9));
}

TEST_CASE("cube profile: constant family, degenerate convention s=1/2") {
    const SliceProfile prof = profile(gen::cube(3), {0, 0, 1}, 64);
    const auto [K0, K1] = build_d0_d1(prof);
    const double rd = 2.0 / std::sqrt(M_PI);
    CHECK(close_rel(K0.r_hi, rd, 1e-12));
    CHECK(close_rel(K1.r_lo, rd, 1e-12));
    const BalanceResult bal = find_balanced(prof);
    CHECK(bal.degenerate);
    CHECK(close(bal.s_star, 0.5, 1e-15));
    CHECK(close(centroid_u(bal.frustum), 0.0, 1e-12));
}

TEST_CASE("family endpoints and volume preservation across the family") {
    const SliceProfile prof = ball_profile(3, 512);
    const auto [K0, K1] = build_d0_d1(prof);
    const FrustumSpec s0 = family_member(prof, 0.0);
    const FrustumSpec s1 = family_member(prof, 1.0);
    CHECK(close_rel(s0.r_hi, K0.r_hi, 1e-10));
    CHECK(close_rel(s0.r_lo, K0.r_lo, 1e-7));
    CHECK(close_rel(s1.r_lo + 1.0, K1.r_lo + 1.0, 1e-10));
    CHECK(close_rel(s1.r_hi, K1.r_hi, 1e-10));

    const double V = prof.volume();
    for (int i = 0; i <= 100; ++i) {
        const double s = i / 100.0;
        CHECK(std::abs(frustum_volume(family_member(prof, s)) - V) <= 1e-10 * V);
    }
    CHECK_THROWS_AS(family_member(prof, 1.5), input_error);
}

TEST_CASE("find_balanced on the ball: symmetric balanced frustum") {
    const SliceProfile prof = ball_profile(3, 1024);
    const BalanceResult bal = find_balanced(prof);
    CHECK(!bal.degenerate);
    CHECK(std::abs(centroid_u(bal.frustum)) <= 1e-9 * prof.span());
    CHECK(close_rel(bal.frustum.r_lo, bal.frustum.r_hi, 1e-7));  // mirror symmetry
    // K0 and K1 are mirror images
    const auto [K0, K1] = build_d0_d1(prof);
    CHECK(close_rel(K0.r_hi, K1.r_lo, 1e-9));
}

TEST_CASE("find_balanced recovers a frustum input (idempotence)") {
    // centered frustum: centroid height of r(h)=h on [1,2] is 45/28
    const double c = 45.0 / 28.0;
    const SliceProfile prof = frustum_profile(3, 1.0 - c, 2.0 - c, 1.0, 2.0, 512);
    const BalanceResult bal = find_balanced(prof);
    CHECK(std::abs(centroid_u(bal.frustum)) <= 1e-9 * prof.span());
    CHECK(close_rel(bal.frustum.r_lo, 1.0, 1e-6));
    CHECK(close_rel(bal.frustum.r_hi, 2.0, 1e-6));
}

TEST_CASE("find_balanced rejects clearly non-centered profiles") {
    const SliceProfile prof = frustum_profile(3, 1.0, 2.0, 1.0, 2.0, 256);
    CHECK_THROWS_AS(find_balanced(prof), input_error);
}

TEST_CASE("compare on a frustum: all equalities") {
    const double c = 45.0 / 28.0;
    const SliceProfile prof = frustum_profile(3, 1.0 - c, 2.0 - c, 1.0, 2.0, 512);
    const CompareReport rep = compare(prof);
    CHECK(rep.x_le);
    CHECK(rep.y_le);
    CHECK(rep.psi_le);
    CHECK(close(rep.x_prime, rep.x_frustum, 1e-6));
    CHECK(close(rep.y_prime, rep.y_frustum, 1e-6));
    CHECK(close(rep.psi_prime, rep.psi_frustum, 1e-6));
    CHECK(rep.psi_frustum <= 1.0 + 1e-9);
}

TEST_CASE("compare on the ball: strict inequalities from zero endpoint areas") {
    const CompareReport rep = compare(ball_profile(3, 1024));
    CHECK(close(rep.x_prime, 0.0, 1e-12));
    CHECK(close(rep.y_prime, 0.0, 1e-12));
    CHECK(rep.x_frustum > 0.01);
    CHECK(rep.y_frustum > 0.01);
    CHECK(rep.psi_prime < rep.psi_frustum);
    CHECK(rep.psi_frustum <= 1.0 + 1e-9);
}

TEST_CASE("compare on random centered polytope profiles") {
    gen::Rng rng(808);
    for (int rep_i = 0; rep_i < 10; ++rep_i) {
        const Polytope P = gen::random_hull(3, rng).translate_to_centroid();
        const size_t fi = rng.next_u64() % P.facets().size();
        const SliceProfile prof = profile(P, P.facets()[fi].normal, 512);
        const CompareReport rep = compare(prof);
        CHECK(rep.x_le);
        CHECK(rep.y_le);
        CHECK(rep.psi_le);
        CHECK(rep.psi_frustum <= 1.0 + 1e-9);
    }
}
