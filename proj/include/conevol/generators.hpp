#pragma once

#include <cstdint>

#include "conevol/polytope.hpp"

// Canonical test bodies and the seeded generators behind the audit harness.
// All randomness flows through Rng (xorshift-based) so replays are exact on
// any platform; std:: distributions are avoided on purpose.

namespace conevol::gen {

class Rng {
  public:
    explicit Rng(uint64_t seed);
    uint64_t next_u64();
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    double normal();                       // standard normal, Box-Muller
    Vec normal_vec(int dim);

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// [-a, a]^n
Polytope cube(int dim, double a = 1.0);
// product of intervals
Polytope box(const std::vector<std::pair<double, double>>& intervals);
// conv{0, e_1, ..., e_n}
Polytope standard_simplex(int dim);
// the regular tetrahedron with vertices (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1)
Polytope regular_tetrahedron();
// conv{base, base + shift}; base is an (n-1)-dim box cross-section at height 0.
// An oblique prism whenever shift is not parallel to e_n.
Polytope prism(int dim, const Vec& shift, double base_half_width = 1.0);
// conv{base square at height 0, apex}
Polytope cone_body(int dim, const Vec& apex, double base_half_width = 1.0);

// hull of 4 * dim standard-normal points (retries degenerate draws)
Polytope random_hull(int dim, Rng& rng);
// canonical prism/cone with vertexwise uniform noise of the given amplitude
Polytope perturbed_prism(int dim, Rng& rng, double amplitude);
Polytope perturbed_cone(int dim, Rng& rng, double amplitude);

// Haar-ish random rotation (Gram-Schmidt of a Gaussian matrix), row-major.
std::vector<Vec> random_rotation(int dim, Rng& rng);

}  // namespace conevol::gen
