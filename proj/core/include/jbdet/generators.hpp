#pragma once

#include <array>

#include "jbdet/c6_auto.hpp"
#include "jbdet/jordan.hpp"
#include "jbdet/numkit.hpp"
#include "jbdet/octonion.hpp"

namespace jbdet {

// Random composition of pair multipliers and permutation automorphisms.
OctonionMap random_octonion_iso(Rng& rng, bool unital = false);
struct RandomLift {
  OctonionMap t;
  LiftVariant variant;
};
RandomLift random_lift(Rng& rng);
C6Auto random_lifted_auto(Rng& rng, int factors = 2);

using Frame = std::array<HermMatrix, 3>;

// The diagonal frame moved by `reflections` symmetries 1 - 2q with q a
// random full-form minimal projection. Level 2 keeps every entry
// biquaternionic; level 3 also applies a random lifted automorphism.
Frame random_frame(Rng& rng, int level = 3, int reflections = 2);
Frame diagonal_frame(int level = 3);

HermMatrix combine(const Frame& f, const std::array<cplx, 3>& alpha);

HermMatrix random_unitary(Rng& rng, int level = 3);
HermMatrix random_diagonal_unitary(Rng& rng, int level = 3);
// Eigenvalues are exactly 0 (with probability zero_prob each) or have
// modulus in [0.1, 3].
HermMatrix random_normal(Rng& rng, int level = 3, double zero_prob = 0.0);
HermMatrix random_self_adjoint_normal(Rng& rng, int level = 3);
// x - lambda 1 for a root lambda of the characteristic polynomial of a
// random biquaternionic x.
HermMatrix random_singular_biq(Rng& rng);

}  // namespace jbdet
