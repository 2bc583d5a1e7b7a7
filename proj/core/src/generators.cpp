#include "jbdet/generators.hpp"

#include <cmath>
#include <numbers>

#include "jbdet/determinant.hpp"
#include "jbdet/minproj.hpp"
#include "jbdet/sampling.hpp"

namespace jbdet {

namespace {

HermMatrix reflect(const HermMatrix& w, const HermMatrix& x) { return 2.0 * jordan_mul(jordan_mul(w, x), w) - x; }

HermMatrix random_reflection(Rng& rng, int level) {
  MinProjParams p = random_min_proj_params(rng, MinProjForm::full);
  if (level == 2) {
    p.a = promote(demote(p.a, 2), 3);
    p.b = promote(demote(p.b, 2), 3);
    const double n2 = std::pow(cd_norm2(p.a), 2) + std::pow(cd_norm2(p.b), 2);
    // Restore the constraint after dropping the upper half.
    const double scale = n2 > 0 ? std::sqrt((p.alpha - p.alpha * p.alpha) / n2) : 0.0;
    p.a = scale * p.a;
    p.b = scale * p.b;
  }
  HermMatrix q = build_min_projection(p);
  if (level == 2) q = demote(q, 2);
  return HermMatrix::identity(3, level) - 2.0 * q;
}

cplx random_eigen(Rng& rng, double zero_prob) {
  if (zero_prob > 0 && rng.uniform() < zero_prob) return 0.0;
  const double r = rng.uniform(0.1, 3.0);
  return std::polar(r, rng.uniform(-std::numbers::pi, std::numbers::pi));
}

}  // namespace

OctonionMap random_octonion_iso(Rng& rng, bool unital) {
  const CDElement h1 = unital ? CDElement::one(2) : random_unit_real(rng, 2);
  OctonionMap t = pair_multiplier(h1, random_unit_real(rng, 2));
  const int perms = rng.index(3);
  for (int i = 0; i < perms; ++i) {
    t = compose(permutation_auto(rng.index(2) == 0 ? Permutation::P1 : Permutation::P2), t);
  }
  return t;
}

RandomLift random_lift(Rng& rng) {
  static constexpr LiftVariant kVariants[] = {LiftVariant::base, LiftVariant::T1, LiftVariant::T2, LiftVariant::T3};
  OctonionMap t = random_octonion_iso(rng);
  return {std::move(t), kVariants[rng.index(4)]};
}

C6Auto random_lifted_auto(Rng& rng, int factors) {
  C6Auto a = identity_auto();
  for (int i = 0; i < factors; ++i) {
    const RandomLift l = random_lift(rng);
    a = compose(lift_auto(l.t, l.variant, "random"), a);
  }
  return a;
}

Frame diagonal_frame(int level) {
  Frame f{HermMatrix(3, level), HermMatrix(3, level), HermMatrix(3, level)};
  for (int j = 0; j < 3; ++j) f[static_cast<std::size_t>(j)].set_diag(j, 1.0);
  return f;
}

Frame random_frame(Rng& rng, int level, int reflections) {
  Frame f = diagonal_frame(level);
  for (int r = 0; r < reflections; ++r) {
    const HermMatrix w = random_reflection(rng, level);
    for (auto& q : f) q = reflect(w, q);
  }
  if (level == 3) {
    const RandomLift l = random_lift(rng);
    for (auto& q : f) q = apply_lift(l.t, l.variant, q);
  }
  return f;
}

HermMatrix combine(const Frame& f, const std::array<cplx, 3>& alpha) {
  HermMatrix x(3, f[0].level());
  for (std::size_t j = 0; j < 3; ++j) x += alpha[j] * f[j];
  return x;
}

HermMatrix random_unitary(Rng& rng, int level) {
  const Frame f = random_frame(rng, level);
  return combine(f, {rng.unit_complex(), rng.unit_complex(), rng.unit_complex()});
}

HermMatrix random_diagonal_unitary(Rng& rng, int level) {
  const std::array<cplx, 3> d{rng.unit_complex(), rng.unit_complex(), rng.unit_complex()};
  return HermMatrix::diagonal(d, level);
}

HermMatrix random_normal(Rng& rng, int level, double zero_prob) {
  const Frame f = random_frame(rng, level);
  return combine(f, {random_eigen(rng, zero_prob), random_eigen(rng, zero_prob), random_eigen(rng, zero_prob)});
}

HermMatrix random_self_adjoint_normal(Rng& rng, int level) {
  const Frame f = random_frame(rng, level);
  auto real_eigen = [&] {
    const double r = rng.uniform(0.1, 3.0);
    return cplx(rng.index(2) == 0 ? -r : r, 0.0);
  };
  return combine(f, {real_eigen(), real_eigen(), real_eigen()});
}

HermMatrix random_singular_biq(Rng& rng) {
  const HermMatrix x = random_herm(rng, 3, 2);
  const std::vector<cplx> roots = poly_roots(char_poly(x));
  return x - roots[static_cast<std::size_t>(rng.index(static_cast<int>(roots.size())))] * HermMatrix::identity(3, 2);
}

}  // namespace jbdet
