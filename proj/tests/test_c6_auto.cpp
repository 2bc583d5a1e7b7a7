#include <gtest/gtest.h>

#include "jbdet/c6_auto.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/octonion.hpp"
#include "jbdet/sampling.hpp"

using namespace jbdet;

namespace {

const cplx I{0.0, 1.0};

HermMatrix diag3(cplx a, cplx b, cplx c) {
  const std::array<cplx, 3> d{a, b, c};
  return HermMatrix::diagonal(d, 3);
}

double map_diff(const LinearMap& a, const LinearMap& b) { return (a.matrix - b.matrix).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(C6Auto, Exchange) {
  const C6Auto u12 = exchange_auto(1, 2);
  EXPECT_LE(max_abs_diff(u12(diag3(2, I, -3)), diag3(I, 2, -3)), 1e-15);
  EXPECT_LE(map_diff(compose(u12, u12).map, LinearMap::identity(3, 3)), 1e-15);

  Rng rng(51);
  const HermMatrix s = exchange_symmetry(1, 2);
  for (int i = 0; i < 20; ++i) {
    const HermMatrix x = random_herm(rng, 3, 3);
    EXPECT_LE(max_abs_diff(u12(x), triple(s, star(x), s)), 1e-12);
    EXPECT_LE(max_abs_diff(u12(x), exchange(x, 1, 2)), 1e-15);
  }
}

TEST(C6Auto, IdentityLift) {
  const C6Auto id = lift_auto(identity_octonion_map());
  EXPECT_LE(map_diff(id.map, LinearMap::identity(3, 3)), 1e-15);
}

TEST(C6Auto, AutomorphismLiftIsEntrywise) {
  const OctonionMap t = pair_multiplier(CDElement::one(2), CDElement::basis(2, 1));
  Rng rng(52);
  const HermMatrix x = random_herm(rng, 3, 3);
  const HermMatrix y = lift_auto(t)(x);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(y.diag(i), x.diag(i));
    for (int j = i + 1; j < 3; ++j) EXPECT_LE(max_abs_diff(y.entry(i, j), t(x.entry(i, j))), 1e-14);
  }
}

TEST(C6Auto, TripleIsoLiftPreservesJordanProducts) {
  const OctonionMap t = pair_multiplier(CDElement::basis(2, 2), CDElement::basis(2, 3));
  Rng rng(53);
  for (LiftVariant v : {LiftVariant::base, LiftVariant::T1, LiftVariant::T2, LiftVariant::T3}) {
    const C6Auto a = lift_auto(t, v);
    for (int i = 0; i < 25; ++i) {
      const HermMatrix x = random_herm(rng, 3, 3), y = random_herm(rng, 3, 3);
      EXPECT_LE(max_abs_diff(a(jordan_mul(x, y)), jordan_mul(a(x), a(y))), 1e-9) << to_string(v);
    }
    const KindReport k = verify_kind(a, rng);
    EXPECT_EQ(k.derived, AutoKind::jordan_star_auto);
  }
}

TEST(C6Auto, Shift) {
  EXPECT_LE(map_diff(shift_auto(c6_identity()).map, LinearMap::identity(3, 3)), 1e-15);
  const C6Auto t = shift_auto(diag3(I, 1, 1));
  EXPECT_LE(max_abs_diff(t(c6_identity()), diag3(-1, 1, 1)), 1e-15);
  EXPECT_EQ(t.kind, AutoKind::triple_auto);

  Rng rng(54);
  const HermMatrix u = random_unitary(rng);
  const C6Auto s = shift_auto(u);
  for (int i = 0; i < 20; ++i) {
    const HermMatrix x = random_herm(rng, 3, 3), y = random_herm(rng, 3, 3), z = random_herm(rng, 3, 3);
    EXPECT_LE(max_abs_diff(s(triple(x, y, z)), triple(s(x), s(y), s(z))), 1e-9);
  }
  const C6Auto back = compose(shift_auto(u), shift_auto(star(u)));
  EXPECT_LE(max_abs_diff(back(c6_identity()), c6_identity()), 1e-9);
  EXPECT_EQ(verify_kind(C6Auto{back.map, AutoKind::jordan_star_auto, {}}, rng).derived, AutoKind::jordan_star_auto);
}

TEST(C6Auto, Composition) {
  Rng rng(55);
  C6Auto a = identity_auto();
  for (int i = 0; i < 6; ++i) {
    const RandomLift l = random_lift(rng);
    a = compose(lift_auto(l.t, l.variant), a);
  }
  EXPECT_EQ(verify_kind(a, rng).derived, AutoKind::jordan_star_auto);
  EXPECT_LE(map_diff(compose(inverse(a), a).map, LinearMap::identity(3, 3)), 1e-9);
}

TEST(C6Auto, LiftsPreserveDiagonal) {
  Rng rng(56);
  const HermMatrix d = diag3(2, I, -0.5);
  for (int i = 0; i < 10; ++i) {
    const RandomLift l = random_lift(rng);
    EXPECT_LE(max_abs_diff(apply_lift(l.t, l.variant, d), d), 1e-14);
  }
}
