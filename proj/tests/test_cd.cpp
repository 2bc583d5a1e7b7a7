#include <gtest/gtest.h>

#include "jbdet/cd.hpp"
#include "jbdet/numkit.hpp"
#include "jbdet/octonion.hpp"
#include "jbdet/sampling.hpp"

using namespace jbdet;

namespace {

const cplx I{0.0, 1.0};

CDElement e(std::size_t j, cplx s = 1.0) { return CDElement::basis(3, j, s); }

bool same(const CDElement& a, const CDElement& b) {
  if (a.level() != b.level()) return false;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

}  // namespace

TEST(CdCore, SchemeProduct) {
  EXPECT_TRUE(same(e(1) * e(3), e(2)));
  EXPECT_TRUE(same(e(3) * e(2), e(1)));
  EXPECT_TRUE(same(e(2) * e(1), e(3)));
  EXPECT_TRUE(same(e(3) * e(1), e(2, -1.0)));
}

TEST(CdCore, UnitAndSquares) {
  Rng rng(1);
  for (int level = 0; level <= 4; ++level) {
    const CDElement x = random_cd(rng, level);
    EXPECT_TRUE(same(CDElement::one(level) * x, x));
    EXPECT_TRUE(same(x * CDElement::one(level), x));
  }
  for (std::size_t j = 1; j < 8; ++j) EXPECT_TRUE(same(e(j) * e(j), e(0, -1.0)));
  EXPECT_TRUE(same(e(5, I) * e(5, I), e(0)));
}

TEST(CdCore, Involutions) {
  for (std::size_t j = 1; j < 8; ++j) EXPECT_TRUE(same(cd_diamond(e(j)), e(j, -1.0)));
  EXPECT_TRUE(same(cd_diamond(e(0)), e(0)));
  EXPECT_TRUE(same(cd_star(e(1, I)), e(1, I)));
  Rng rng(2);
  const CDElement r = random_cd(rng, 3, true);
  EXPECT_TRUE(same(cd_conj(r), r));
  EXPECT_TRUE(r.is_real());
}

TEST(CdCore, InnerProductAndNorms) {
  for (std::size_t j = 0; j < 8; ++j) {
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(cd_inner(e(j), e(k)), cplx(j == k ? 1.0 : 0.0));
  }
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const CDElement r = random_cd(rng, 1 + i % 3, true);
    EXPECT_NEAR(cd_spin_norm(r), cd_norm2(r), 1e-13);
  }
  for (int i = 0; i < 100; ++i) {
    const int level = i % 4;
    const CDElement x = random_cd(rng, level), y = random_cd(rng, level);
    const CDElement form = 0.5 * (x * cd_star(y) + cd_conj(y) * cd_diamond(x));
    EXPECT_LE(max_abs_diff(form, CDElement::scalar(level, cd_inner(x, y))), 1e-12);
  }
}

TEST(CdCore, TripleProduct) {
  Rng rng(4);
  const CDElement x = random_cd(rng, 3);
  EXPECT_LE(max_abs_diff(cd_triple(CDElement::one(3), CDElement::one(3), x), x), 1e-15);
  EXPECT_LE(max_abs_diff(cd_triple(e(1), e(1), e(2)), e(2)), 1e-15);
  for (int i = 0; i < 50; ++i) {
    const CDElement a = random_cd(rng, 3), b = random_cd(rng, 3), c = random_cd(rng, 3);
    const CDElement oracle = 0.5 * ((a * cd_star(b)) * c + (c * cd_star(b)) * a);
    EXPECT_LE(max_abs_diff(cd_triple(a, b, c), oracle), 1e-12);
  }
}

TEST(CdCore, SignTableMatchesRecursion) {
  for (int level = 0; level <= 5; ++level) {
    const std::size_t n = std::size_t{1} << level;
    const signed char* t = cd_sign_table(level);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const CDElement p = cd_multiply_recursive(CDElement::basis(level, i), CDElement::basis(level, j));
        EXPECT_EQ(p[i ^ j], cplx(t[i * n + j])) << level << ' ' << i << ' ' << j;
        EXPECT_EQ(cd_basis_sign(level, i, j), t[i * n + j]);
      }
    }
  }
}

TEST(CdCore, SublevelsAndPromotion) {
  Rng rng(5);
  const CDElement q = random_cd(rng, 2);
  const CDElement o = promote(q, 3);
  EXPECT_TRUE(in_sublevel(o, 2, 0.0));
  EXPECT_FALSE(in_sublevel(o + e(4), 2));
  EXPECT_TRUE(same(demote(o, 2), q));
}

TEST(OctonionOps, PairMultipliers) {
  Rng rng(6);
  const CDElement one = CDElement::one(2);
  const OctonionMap id = pair_multiplier(one, one);
  EXPECT_LE((id.matrix - Eigen::Matrix<double, 8, 8>::Identity()).cwiseAbs().maxCoeff(), 1e-15);

  const OctonionMap aut = pair_multiplier(one, CDElement::basis(2, 1));
  EXPECT_EQ(aut.kind, OctonionKind::automorphism);
  EXPECT_LE(octonion_automorphism_residual(aut, rng, 64), 1e-12);

  const OctonionMap tri = pair_multiplier(CDElement::basis(2, 2), one);
  EXPECT_EQ(tri.kind, OctonionKind::asymmetric_triple_iso);
  EXPECT_LE(octonion_triple_iso_residual(tri, rng, 64), 1e-12);
}

TEST(OctonionOps, Permutations) {
  const OctonionMap p1 = permutation_auto(Permutation::P1);
  const OctonionMap p2 = permutation_auto(Permutation::P2);
  EXPECT_TRUE(same(p1(e(4)), e(2)));
  EXPECT_TRUE(same(p2(e(1)), e(4)));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      EXPECT_TRUE(same(p1(e(i) * e(j)), p1(e(i)) * p1(e(j))));
      EXPECT_TRUE(same(p2(e(i) * e(j)), p2(e(i)) * p2(e(j))));
    }
  }
}

TEST(OctonionOps, Division) {
  EXPECT_LE(max_abs_diff(or_divide_left(e(2), e(2)), e(0)), 1e-15);
  const CDElement u = or_divide_left(e(2), e(3));
  EXPECT_LE(max_abs_diff(u * e(3), e(2)), 1e-15);
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const CDElement x = random_cd(rng, 3, true), y = random_cd(rng, 3, true);
    EXPECT_LE(max_abs_diff(or_divide_left(x, y) * y, x), 1e-10);
    EXPECT_LE(max_abs_diff(y * or_divide_right(x, y), x), 1e-10);
  }
}

TEST(OctonionOps, Canonicalizations) {
  for (const OctonionMap& t : {canonicalize_a(e(0)), canonicalize_b(e(0)), canonicalize_c(e(0))}) {
    EXPECT_TRUE(in_sublevel(t(e(0)), 0, 1e-12));
  }
  const CDElement ta = canonicalize_a(e(5))(e(5));
  EXPECT_TRUE(in_sublevel(ta, 0, 1e-12));
  EXPECT_NEAR(std::abs(ta[0]), 1.0, 1e-12);

  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const CDElement u = random_cd(rng, 3, true);
    const OctonionMap tc = canonicalize_c(u);
    EXPECT_LE(max_abs_diff(tc(e(1)), e(1)), 1e-12);
    const CDElement im = tc(u);
    for (std::size_t k = 3; k < 8; ++k) EXPECT_LE(std::abs(im[k]), 1e-10);
    EXPECT_LE(orthogonality_residual(tc), 1e-12);

    const CDElement ib = canonicalize_b(u)(u);
    for (std::size_t k = 2; k < 8; ++k) EXPECT_LE(std::abs(ib[k]), 1e-10);
    EXPECT_NEAR(cd_norm2(ib), cd_norm2(u), 1e-12);
  }
}

TEST(OctonionOps, ComplexLinearExtension) {
  Rng rng(9);
  const OctonionMap t = canonicalize_c(random_cd(rng, 3, true));
  const CDElement x = random_cd(rng, 3, true), y = random_cd(rng, 3, true);
  EXPECT_LE(max_abs_diff(t(x + I * y), t(x) + I * t(y)), 1e-14);
}
