#include <gtest/gtest.h>

#include "jbdet/biquat.hpp"
#include "jbdet/jordan.hpp"
#include "jbdet/sampling.hpp"

using namespace jbdet;

namespace {

const cplx I{0.0, 1.0};

HermMatrix diag3(cplx a, cplx b, cplx c, int level = 3) {
  const std::array<cplx, 3> d{a, b, c};
  return HermMatrix::diagonal(d, level);
}

double hat_diff(const HatMatrix& a, const HatMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

int rank_of(const LinearMap& p) {
  return static_cast<int>(std::lround(p.matrix.trace().real()));
}

}  // namespace

TEST(Biquat, HatBasis) {
  EXPECT_EQ(hat(CDElement::one(2)), Mat2C::Identity());
  Mat2C want;
  want << I, 0.0, 0.0, -I;
  EXPECT_EQ(hat(CDElement(2, {0.0, 1.0, 0.0, 0.0})), want);
}

TEST(Biquat, HatIsStarIsomorphism) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const CDElement x = random_cd(rng, 2), y = random_cd(rng, 2);
    EXPECT_LE(hat_diff(hat(x * y), hat(x) * hat(y)), 1e-12);
    EXPECT_LE(hat_diff(hat(cd_star(x)), hat(x).adjoint()), 1e-15);
    EXPECT_LE(max_abs_diff(unhat(hat(x)), x), 1e-15);
  }
}

TEST(Biquat, HatMatrix) {
  EXPECT_EQ(hat_matrix(HermMatrix::identity(3, 2)), HatMatrix::Identity(6, 6));
  const cplx l1 = 2.0, l2 = cplx(0, 1), l3 = cplx(-1, 3);
  const HatMatrix h = hat_matrix(diag3(l1, l2, l3, 2));
  HatMatrix want = HatMatrix::Zero(6, 6);
  want.diagonal() << l1, l1, l2, l2, l3, l3;
  EXPECT_EQ(h, want);
}

TEST(JordanMat, Products) {
  Rng rng(12);
  const HermMatrix x = random_herm(rng, 3, 3);
  EXPECT_LE(max_abs_diff(jordan_mul(c6_identity(), x), x), 1e-15);
  const HermMatrix p1 = diag3(1, 0, 0);
  EXPECT_EQ(max_abs_diff(jordan_mul(p1, p1), p1), 0.0);

  for (int i = 0; i < 50; ++i) {
    const HermMatrix a = random_herm(rng, 3, 2), b = random_herm(rng, 3, 2);
    const HatMatrix ha = hat_matrix(a), hb = hat_matrix(b);
    EXPECT_LE(hat_diff(hat_matrix(jordan_mul(a, b)), 0.5 * (ha * hb + hb * ha)), 1e-12);
  }
}

TEST(JordanMat, Triple) {
  Rng rng(13);
  const HermMatrix x = random_herm(rng, 3, 3);
  const HermMatrix one = c6_identity();
  EXPECT_LE(max_abs_diff(triple(one, x, one), star(x)), 1e-15);
  const HermMatrix u = diag3(I, 1, -1);
  EXPECT_LE(max_abs_diff(triple(u, u, u), u), 1e-15);

  for (int i = 0; i < 50; ++i) {
    const HermMatrix a = random_herm(rng, 3, 2), b = random_herm(rng, 3, 2), c = random_herm(rng, 3, 2);
    const HatMatrix ha = hat_matrix(a), hb = hat_matrix(b), hc = hat_matrix(c);
    const HatMatrix oracle = 0.5 * (ha * hb.adjoint() * hc + hc * hb.adjoint() * ha);
    EXPECT_LE(hat_diff(hat_matrix(triple(a, b, c)), oracle), 1e-12);
  }
}

TEST(JordanMat, Operators) {
  const HermMatrix one = c6_identity();
  const LinearMap l = op_L(one, one);
  EXPECT_LE((l.matrix - MatrixXc::Identity(27, 27)).cwiseAbs().maxCoeff(), 1e-15);

  Rng rng(14);
  const HermMatrix x = random_herm(rng, 3, 3);
  const HermMatrix q = op_Q(diag3(1, 0, 0))(x);
  EXPECT_LE(max_abs_diff(q, diag3(std::conj(x.diag(0)), 0, 0)), 1e-15);

  const HermMatrix u = diag3(I, std::polar(1.0, 0.4), -1);
  EXPECT_GT(std::abs(det_lu(op_U(u).matrix)), 0.5);
}

TEST(JordanMat, PeirceDimensions) {
  const PeirceProjections unit = peirce_projections(c6_identity());
  EXPECT_EQ(rank_of(unit.p2), 27);
  EXPECT_EQ(rank_of(unit.p1), 0);
  EXPECT_EQ(rank_of(unit.p0), 0);

  const PeirceProjections e1 = peirce_projections(diag3(1, 0, 0));
  EXPECT_EQ(rank_of(e1.p2), 1);
  EXPECT_EQ(rank_of(e1.p1), 16);
  EXPECT_EQ(rank_of(e1.p0), 10);

  const PeirceProjections e12 = peirce_projections(diag3(1, 1, 0));
  EXPECT_EQ(rank_of(e12.p2), 10);
  EXPECT_EQ(rank_of(e12.p1), 16);
  EXPECT_EQ(rank_of(e12.p0), 1);
}

TEST(JordanMat, Predicates) {
  const HermMatrix p = diag3(1, 0, 0);
  EXPECT_TRUE(is_projection(p));
  EXPECT_EQ(tripotent_rank(p), 1);

  const HermMatrix u = diag3(I, 1, -1);
  EXPECT_TRUE(is_unitary(u));
  EXPECT_TRUE(is_tripotent(u));
  EXPECT_FALSE(is_projection(u));
  EXPECT_EQ(tripotent_rank(u), 3);
  EXPECT_TRUE(is_orthogonal(diag3(1, 0, 0), diag3(0, 1, 0)));
}

TEST(JordanMat, CoordinatesAndMatrices) {
  Rng rng(15);
  const HermMatrix x = random_herm(rng, 3, 3);
  EXPECT_EQ(HermMatrix::from_matrix(x.to_matrix()).coords(), x.coords());
  EXPECT_TRUE(is_self_adjoint(random_self_adjoint(rng, 3, 3)));
  EXPECT_EQ(herm_dim(3, 3), 27);
  EXPECT_EQ(herm_dim(3, 2), 15);
  EXPECT_THROW(HermMatrix::from_matrix(random_herm(rng, 3, 3).to_matrix() + [&] {
                 CDMatrix m(3, 3);
                 m(0, 1) = CDElement::basis(3, 2);
                 return m;
               }()),
               std::exception);
}

TEST(JordanMat, StarAndIsotope) {
  Rng rng(16);
  const HermMatrix x = random_herm(rng, 3, 3), y = random_herm(rng, 3, 3);
  EXPECT_EQ(star(star(x)).coords(), x.coords());
  EXPECT_LE(max_abs_diff(isotope_mul(x, y, c6_identity()), jordan_mul(x, y)), 1e-14);
  EXPECT_LE(max_abs_diff(isotope_star(x, c6_identity()), star(x)), 1e-14);
}
