#include <gtest/gtest.h>

#include "jbdet/c6_auto.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/minproj.hpp"
#include "jbdet/sampling.hpp"

using namespace jbdet;

namespace {

HermMatrix diag3(cplx a, cplx b, cplx c) {
  const std::array<cplx, 3> d{a, b, c};
  return HermMatrix::diagonal(d, 3);
}

}  // namespace

TEST(MinProj, Corner) {
  const HermMatrix q = build_min_projection({MinProjForm::corner});
  EXPECT_EQ(q.coords(), diag3(0, 0, 1).coords());
  EXPECT_EQ(classify_min_projection(q).params.form, MinProjForm::corner);
}

TEST(MinProj, FullWithUnitAlpha) {
  MinProjParams p{MinProjForm::full, 1.0};
  EXPECT_LE(max_abs_diff(build_min_projection(p), diag3(1, 0, 0)), 1e-15);
}

TEST(MinProj, FullWithHalfAlpha) {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    MinProjParams p{MinProjForm::full, 0.5, random_real_with_norm(rng, 3, std::sqrt(0.125)),
                    random_real_with_norm(rng, 3, std::sqrt(0.125))};
    EXPECT_LE(constraint_residual(p), 1e-12);
    const HermMatrix q = build_min_projection(p);
    EXPECT_TRUE(is_projection(q));
    EXPECT_EQ(peirce2_dim(q), 1);
    EXPECT_EQ(tripotent_rank(c6_identity() - q), 2);
  }
}

TEST(MinProj, RejectsBrokenConstraint) {
  MinProjParams p{MinProjForm::full, 0.5};
  EXPECT_THROW(build_min_projection(p), std::exception);
}

TEST(MinProj, BuildClassifyRoundTrip) {
  Rng rng(42);
  for (MinProjForm form : {MinProjForm::lower2x2, MinProjForm::full}) {
    for (int i = 0; i < 50; ++i) {
      const HermMatrix q = build_min_projection(random_min_proj_params(rng, form));
      const Classification c = classify_min_projection(q);
      HermMatrix back = build_min_projection_unchecked(c.params);
      if (c.swap_k != 0) back = exchange(back, c.swap_k, c.swap_l);
      EXPECT_LE(max_abs_diff(back, q), 1e-8);
    }
  }
}

TEST(MinProj, ScrambledProjectionsClassify) {
  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const C6Auto t = random_lifted_auto(rng);
    const HermMatrix q = t(diag3(1, 0, 0));
    const Classification c = classify_min_projection(q);
    EXPECT_LE(c.residual, 1e-8);
  }
}

TEST(MinProj, Reproducible) {
  Rng a(44), b(44);
  EXPECT_EQ(random_min_projection(a).coords(), random_min_projection(b).coords());
}

TEST(MinProj, Complement) {
  Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    const MinProjParams p = random_min_proj_params(rng, MinProjForm::full);
    const HermMatrix q = build_min_projection(p);
    const HermMatrix r = min_projection_complement(p);
    EXPECT_TRUE(is_projection(r));
    EXPECT_LE(max_abs_diff(jordan_mul(r, q), HermMatrix(3, 3)), 1e-10);
  }
}
