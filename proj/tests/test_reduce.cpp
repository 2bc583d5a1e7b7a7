#include <gtest/gtest.h>

#include "jbdet/errors.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/reduce.hpp"
#include "jbdet/sampling.hpp"

using namespace jbdet;

namespace {

const cplx I{0.0, 1.0};

HermMatrix diag3(cplx a, cplx b, cplx c) {
  const std::array<cplx, 3> d{a, b, c};
  return HermMatrix::diagonal(d, 3);
}

double outside_biq(const HermMatrix& x) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const CDElement e = x.entry(i, j);
      for (std::size_t k = 4; k < 8; ++k) worst = std::max(worst, std::abs(e[k]));
    }
  }
  return worst;
}

}  // namespace

TEST(Reduce, DiagonalInputIsLeftAlone) {
  const HermMatrix u = diag3(I, std::polar(1.0, 0.7), -1);
  const ReductionResult r = simultaneous_biq(u, c6_identity());
  EXPECT_LE((r.automorphism.map.matrix - LinearMap::identity(3, 3).matrix).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(r.certificate.worst_residual, 1e-12);
  EXPECT_LE(max_abs_diff(r.images[0], u), 1e-12);
}

TEST(Reduce, BiquaternionicInputStaysBiquaternionic) {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const HermMatrix u = random_unitary(rng, 2);
    const HermMatrix e = random_diagonal_unitary(rng);
    const ReductionResult r = simultaneous_biq(promote(u, 3), e);
    EXPECT_LE(outside_biq(r.images[0]), 1e-8);
    EXPECT_TRUE(is_diagonal(r.images[1], 1e-8));
  }
}

TEST(Reduce, OctonionicFrame) {
  Rng rng(62);
  for (int i = 0; i < 20; ++i) {
    const Frame f = random_frame(rng);
    const std::array<cplx, 3> a{rng.unit_complex(), rng.unit_complex(), rng.unit_complex()};
    const HermMatrix u = combine(f, a);
    const ReductionResult r = simultaneous_biq(u, c6_identity());
    EXPECT_LE(outside_biq(r.images[0]), 1e-8);
    EXPECT_LE(max_abs_diff(r.images[1], c6_identity()), 1e-8);
    EXPECT_TRUE(r.certificate.branch.has_value());
    EXPECT_FALSE(r.certificate.steps.empty());
  }
}

TEST(Reduce, NonDiagonalUnitIsRejected) {
  Rng rng(63);
  EXPECT_THROW(simultaneous_biq(random_unitary(rng), random_unitary(rng)), DomainError);
}

TEST(Reduce, SimultaneousQuat) {
  Rng rng(64);
  const HermMatrix a = diag3(1.0, -2.0, 0.5);
  const HermMatrix b = random_self_adjoint(rng, 3, 3);
  const ReductionResult r = simultaneous_quat(a, b, identity_auto());
  EXPECT_TRUE(is_diagonal(r.images[0], 1e-8));
  EXPECT_LE(outside_biq(r.images[1]), 1e-8);
}

TEST(Reduce, SingleDiagonalParts) {
  const HermMatrix x = diag3(cplx(1, 2), cplx(-1, 0.5), cplx(0, -3));
  const ReductionResult r = reduce_single(x);
  EXPECT_LE((r.automorphism.map.matrix - LinearMap::identity(3, 3).matrix).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Reduce, SingleWithHelper) {
  Rng rng(65);
  const HermMatrix b = random_self_adjoint(rng, 3, 2);
  const HermMatrix biq = promote(diag3(1.0, 2.0, -1.0), 3) + I * promote(b, 3);
  const C6Auto t = random_lifted_auto(rng);
  const HermMatrix x = t(biq);
  ASSERT_GT(outside_biq(x), 1e-3);
  const C6Auto helper = inverse(t);
  const ReductionResult r = reduce_single(x, &helper);
  EXPECT_LE(outside_biq(r.images[0]), 1e-8);
}

TEST(Reduce, CoverageFramesHitTheirBranch) {
  Rng rng(66);
  for (ReductionBranch b : kAllBranches) {
    const FrameReduction fr = reduce_frame(coverage_frame(rng, b));
    ASSERT_TRUE(fr.certificate.branch.has_value());
    EXPECT_EQ(*fr.certificate.branch, b) << case_path(b);
    EXPECT_LE(fr.certificate.worst_residual, kReduceTol);
  }
}
