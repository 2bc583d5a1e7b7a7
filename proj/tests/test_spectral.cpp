#include <gtest/gtest.h>

#include "jbdet/errors.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/jordan.hpp"
#include "jbdet/sampling.hpp"
#include "jbdet/spectral.hpp"

using namespace jbdet;

namespace {

const cplx I{0.0, 1.0};

HermMatrix diag3(cplx a, cplx b, cplx c) {
  const std::array<cplx, 3> d{a, b, c};
  return HermMatrix::diagonal(d, 3);
}

}  // namespace

TEST(Spectral, RepeatedEigenvalue) {
  const SpectralResolution s = spectral_decompose(diag3(5, 5, 2));
  ASSERT_EQ(s.eigenvalues.size(), 2u);
  EXPECT_LE(std::abs(s.eigenvalues[0] - 2.0), 1e-12);
  EXPECT_LE(std::abs(s.eigenvalues[1] - 5.0), 1e-12);
  EXPECT_EQ(s.multiplicities, (std::vector<int>{1, 2}));
  EXPECT_LE(max_abs_diff(s.components[0], diag3(0, 0, 1)), 1e-12);
  EXPECT_LE(max_abs_diff(s.components[1], diag3(1, 1, 0)), 1e-12);
}

TEST(Spectral, DistinctUnimodular) {
  const SpectralResolution s = spectral_decompose(diag3(1, I, -1));
  ASSERT_EQ(s.eigenvalues.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(std::abs(s.eigenvalues[j]), 1.0, 1e-12);
    EXPECT_EQ(s.multiplicities[j], 1);
    EXPECT_TRUE(is_projection(s.components[j]));
    EXPECT_TRUE(is_diagonal(s.components[j], 1e-12));
  }
  EXPECT_LE(s.residual, 1e-12);
}

TEST(Spectral, NearlyEqualEigenvalues) {
  Rng rng(31);
  for (double gap : {1e-3, 1e-5, 3e-6}) {
    for (int i = 0; i < 10; ++i) {
      const Frame f = random_frame(rng);
      const std::array<cplx, 3> a{std::polar(1.0, 0.3), std::polar(1.0, 1.9), std::polar(1.0, 1.9 + gap)};
      const SpectralResolution s = spectral_decompose(combine(f, a));
      ASSERT_EQ(s.eigenvalues.size(), 3u) << gap;
      for (int m : s.multiplicities) EXPECT_EQ(m, 1);
      EXPECT_LE(s.residual, 1e-9);
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_LE(projection_residual(s.components[j]), 1e-12);
        for (std::size_t k = j + 1; k < 3; ++k) {
          EXPECT_LE(max_abs_diff(jordan_mul(s.components[j], s.components[k]), HermMatrix(3, 3)), 1e-9) << gap;
        }
      }
    }
  }
}

TEST(Spectral, Sqrt) {
  EXPECT_LE(max_abs_diff(unitary_sqrt(c6_identity()), c6_identity()), 1e-12);
  EXPECT_LE(max_abs_diff(unitary_sqrt(diag3(-1, 1, 1)), diag3(I, 1, 1)), 1e-12);
  Rng rng(32);
  for (int i = 0; i < 20; ++i) {
    const HermMatrix u = random_unitary(rng);
    const HermMatrix v = unitary_sqrt(u);
    EXPECT_LE(max_abs_diff(jordan_mul(v, v), u), 1e-8);
  }
}

TEST(Spectral, DtUnitary) {
  EXPECT_LE(std::abs(dt_unitary(diag3(I, I, I)) - (-I)), 1e-12);
  const double t1 = 0.4, t2 = -1.3, t3 = 2.2;
  EXPECT_LE(std::abs(dt_unitary(diag3(std::polar(1.0, t1), std::polar(1.0, t2), std::polar(1.0, t3))) -
                     std::polar(1.0, t1 + t2 + t3)),
            1e-12);
}

TEST(Spectral, DtGeneral) {
  EXPECT_LE(std::abs(dt_general(HermMatrix(3, 3)).value), 1e-15);
  const C6DtResult d = dt_general(diag3(2, -1, 3));
  EXPECT_LE(std::abs(d.value - (-6.0)), 1e-12);

  Rng rng(33);
  const HermMatrix x = random_normal(rng);
  const C6DtResult n = dt_general(x);
  EXPECT_EQ(n.route, DtGeneralRoute::normal);
  EXPECT_GT(std::abs(n.value), 1e-8);
  EXPECT_TRUE(is_invertible(x));
  EXPECT_GT(std::abs(det_lu(op_U(x).matrix)), 0.0);
}

TEST(Spectral, SingularAndInverse) {
  const HermMatrix x = diag3(3, 0, 0);
  EXPECT_LE(max_abs_diff(range_tripotent(x), diag3(1, 0, 0)), 1e-12);
  EXPECT_FALSE(is_invertible(x));
  EXPECT_LE(std::abs(dt_general(x).value), 1e-15);

  const HermMatrix y = diag3(2.0 * I, 1, 1);
  const HermMatrix inv = jordan_inverse(y);
  EXPECT_LE(max_abs_diff(inv, diag3(-0.5 * I, 1, 1)), 1e-12);
  EXPECT_LE(max_abs_diff(jordan_mul(y, inv), c6_identity()), 1e-12);
  EXPECT_LE(max_abs_diff(jordan_mul(jordan_mul(y, y), inv), y), 1e-12);
}

TEST(Spectral, UnsupportedGeneralElement) {
  Rng rng(34);
  HermMatrix x = random_herm(rng, 3, 3);
  EXPECT_THROW(dt_general(x), UnsupportedError);
}
