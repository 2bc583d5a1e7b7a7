#include <algorithm>
#include <numbers>

#include <gtest/gtest.h>

#include "jbdet/numkit.hpp"

using namespace jbdet;

namespace {

bool contains(const std::vector<cplx>& v, cplx z, double tol) {
  return std::any_of(v.begin(), v.end(), [&](cplx w) { return std::abs(w - z) <= tol; });
}

}  // namespace

TEST(Numkit, Eigenvalues) {
  const std::vector<cplx> id = eig(MatrixXc::Identity(4, 4));
  ASSERT_EQ(id.size(), 4u);
  for (const cplx& z : id) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-14);

  MatrixXc d = MatrixXc::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = cplx(0, 3);
  const std::vector<cplx> de = eig(d);
  EXPECT_TRUE(contains(de, 2.0, 1e-14));
  EXPECT_TRUE(contains(de, cplx(0, 3), 1e-14));

  MatrixXc companion(2, 2);
  companion << 0.0, 1.0, 1.0, 0.0;
  const std::vector<cplx> ce = eig(companion);
  EXPECT_TRUE(contains(ce, 1.0, 1e-14));
  EXPECT_TRUE(contains(ce, -1.0, 1e-14));
}

TEST(Numkit, Determinant) {
  EXPECT_EQ(det_lu(MatrixXc::Identity(5, 5)), cplx(1.0));
  MatrixXc m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  EXPECT_NEAR(std::abs(det_lu(m) - cplx(-2.0)), 0.0, 1e-14);
}

TEST(Numkit, RootsOfUnity) {
  const Polynomial p{{-1.0, 0.0, 0.0, 1.0}};
  const std::vector<cplx> r = poly_roots(p);
  ASSERT_EQ(r.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(contains(r, std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0), 1e-10));
}

TEST(Numkit, FitReproducesCubic) {
  std::vector<std::pair<cplx, cplx>> pts;
  for (int k = 0; k < 4; ++k) {
    const cplx z = std::polar(1.5, 0.3 + k);
    pts.emplace_back(z, z * z * z + 2.0);
  }
  const Polynomial p = poly_fit(pts);
  ASSERT_EQ(p.degree(), 3);
  EXPECT_NEAR(std::abs(p.coeffs[0] - 2.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(p.coeffs[1]), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(p.coeffs[2]), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(p.coeffs[3] - 1.0), 0.0, 1e-10);
}

TEST(Numkit, FromRootsRoundTrip) {
  const std::vector<cplx> roots{1.0, cplx(0, 2), cplx(-1, 1)};
  const Polynomial p = poly_from_roots(roots);
  EXPECT_EQ(p.leading(), cplx(1.0));
  for (const cplx& z : roots) EXPECT_NEAR(std::abs(p(z)), 0.0, 1e-13);
  const std::vector<cplx> back = poly_roots(p);
  for (const cplx& z : roots) EXPECT_TRUE(contains(back, z, 1e-10));
}

TEST(Numkit, Clustering) {
  const std::vector<cplx> v{1.0, 1.0 + 1e-9, 2.0, cplx(0, 1), cplx(0, 1 + 1e-8)};
  const std::vector<Cluster> c = cluster_values(v);
  ASSERT_EQ(c.size(), 3u);
  int total = 0;
  for (const auto& cl : c) total += cl.count;
  EXPECT_EQ(total, 5);
  EXPECT_TRUE(cluster_equal(1.0, 1.0 + 1e-9));
  EXPECT_FALSE(cluster_equal(1.0, 1.001));
}

TEST(Numkit, LeastSquaresAndSvd) {
  MatrixXc a(3, 2);
  a << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
  VectorXc b(3);
  b << 2.0, cplx(0, 1), 5.0;
  const VectorXc x = lstsq(a, b);
  EXPECT_NEAR(std::abs(x(0) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(x(1) - cplx(0, 1)), 0.0, 1e-14);
  const std::vector<double> sv = singular_values(a);
  ASSERT_EQ(sv.size(), 2u);
  EXPECT_NEAR(sv[0], 1.0, 1e-14);
}

TEST(Numkit, SeededDeterminism) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.normal_complex(), b.normal_complex());
  EXPECT_NE(subseed(7, 0), subseed(7, 1));
  EXPECT_EQ(subseed(7, 3), subseed(7, 3));
}
