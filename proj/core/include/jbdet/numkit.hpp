#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "jbdet/cd.hpp"

namespace jbdet {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

inline constexpr double kClusterTol = 1e-6;

/// Complex polynomial, coefficients in ascending degree.
struct Polynomial {
  std::vector<cplx> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx operator()(cplx z) const;
  cplx leading() const { return coeffs.back(); }
  Polynomial derivative() const;
  // Drop leading coefficients with modulus <= tol.
  void trim(double tol = 0.0);
};

std::vector<cplx> eig(const MatrixXc& m);
cplx det_lu(const MatrixXc& m);
std::vector<double> singular_values(const MatrixXc& m);

std::vector<cplx> poly_roots(const Polynomial& p);
Polynomial poly_from_roots(std::span<const cplx> roots);
Polynomial poly_fit(std::span<const std::pair<cplx, cplx>> points);
VectorXc lstsq(const MatrixXc& a, const VectorXc& b);

bool cluster_equal(cplx a, cplx b, double rel = kClusterTol);

struct Cluster {
  cplx value;  // mean of the members
  int count;
};
std::vector<Cluster> cluster_values(std::span<const cplx> values, double rel = kClusterTol);

/// Seeded generator used for every random instance in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  cplx normal_complex();
  cplx unit_complex();
  int index(int n);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Deterministic seed for trial `index` of a run seeded with `seed`.
std::uint64_t subseed(std::uint64_t seed, std::uint64_t index);

}  // namespace jbdet
