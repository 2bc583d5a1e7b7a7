#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jbdet/jordan.hpp"

namespace jbdet {

struct SpectralResolution {
  HermMatrix base_unitary;
  std::vector<cplx> eigenvalues;  // distinct, sorted by (real, imag)
  std::vector<HermMatrix> components;
  std::vector<int> multiplicities;
  double residual = 0.0;  // sup |x - sum alpha_j u_j|
};

inline constexpr double kMinPolyTol = 1e-8;
inline constexpr double kReconstructTol = 1e-7;

// x and its e-adjoint operator-commute in the e-isotope (1 when e is empty).
double normality_residual(const HermMatrix& x, const std::optional<HermMatrix>& e = std::nullopt);
bool is_normal(const HermMatrix& x, const std::optional<HermMatrix>& e = std::nullopt, double tol = 1e-8);

/// Functional calculus on the subalgebra generated by x in the e-isotope:
/// minimal polynomial degree from isotope powers, components as
/// eigenprojections of z -> {z, e, x} on the span of those powers (polished
/// to projections of the isotope), and
/// multiplicities from Peirce-2 dimensions.
SpectralResolution spectral_decompose(const HermMatrix& x, const std::optional<HermMatrix>& e = std::nullopt);

// sum of sqrt(alpha_j) u_j, principal branch; bit j of flip_mask negates
// the j-th term.
HermMatrix unitary_sqrt(const HermMatrix& u, const std::optional<HermMatrix>& e = std::nullopt,
                        unsigned flip_mask = 0);

cplx dt_unitary(const HermMatrix& u, const std::optional<HermMatrix>& e = std::nullopt);

enum class DtGeneralRoute { biquaternionic, self_adjoint, normal, supplied_automorphism };
std::string to_string(DtGeneralRoute r);

struct C6DtResult {
  cplx value;
  DtGeneralRoute route;
};

/// dt on C6 (or on H_3(H_C)). `reducer`, when given, must map x to a matrix
/// with biquaternionic entries.
C6DtResult dt_general(const HermMatrix& x, const LinearMap* reducer = nullptr);

inline constexpr double kZeroEigen = 1e-8;

HermMatrix range_tripotent(const HermMatrix& x);
HermMatrix jordan_inverse(const HermMatrix& x);
bool is_invertible(const HermMatrix& x);

}  // namespace jbdet
