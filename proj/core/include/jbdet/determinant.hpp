#pragma once

#include <string>
#include <vector>

#include "jbdet/jordan.hpp"
#include "jbdet/numkit.hpp"

namespace jbdet {

enum class DtRoute { recursive, interpolated, sarrus, eigen_half };
std::string to_string(DtRoute r);

struct DtResult {
  cplx value;
  DtRoute route;
  double residual;  // |dt^2 - det(hat)| / max(1, |det(hat)|)
};

inline constexpr double kPivotRel = 1e-6;

/// dt_n on H_n(H_C) by Schur-complement recursion; pivots below
/// kPivotRel * (1 + max coordinate) switch to interpolation of
/// lambda -> dt(lambda 1 + x) at n+1 points. rng drives the rotation of the
/// sample points after a collision; a fixed internal seed is used when null.
DtResult dt_n(const HermMatrix& x, Rng* rng = nullptr);
cplx dt_value(const HermMatrix& x, Rng* rng = nullptr);

// Six ordered triple products; order 3 only.
cplx dt3_sarrus(const HermMatrix& x);

// lambda -> dt_n(lambda 1 - x), fitted from n+1 samples.
Polynomial char_poly(const HermMatrix& x);
// lambda -> dt_n(lambda y + x), fitted from n+1 samples.
Polynomial dt_pencil(const HermMatrix& x, const HermMatrix& y);

struct EigenHalf {
  bool even;            // every eigenvalue cluster of the hat matrix has even size
  cplx half_product;    // product of cluster values to half their multiplicity
  std::vector<Cluster> clusters;
};
EigenHalf eigen_half(const HermMatrix& x);

double hat_det_residual(const HermMatrix& x, cplx dt);

/// dt_{n,e}(x) = dt_n(v* x v*) with v the unitary square root of e.
/// Bit j of flip_mask negates the square root on the j-th spectral component.
cplx dt_relative(const HermMatrix& x, const HermMatrix& e, unsigned flip_mask = 0);

}  // namespace jbdet
