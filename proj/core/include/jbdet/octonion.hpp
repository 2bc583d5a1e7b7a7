#pragma once

#include <string>

#include <Eigen/Dense>

#include "jbdet/cd.hpp"
#include "jbdet/numkit.hpp"

namespace jbdet {

enum class OctonionKind { automorphism, asymmetric_triple_iso };

std::string to_string(OctonionKind k);

/// Real-linear map of the real octonions, acting on complex octonions by
/// complex-linear extension.
struct OctonionMap {
  Eigen::Matrix<double, 8, 8> matrix = Eigen::Matrix<double, 8, 8>::Identity();
  OctonionKind kind = OctonionKind::automorphism;

  CDElement operator()(const CDElement& x) const;
};

OctonionMap identity_octonion_map();
// outer after inner
OctonionMap compose(const OctonionMap& outer, const OctonionMap& inner);

// Quaternion halves of an octonion and the reverse.
CDElement first_half(const CDElement& x);
CDElement second_half(const CDElement& x);
CDElement from_halves(const CDElement& x1, const CDElement& x2);

/// (x1, x2) -> (x1 h1, x2 h2) for real unit quaternions h1, h2.
OctonionMap pair_multiplier(const CDElement& h1, const CDElement& h2, double tol = kDefaultTol);

enum class Permutation { P1, P2 };
OctonionMap permutation_auto(Permutation which);

// u with u y = x, and v with y v = x, for real octonions.
CDElement or_divide_left(const CDElement& x, const CDElement& y);
CDElement or_divide_right(const CDElement& x, const CDElement& y);

// T(u) real; asymmetric triple isomorphism.
OctonionMap canonicalize_a(const CDElement& u);
// T(u) in span{e0, e1}; automorphism.
OctonionMap canonicalize_b(const CDElement& u);
// T(e1) = e1 and T(u) in span{e0, e1, e2}; automorphism.
OctonionMap canonicalize_c(const CDElement& u);

// Worst residuals of the defining identities over random real octonions.
double octonion_automorphism_residual(const OctonionMap& t, Rng& rng, int samples = 64);
double octonion_triple_iso_residual(const OctonionMap& t, Rng& rng, int samples = 64);
double orthogonality_residual(const OctonionMap& t);

}  // namespace jbdet
