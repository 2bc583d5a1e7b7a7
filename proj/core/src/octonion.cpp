#include "jbdet/octonion.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "jbdet/errors.hpp"
#include "jbdet/sampling.hpp"

namespace jbdet {

namespace {

using Mat8 = Eigen::Matrix<double, 8, 8>;

void require_octonion(const CDElement& x, const char* op) {
  if (x.level() != 3) throw DomainError(std::string(op) + ": expected an octonion (level 3)");
}

void require_real(const CDElement& x, const char* op) {
  if (!x.is_real()) throw DomainError(std::string(op) + ": expected a real octonion");
}

OctonionMap from_columns(const std::array<CDElement, 8>& images) {
  OctonionMap t;
  for (int k = 0; k < 8; ++k) {
    for (int r = 0; r < 8; ++r) t.matrix(r, k) = images[k][r].real();
  }
  const bool unital = (t.matrix.col(0) - Mat8::Identity().col(0)).cwiseAbs().maxCoeff() <= 1e-12;
  t.kind = unital ? OctonionKind::automorphism : OctonionKind::asymmetric_triple_iso;
  return t;
}

// Unit quaternion h with q h real and positive; h = 1 when q vanishes.
CDElement rotate_to_real(const CDElement& q) {
  const double n = cd_norm2(q);
  if (n <= 1e-14) return CDElement::one(2);
  return cd_diamond(q) / n;
}

// Unit quaternion h with q h a positive multiple of e3.
CDElement rotate_to_e3(const CDElement& q) {
  const double n = cd_norm2(q);
  if (n <= 1e-14) return CDElement::one(2);
  return cd_multiply(cd_diamond(q), CDElement::basis(2, 3)) / n;
}

CDElement real_part(const CDElement& x) {
  CDElement r(x.level());
  for (std::size_t k = 0; k < x.dim(); ++k) r[k] = x[k].real();
  return r;
}

void require_nonzero(const CDElement& u, const char* op) {
  require_octonion(u, op);
  require_real(u, op);
  if (cd_norm2(u) <= 1e-14) throw DomainError(std::string(op) + ": u must be nonzero");
}

}  // namespace

std::string to_string(OctonionKind k) {
  return k == OctonionKind::automorphism ? "automorphism" : "asymmetric_triple_iso";
}

CDElement OctonionMap::operator()(const CDElement& x) const {
  require_octonion(x, "OctonionMap");
  Eigen::Matrix<cplx, 8, 1> v;
  for (int k = 0; k < 8; ++k) v(k) = x[k];
  const Eigen::Matrix<cplx, 8, 1> w = matrix.cast<cplx>() * v;
  CDElement r(3);
  for (int k = 0; k < 8; ++k) r[k] = w(k);
  return r;
}

OctonionMap identity_octonion_map() { return {}; }

OctonionMap compose(const OctonionMap& outer, const OctonionMap& inner) {
  OctonionMap t;
  t.matrix = outer.matrix * inner.matrix;
  const bool both = outer.kind == OctonionKind::automorphism && inner.kind == OctonionKind::automorphism;
  const bool unital = (t.matrix.col(0) - Mat8::Identity().col(0)).cwiseAbs().maxCoeff() <= 1e-12;
  t.kind = both || unital ? OctonionKind::automorphism : OctonionKind::asymmetric_triple_iso;
  return t;
}

CDElement first_half(const CDElement& x) {
  require_octonion(x, "first_half");
  CDElement q(2);
  for (int k = 0; k < 4; ++k) q[k] = x[k];
  return q;
}

CDElement second_half(const CDElement& x) {
  require_octonion(x, "second_half");
  CDElement q(2);
  for (int k = 0; k < 4; ++k) q[k] = x[k + 4];
  return q;
}

CDElement from_halves(const CDElement& x1, const CDElement& x2) {
  if (x1.level() != 2 || x2.level() != 2) throw DomainError("from_halves: expected quaternions");
  CDElement x(3);
  for (int k = 0; k < 4; ++k) {
    x[k] = x1[k];
    x[k + 4] = x2[k];
  }
  return x;
}

OctonionMap pair_multiplier(const CDElement& h1, const CDElement& h2, double tol) {
  for (const CDElement* h : {&h1, &h2}) {
    if (h->level() != 2 || !h->is_real(tol)) throw DomainError("pair_multiplier: factors must be real quaternions");
    if (std::abs(cd_norm2(*h) - 1.0) > tol) throw DomainError("pair_multiplier: factors must have norm one");
  }
  std::array<CDElement, 8> images;
  for (std::size_t k = 0; k < 8; ++k) {
    const CDElement e = CDElement::basis(3, k);
    images[k] = from_halves(cd_multiply(first_half(e), h1), cd_multiply(second_half(e), h2));
  }
  OctonionMap t = from_columns(images);
  if (approx_equal(h1, CDElement::one(2), tol)) t.kind = OctonionKind::automorphism;
  return t;
}

OctonionMap permutation_auto(Permutation which) {
  static constexpr std::array<int, 8> p1 = {0, 1, 7, 6, 2, 3, 5, 4};
  static constexpr std::array<int, 8> p2 = {0, 4, 7, 3, 6, 2, 1, 5};
  const auto& p = which == Permutation::P1 ? p1 : p2;
  OctonionMap t;
  t.matrix.setZero();
  for (int k = 0; k < 8; ++k) t.matrix(p[k], k) = 1.0;
  t.kind = OctonionKind::automorphism;
  return t;
}

CDElement or_divide_left(const CDElement& x, const CDElement& y) {
  require_octonion(x, "or_divide_left");
  require_octonion(y, "or_divide_left");
  require_real(x, "or_divide_left");
  require_real(y, "or_divide_left");
  const double n = cd_norm2(y);
  if (n == 0.0) throw SingularError("or_divide_left: division by zero");
  return cd_multiply(x, cd_diamond(y)) / (n * n);
}

CDElement or_divide_right(const CDElement& x, const CDElement& y) {
  require_octonion(x, "or_divide_right");
  require_octonion(y, "or_divide_right");
  require_real(x, "or_divide_right");
  require_real(y, "or_divide_right");
  const double n = cd_norm2(y);
  if (n == 0.0) throw SingularError("or_divide_right: division by zero");
  return cd_multiply(cd_diamond(y), x) / (n * n);
}

OctonionMap canonicalize_a(const CDElement& u) {
  require_nonzero(u, "canonicalize_a");
  const CDElement ur = real_part(u);
  const OctonionMap t1 = pair_multiplier(rotate_to_real(first_half(ur)), rotate_to_real(second_half(ur)));
  const OctonionMap p1 = permutation_auto(Permutation::P1);
  const CDElement v = p1(t1(ur));
  const OctonionMap t2 = pair_multiplier(rotate_to_real(first_half(v)), CDElement::one(2));
  return compose(t2, compose(p1, t1));
}

OctonionMap canonicalize_b(const CDElement& u) {
  require_nonzero(u, "canonicalize_b");
  const CDElement ur = real_part(u);
  const CDElement one = CDElement::one(2);
  const OctonionMap p1 = permutation_auto(Permutation::P1);
  const OctonionMap p2 = permutation_auto(Permutation::P2);

  const OctonionMap t1 = pair_multiplier(one, rotate_to_real(second_half(ur)));
  OctonionMap t = compose(p2, t1);
  const OctonionMap t2 = pair_multiplier(one, rotate_to_e3(second_half(t(ur))));
  t = compose(p1, compose(t2, t));
  const OctonionMap t3 = pair_multiplier(one, rotate_to_real(second_half(t(ur))));
  t = compose(p1, compose(t3, t));
  // The chain above lands in span{e0, e2}; P2^2 P1^2 carries e2 to e1.
  const OctonionMap swap = compose(compose(p2, p2), compose(p1, p1));
  return compose(swap, t);
}

OctonionMap canonicalize_c(const CDElement& u) {
  require_nonzero(u, "canonicalize_c");
  const CDElement ur = real_part(u);
  const CDElement one = CDElement::one(2);
  const OctonionMap p1 = permutation_auto(Permutation::P1);

  const OctonionMap t1 = pair_multiplier(one, rotate_to_e3(second_half(ur)));
  OctonionMap t = compose(p1, t1);
  const OctonionMap t2 = pair_multiplier(one, rotate_to_real(second_half(t(ur))));
  return compose(p1, compose(t2, t));
}

double octonion_automorphism_residual(const OctonionMap& t, Rng& rng, int samples) {
  double worst = 0;
  const CDElement one = CDElement::one(3);
  worst = std::max(worst, max_abs_diff(t(one), one));
  for (int s = 0; s < samples; ++s) {
    const CDElement x = random_cd(rng, 3, true);
    const CDElement y = random_cd(rng, 3, true);
    worst = std::max(worst, max_abs_diff(t(cd_multiply(x, y)), cd_multiply(t(x), t(y))));
    worst = std::max(worst, max_abs_diff(t(cd_diamond(x)), cd_diamond(t(x))));
  }
  return worst;
}

double octonion_triple_iso_residual(const OctonionMap& t, Rng& rng, int samples) {
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    const CDElement x = random_cd(rng, 3, true);
    const CDElement y = random_cd(rng, 3, true);
    const CDElement z = random_cd(rng, 3, true);
    const CDElement lhs = t(cd_multiply(cd_multiply(x, cd_diamond(y)), z));
    const CDElement rhs = cd_multiply(cd_multiply(t(x), cd_diamond(t(y))), t(z));
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

double orthogonality_residual(const OctonionMap& t) {
  return (t.matrix.transpose() * t.matrix - Mat8::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace jbdet
