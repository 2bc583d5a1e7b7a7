#include "jbdet/c6_auto.hpp"

#include <algorithm>

#include "jbdet/errors.hpp"
#include "jbdet/sampling.hpp"

namespace jbdet {

namespace {

constexpr double kUnitTol = 1e-9;

void require_c6(const HermMatrix& x, const char* op) {
  if (x.order() != 3 || x.level() != 3) throw DomainError(std::string(op) + ": expected an element of C6");
}

double rel_diff(const HermMatrix& got, const HermMatrix& want) {
  return max_abs_diff(got, want) / std::max(1.0, sup_norm(want));
}

}  // namespace

std::string to_string(AutoKind k) {
  return k == AutoKind::jordan_star_auto ? "jordan_star_auto" : "triple_auto";
}

std::string to_string(LiftVariant v) {
  switch (v) {
    case LiftVariant::base: return "base";
    case LiftVariant::T1: return "T1";
    case LiftVariant::T2: return "T2";
    case LiftVariant::T3: return "T3";
  }
  return "unknown";
}

C6Auto identity_auto(int order, int level) {
  return {LinearMap::identity(order, level), AutoKind::jordan_star_auto, {}};
}

HermMatrix exchange_symmetry(int k, int l, int order, int level) {
  if (k == l || k < 1 || l < 1 || k > order || l > order) {
    throw DomainError("exchange: indices must be distinct and in 1.." + std::to_string(order));
  }
  HermMatrix u(order, level);
  for (int i = 0; i < order; ++i) {
    if (i != k - 1 && i != l - 1) u.set_diag(i, 1.0);
  }
  const int lo = std::min(k, l) - 1, hi = std::max(k, l) - 1;
  u.set_entry(lo, hi, CDElement::one(level));
  return u;
}

HermMatrix exchange(const HermMatrix& x, int k, int l) {
  const int n = x.order();
  if (k == l || k < 1 || l < 1 || k > n || l > n) {
    throw DomainError("exchange: indices must be distinct and in 1.." + std::to_string(n));
  }
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
  std::swap(sigma[static_cast<std::size_t>(k - 1)], sigma[static_cast<std::size_t>(l - 1)]);
  HermMatrix r(n, x.level());
  for (int i = 0; i < n; ++i) {
    const int si = sigma[static_cast<std::size_t>(i)];
    r.set_diag(i, x.diag(si));
    for (int j = i + 1; j < n; ++j) r.set_entry(i, j, x.entry(si, sigma[static_cast<std::size_t>(j)]));
  }
  return r;
}

C6Auto exchange_auto(int k, int l, int order, int level) {
  exchange_symmetry(k, l, order, level);
  LinearMap m = materialize(order, level, false, [&](const HermMatrix& x) { return exchange(x, k, l); });
  return {std::move(m), AutoKind::jordan_star_auto,
          {"U(" + std::to_string(k) + "," + std::to_string(l) + ")"}};
}

HermMatrix apply_lift(const OctonionMap& t, LiftVariant v, const HermMatrix& x) {
  require_c6(x, "apply_lift");
  const CDElement t1d = cd_diamond(t(CDElement::one(3)));
  const CDElement t1 = t(CDElement::one(3));
  const CDElement a = x.entry(0, 1), b = x.entry(0, 2), c = x.entry(1, 2);
  auto td = [&](const CDElement& y) { return cd_diamond(t(cd_diamond(y))); };
  HermMatrix r = x;
  switch (v) {
    case LiftVariant::base:
      r.set_entry(0, 1, t(a));
      r.set_entry(0, 2, t(b) * t1d);
      r.set_entry(1, 2, td(c));
      break;
    case LiftVariant::T1:
      r.set_entry(0, 1, t(a));
      r.set_entry(0, 2, t1 * td(b));
      r.set_entry(1, 2, td(c));
      break;
    case LiftVariant::T2:
      r.set_entry(0, 1, td(a));
      r.set_entry(0, 2, td(b));
      r.set_entry(1, 2, t(c) * t1d);
      break;
    case LiftVariant::T3:
      r.set_entry(0, 1, t(a) * t1d);
      r.set_entry(0, 2, t(b));
      r.set_entry(1, 2, t(c));
      break;
  }
  return r;
}

C6Auto lift_auto(const OctonionMap& t, LiftVariant v, const std::string& label) {
  Rng rng(0x11f7'a0c6ULL);
  if (orthogonality_residual(t) > 1e-9 || octonion_triple_iso_residual(t, rng, 16) > 1e-9) {
    throw DomainError("lift_auto: map is not an isometric asymmetric triple isomorphism");
  }
  LinearMap m = materialize(3, 3, false, [&](const HermMatrix& x) { return apply_lift(t, v, x); });
  return {std::move(m), AutoKind::jordan_star_auto, {"lift[" + to_string(v) + "](" + label + ")"}};
}

C6Auto shift_auto(const HermMatrix& u) {
  if (!is_unitary(u)) throw DomainError("shift_auto: argument is not unitary");
  const HermMatrix one = HermMatrix::identity(u.order(), u.level());
  const bool unital = max_abs_diff(jordan_mul(u, u), one) <= kUnitTol;
  return {op_U(u), unital ? AutoKind::jordan_star_auto : AutoKind::triple_auto, {"shift"}};
}

C6Auto compose(const C6Auto& outer, const C6Auto& inner) {
  C6Auto r{compose(outer.map, inner.map), AutoKind::triple_auto, inner.provenance};
  r.provenance.insert(r.provenance.end(), outer.provenance.begin(), outer.provenance.end());
  if (outer.kind == AutoKind::jordan_star_auto && inner.kind == AutoKind::jordan_star_auto) {
    r.kind = AutoKind::jordan_star_auto;
  } else {
    const HermMatrix one = HermMatrix::identity(r.map.order, r.map.level);
    if (max_abs_diff(r.map(one), one) <= kUnitTol) r.kind = AutoKind::jordan_star_auto;
  }
  return r;
}

C6Auto inverse(const C6Auto& a) {
  Eigen::FullPivLU<MatrixXc> lu(a.map.matrix);
  if (!lu.isInvertible()) throw SingularError("inverse: automorphism matrix is singular");
  MatrixXc inv = lu.inverse();
  // x -> M conj(x) inverts to y -> conj(M^-1) conj(y).
  if (a.map.conjugate_linear) inv = inv.conjugate().eval();
  C6Auto r{{a.map.order, a.map.level, std::move(inv), a.map.conjugate_linear}, a.kind, {}};
  for (auto it = a.provenance.rbegin(); it != a.provenance.rend(); ++it) r.provenance.push_back("inv " + *it);
  return r;
}

KindReport verify_kind(const C6Auto& a, Rng& rng, int samples, double tol) {
  const int n = a.map.order, level = a.map.level;
  KindReport r{a.kind, AutoKind::jordan_star_auto, 0.0, 0.0, 0.0, 0.0};
  const HermMatrix one = HermMatrix::identity(n, level);
  r.unit_residual = max_abs_diff(a(one), one);
  for (int s = 0; s < samples; ++s) {
    const HermMatrix x = random_herm(rng, n, level);
    const HermMatrix y = random_herm(rng, n, level);
    const HermMatrix z = random_herm(rng, n, level);
    const HermMatrix fx = a(x), fy = a(y), fz = a(z);
    r.jordan_residual = std::max(r.jordan_residual, rel_diff(a(jordan_mul(x, y)), jordan_mul(fx, fy)));
    r.star_residual = std::max(r.star_residual, rel_diff(a(star(x)), star(fx)));
    r.triple_residual = std::max(r.triple_residual, rel_diff(a(triple(x, y, z)), triple(fx, fy, fz)));
  }
  const bool jordan = std::max({r.jordan_residual, r.star_residual, r.unit_residual}) <= tol;
  if (r.triple_residual > tol && !jordan) {
    throw ConsistencyError("verify_kind: map preserves neither Jordan nor triple products",
                           std::min(r.triple_residual, r.jordan_residual));
  }
  r.derived = jordan ? AutoKind::jordan_star_auto : AutoKind::triple_auto;
  if (a.kind == AutoKind::jordan_star_auto && !jordan) {
    throw ConsistencyError("verify_kind: claimed Jordan *-automorphism fails the product tests",
                           std::max({r.jordan_residual, r.star_residual, r.unit_residual}));
  }
  if (r.triple_residual > tol) {
    throw ConsistencyError("verify_kind: triple products are not preserved", r.triple_residual);
  }
  return r;
}

}  // namespace jbdet
