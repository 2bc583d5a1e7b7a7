#pragma once

#include <string>
#include <vector>

#include "jbdet/jordan.hpp"
#include "jbdet/octonion.hpp"

namespace jbdet {

enum class AutoKind { jordan_star_auto, triple_auto };
std::string to_string(AutoKind k);

struct C6Auto {
  LinearMap map;
  AutoKind kind = AutoKind::jordan_star_auto;
  std::vector<std::string> provenance;

  HermMatrix operator()(const HermMatrix& x) const { return map(x); }
};

C6Auto identity_auto(int order = 3, int level = 3);

// Swap rows k and l, then columns k and l (1-based).
C6Auto exchange_auto(int k, int l, int order = 3, int level = 3);
// The same relabeling applied directly, without materializing the map.
HermMatrix exchange(const HermMatrix& x, int k, int l);
// The symmetry u with exchange_auto(k, l)(x) = {u, x*, u}.
HermMatrix exchange_symmetry(int k, int l, int order = 3, int level = 3);

enum class LiftVariant { base, T1, T2, T3 };
std::string to_string(LiftVariant v);

/// Entrywise action of an octonion map on C6. With T1 = T(1):
///   base: a -> T(a),            b -> T(b) T1^,     c -> T(c^)^
///   T1:   a -> T(a),            b -> T1 T(b^)^,    c -> T(c^)^
///   T2:   a -> T(a^)^,          b -> T(b^)^,       c -> T(c) T1^
///   T3:   a -> T(a) T1^,        b -> T(b),         c -> T(c)
/// where ^ is the diamond involution.
HermMatrix apply_lift(const OctonionMap& t, LiftVariant v, const HermMatrix& x);
C6Auto lift_auto(const OctonionMap& t, LiftVariant v = LiftVariant::base, const std::string& label = "T");

// x -> {u, x*, u}
C6Auto shift_auto(const HermMatrix& u);

// outer after inner
C6Auto compose(const C6Auto& outer, const C6Auto& inner);
C6Auto inverse(const C6Auto& a);

struct KindReport {
  AutoKind claimed;
  AutoKind derived;
  double jordan_residual;
  double star_residual;
  double unit_residual;
  double triple_residual;
};

/// Re-derives the kind from randomized preservation tests; throws
/// ConsistencyError when the claimed kind is not supported by the samples.
KindReport verify_kind(const C6Auto& a, Rng& rng, int samples = 64, double tol = 1e-9);

}  // namespace jbdet
