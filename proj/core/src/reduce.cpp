#include "jbdet/reduce.hpp"

#include <algorithm>
#include <cmath>

#include "jbdet/errors.hpp"
#include "jbdet/minproj.hpp"
#include "jbdet/sampling.hpp"
#include "jbdet/spectral.hpp"

namespace jbdet {

namespace {

constexpr double kZero = 1e-12;
constexpr double kRowZero = 1e-9;

CDElement real_part(const CDElement& x) {
  CDElement r(x.level());
  for (std::size_t k = 0; k < x.dim(); ++k) r[k] = x[k].real();
  return r;
}

// Largest coordinate outside the first 2^m slots.
double outside(const CDElement& x, int m) {
  double w = 0;
  for (std::size_t k = std::size_t{1} << m; k < x.dim(); ++k) w = std::max(w, std::abs(x[k]));
  return w;
}

double outside(const HermMatrix& x, int m) {
  double w = 0;
  for (int i = 0; i < x.order(); ++i) {
    for (int j = i + 1; j < x.order(); ++j) w = std::max(w, outside(x.entry(i, j), m));
  }
  return w;
}

double offdiag(const HermMatrix& x) { return x.coords().tail(x.dim() - x.order()).cwiseAbs().maxCoeff(); }

void require_c6(const HermMatrix& x, const char* what) {
  if (x.order() != 3 || x.level() != 3) throw DomainError(std::string(what) + " must be an element of C6");
}

Frame split_rank_two(const HermMatrix& p, Rng& rng) {
  const HermMatrix one = c6_identity();
  const HermMatrix pc = one - p;
  for (int attempt = 0; attempt < 8; ++attempt) {
    HermMatrix y = random_self_adjoint(rng, 3, 3);
    y *= 1.0 / sup_norm(y);
    const HermMatrix py = jordan_mul(p, y);
    HermMatrix z = 2.0 * jordan_mul(py, p) - py;
    const cplx c = -28.0;
    z += c * pc;
    const SpectralResolution s = spectral_decompose(z);
    std::vector<HermMatrix> inside;
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      if (s.multiplicities[j] == 1 && !cluster_equal(s.eigenvalues[j], c)) inside.push_back(s.components[j]);
    }
    if (inside.size() == 2) return {inside[0], inside[1], pc};
  }
  throw NumericError("minimal_frame: could not split a rank-two projection");
}

}  // namespace

std::string case_path(ReductionBranch b) {
  switch (b) {
    case ReductionBranch::case1: return "Case 1";
    case ReductionBranch::case2: return "Case 2";
    case ReductionBranch::case3_1: return "Case 3 -> Subcase 3.1";
    case ReductionBranch::case3_2_1: return "Case 3 -> Subcase 3.2 -> Sub-subcase 3.2.1";
    case ReductionBranch::case3_2_2: return "Case 3 -> Subcase 3.2 -> Sub-subcase 3.2.2";
  }
  return "unknown";
}

void ReductionCertificate::record(std::string label, double residual) {
  steps.push_back({std::move(label), residual});
  worst_residual = std::max(worst_residual, residual);
}

FrameReduction reduce_frame(const Frame& in, double tol) {
  for (const auto& q : in) require_c6(q, "reduce_frame: frame member");
  FrameReduction r{{}, in, {}};
  auto& cert = r.certificate;
  cert.record("frame sums to 1", max_abs_diff(in[0] + in[1] + in[2], c6_identity()));

  std::size_t i1 = 0;
  for (std::size_t j = 1; j < 3; ++j) {
    if (in[j].diag(0).real() > in[i1].diag(0).real()) i1 = j;
  }
  const std::size_t i2 = i1 == 0 ? 1 : 0;
  const std::size_t i3 = 3 - i1 - i2;
  cert.record("relabel: q1 = member " + std::to_string(i1 + 1) + ", q2 = member " + std::to_string(i2 + 1) +
                  ", q3 = member " + std::to_string(i3 + 1),
              0.0);

  auto apply = [&](OctonionMap t, LiftVariant v, std::string label) {
    for (auto& q : r.images) q = apply_lift(t, v, q);
    r.lifts.push_back({std::move(t), v, std::move(label)});
  };
  const HermMatrix& q1 = r.images[i1];
  const HermMatrix& q2 = r.images[i2];

  const CDElement a0 = real_part(q1.entry(0, 1));
  if (cd_norm2(a0) > kZero) {
    apply(canonicalize_a(a0), LiftVariant::base, "S1");
    cert.record("S1: a real", outside(q1.entry(0, 1), 0));
  } else {
    cert.record("S1 skipped: a = 0", 0.0);
  }
  const CDElement b0 = real_part(q1.entry(0, 2));
  if (cd_norm2(b0) > kZero) {
    apply(canonicalize_b(b0), LiftVariant::base, "S2");
    cert.record("S2: b in span{e0,e1}", std::max(outside(q1.entry(0, 2), 1), outside(q1.entry(0, 1), 0)));
  } else {
    cert.record("S2 skipped: b = 0", 0.0);
  }
  cert.record("q1 entries in span{e0,e1}", outside(q1, 1));

  const double alpha = q1.diag(0).real();
  const CDElement a = real_part(q1.entry(0, 1));
  const CDElement b = real_part(q1.entry(0, 2));
  const bool row1_zero = std::abs(q2.diag(0)) <= kRowZero && q2.entry(0, 1).max_abs() <= kRowZero &&
                         q2.entry(0, 2).max_abs() <= kRowZero;
  if (row1_zero) {
    const bool row2_zero = std::abs(q2.diag(1)) <= kRowZero && q2.entry(1, 2).max_abs() <= kRowZero;
    if (row2_zero) {
      cert.branch = ReductionBranch::case1;
    } else {
      cert.branch = ReductionBranch::case2;
      const CDElement x = real_part(q2.entry(1, 2));
      if (cd_norm2(x) > kZero) {
        apply(canonicalize_c(x), LiftVariant::T3, "U");
        cert.record("U: x in span{e0,e1,e2}", outside(q2.entry(1, 2), 2));
      } else {
        cert.record("U skipped: x = 0", 0.0);
      }
    }
  } else {
    const double xi = q2.diag(0).real();
    const CDElement x = real_part(q2.entry(0, 1));
    const CDElement y = real_part(q2.entry(0, 2));
    if (std::abs(alpha + xi - 1.0) <= tol) {
      cert.branch = ReductionBranch::case3_1;
      cert.record("x = -a and y = -b", std::max(max_abs_diff(x, -1.0 * a), max_abs_diff(y, -1.0 * b)));
    } else {
      const CDElement v = b + ((1.0 - alpha) / xi) * y;
      if (cd_norm2(v) <= tol) {
        cert.branch = ReductionBranch::case3_2_1;
        cert.record("y in span{e0,e1}", outside(y, 1));
        if (cd_norm2(x) > kZero) {
          apply(canonicalize_c(x), LiftVariant::base, "U");
          cert.record("U: x in span{e0,e1,e2}", outside(q2.entry(0, 1), 2));
        } else {
          cert.record("U skipped: x = 0", 0.0);
        }
      } else {
        cert.branch = ReductionBranch::case3_2_2;
        const double nv = cd_norm2(v);
        const CDElement w = ((1.0 - xi) / alpha) * b + y;
        const CDElement rhs = -1.0 * cd_multiply(cd_multiply(a, w), cd_diamond(v));
        cert.record("division formula for x^", max_abs_diff(nv * nv * cd_diamond(x), rhs));
        apply(canonicalize_c(y), LiftVariant::base, "U");
        cert.record("U: y in span{e0,e1,e2}", outside(q2.entry(0, 2), 2));
      }
    }
  }
  cert.case_path = case_path(*cert.branch);

  double quaternionic = 0;
  for (const auto& q : r.images) quaternionic = std::max(quaternionic, outside(q, 2));
  cert.record("frame entries quaternionic", quaternionic);
  if (cert.worst_residual > tol) {
    throw ReductionError("reduce_frame: step residual " + std::to_string(cert.worst_residual) + " above tolerance",
                         cert.case_path);
  }
  return r;
}

C6Auto materialize_lifts(const std::vector<LiftStep>& lifts) {
  C6Auto a = identity_auto();
  if (lifts.empty()) return a;
  LinearMap m = materialize(3, 3, false, [&](const HermMatrix& x) {
    HermMatrix y = x;
    for (const auto& s : lifts) y = apply_lift(s.t, s.variant, y);
    return y;
  });
  a.map = std::move(m);
  for (const auto& s : lifts) a.provenance.push_back("lift[" + to_string(s.variant) + "](" + s.label + ")");
  return a;
}

namespace {

HermMatrix polish_projection(HermMatrix q) {
  for (int it = 0; it < 6; ++it) {
    q = 0.5 * (q + star(q));
    if (projection_residual(q) <= 1e-15) break;
    const HermMatrix q2 = jordan_mul(q, q);
    q = 3.0 * q2 - 2.0 * jordan_mul(q2, q);
  }
  return q;
}

}  // namespace

Frame minimal_frame(const HermMatrix& x, std::array<cplx, 3>* alpha, std::uint64_t seed) {
  require_c6(x, "minimal_frame: argument");
  Rng rng(seed);
  const SpectralResolution s = spectral_decompose(x);
  std::vector<HermMatrix> qs;
  std::vector<cplx> values;
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    const int m = s.multiplicities[j];
    if (m == 1) {
      qs.push_back(s.components[j]);
    } else if (m == 2) {
      const Frame f = split_rank_two(s.components[j], rng);
      qs.push_back(f[0]);
      qs.push_back(f[1]);
    } else {
      const Frame f = diagonal_frame(3);
      qs.assign(f.begin(), f.end());
    }
    values.insert(values.end(), static_cast<std::size_t>(m), s.eigenvalues[j]);
  }
  if (alpha) std::copy(values.begin(), values.end(), alpha->begin());
  // Close eigenvalues leave the components slightly off; restore an exact
  // frame so the branch tests are not decided by rounding noise.
  const HermMatrix q1 = polish_projection(qs[0]);
  const HermMatrix p = c6_identity() - q1;
  const HermMatrix q2 = polish_projection(2.0 * jordan_mul(jordan_mul(p, qs[1]), p) - jordan_mul(p, qs[1]));
  return {q1, q2, p - q2};
}

ReductionResult simultaneous_biq(const HermMatrix& u, const HermMatrix& e) {
  require_c6(u, "simultaneous_biq: u");
  require_c6(e, "simultaneous_biq: e");
  if (!is_unitary(u)) throw DomainError("simultaneous_biq: u is not unitary");
  if (!is_unitary(e)) throw DomainError("simultaneous_biq: e is not unitary");
  if (!is_diagonal(e, 1e-12)) {
    throw DomainError("simultaneous_biq: e must be diagonal; diagonalizing a general unitary needs a frame "
                      "automorphism for which no construction is available");
  }
  std::array<cplx, 3> alpha{};
  const Frame f = minimal_frame(u, &alpha);
  FrameReduction fr = reduce_frame(f);
  ReductionResult r{materialize_lifts(fr.lifts), {}, std::move(fr.certificate)};
  const HermMatrix tu = r.automorphism(u);
  const HermMatrix te = r.automorphism(e);
  r.certificate.record("T(u) = sum alpha_j T(q_j)", max_abs_diff(tu, combine(fr.images, alpha)));
  r.certificate.record("T(u) biquaternionic", outside(tu, 2));
  r.certificate.record("T(e) diagonal", offdiag(te));
  if (r.certificate.worst_residual > kReduceTol) {
    throw ReductionError("simultaneous_biq: residual " + std::to_string(r.certificate.worst_residual),
                         r.certificate.case_path);
  }
  r.images = {tu, te};
  return r;
}

ReductionResult simultaneous_quat(const HermMatrix& a, const HermMatrix& b, const C6Auto& a_diagonalizer) {
  require_c6(a, "simultaneous_quat: a");
  require_c6(b, "simultaneous_quat: b");
  const HermMatrix da = a_diagonalizer(a);
  if (!is_diagonal(da, kReduceTol * std::max(1.0, sup_norm(a)))) {
    throw DomainError("simultaneous_quat: the supplied automorphism does not diagonalize a (off-diagonal " +
                      std::to_string(offdiag(da)) + ")");
  }
  const HermMatrix db = a_diagonalizer(b);
  std::array<cplx, 3> beta{};
  const Frame f = minimal_frame(db, &beta);
  FrameReduction fr = reduce_frame(f);
  ReductionResult r{compose(materialize_lifts(fr.lifts), a_diagonalizer), {}, std::move(fr.certificate)};
  const HermMatrix ta = r.automorphism(a);
  const HermMatrix tb = r.automorphism(b);
  const double scale = std::max({1.0, sup_norm(a), sup_norm(b)});
  r.certificate.record("T(b) = sum beta_j T(q_j)", max_abs_diff(tb, combine(fr.images, beta)) / scale);
  r.certificate.record("T(b) biquaternionic", outside(tb, 2) / scale);
  r.certificate.record("T(a) diagonal", offdiag(ta) / scale);
  if (r.certificate.worst_residual > kReduceTol) {
    throw ReductionError("simultaneous_quat: residual " + std::to_string(r.certificate.worst_residual),
                         r.certificate.case_path);
  }
  r.images = {ta, tb};
  return r;
}

ReductionResult reduce_single(const HermMatrix& x, const C6Auto* helper) {
  require_c6(x, "reduce_single: x");
  const C6Auto h = helper ? *helper : identity_auto();
  const HermMatrix y = h(x);
  const double scale = std::max(1.0, sup_norm(x));
  if (outside(y, 2) <= kReduceTol * scale) {
    ReductionResult r{h, {y}, {}};
    r.certificate.case_path = "already biquaternionic";
    r.certificate.record("T(x) biquaternionic", outside(y, 2) / scale);
    return r;
  }
  const HermMatrix ys = star(y);
  const HermMatrix a = 0.5 * (y + ys);
  const HermMatrix b = cplx(0.0, -0.5) * (y - ys);
  if (!is_diagonal(a, kReduceTol * scale)) {
    throw DomainError("reduce_single: the self-adjoint part of x is not diagonal after the helper; "
                      "supply an automorphism that diagonalizes it");
  }
  ReductionResult r = simultaneous_quat(a, b, identity_auto());
  r.automorphism = compose(r.automorphism, h);
  const HermMatrix tx = r.automorphism(x);
  r.certificate.record("T(x) biquaternionic", outside(tx, 2) / scale);
  if (r.certificate.worst_residual > kReduceTol) {
    throw ReductionError("reduce_single: residual " + std::to_string(r.certificate.worst_residual),
                         r.certificate.case_path);
  }
  r.images = {tx};
  return r;
}

}  // namespace jbdet

namespace jbdet {

namespace {

// Minimal projection in the upper-left 2x2 block and its complement there.
std::pair<HermMatrix, HermMatrix> block_pair(Rng& rng, int lo, double alpha) {
  const CDElement a = random_real_with_norm(rng, 3, std::sqrt(alpha - alpha * alpha));
  HermMatrix f(3, 3);
  f.set_diag(lo, alpha);
  f.set_diag(lo + 1, 1.0 - alpha);
  f.set_entry(lo, lo + 1, a);
  HermMatrix g(3, 3);
  g.set_diag(lo, 1.0 - alpha);
  g.set_diag(lo + 1, alpha);
  g.set_entry(lo, lo + 1, -1.0 * a);
  return {f, g};
}

Frame scramble(Rng& rng, Frame f) {
  const RandomLift l = random_lift(rng);
  for (auto& q : f) q = apply_lift(l.t, l.variant, q);
  return f;
}

}  // namespace

Frame coverage_frame(Rng& rng, ReductionBranch target) {
  const Frame d = diagonal_frame(3);
  switch (target) {
    case ReductionBranch::case1: {
      const double alpha = rng.uniform(0.55, 0.95);
      const auto [f1, f2] = block_pair(rng, 0, alpha);
      return scramble(rng, {f1, d[2], f2});
    }
    case ReductionBranch::case3_1: {
      const double alpha = rng.uniform(0.55, 0.95);
      const auto [f1, f2] = block_pair(rng, 0, alpha);
      return scramble(rng, {f1, f2, d[2]});
    }
    case ReductionBranch::case2: {
      const double alpha = rng.uniform(0.05, 0.95);
      const auto [g1, g2] = block_pair(rng, 1, alpha);
      return scramble(rng, {d[0], g1, g2});
    }
    case ReductionBranch::case3_2_1: {
      const double alpha = rng.uniform(0.55, 0.9);
      const double theta = rng.uniform(0.2, 1.3);
      const double c = std::cos(theta), s = std::sin(theta);
      const CDElement b = random_real_with_norm(rng, 3, std::sqrt(alpha * (1.0 - alpha)));
      const CDElement h = random_unit_real(rng, 3);
      HermMatrix q1(3, 3);
      q1.set_diag(0, alpha);
      q1.set_diag(2, 1.0 - alpha);
      q1.set_entry(0, 2, b);
      MinProjParams p;
      p.form = MinProjForm::full;
      p.alpha = c * c * (1.0 - alpha);
      p.a = (s * c * std::sqrt(1.0 - alpha)) * h;
      p.b = (-c * c) * b;
      const HermMatrix q2 = build_min_projection_unchecked(p);
      return scramble(rng, {q1, q2, c6_identity() - q1 - q2});
    }
    case ReductionBranch::case3_2_2:
      return random_frame(rng, 3);
  }
  return d;
}

}  // namespace jbdet
