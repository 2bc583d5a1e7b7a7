#include "jbdet/minproj.hpp"

#include <algorithm>
#include <cmath>

#include "jbdet/c6_auto.hpp"
#include "jbdet/errors.hpp"
#include "jbdet/sampling.hpp"

namespace jbdet {

namespace {

double norm2sq(const CDElement& x) { return cd_norm2(x) * cd_norm2(x); }

CDElement real_part(const CDElement& x) {
  CDElement r(x.level());
  for (std::size_t k = 0; k < x.dim(); ++k) r[k] = x[k].real();
  return r;
}

bool row_is_zero(const HermMatrix& q, int i, double tol) {
  for (int j = 0; j < q.order(); ++j) {
    if (q.entry(i, j).max_abs() > tol) return false;
  }
  return true;
}

}  // namespace

std::string to_string(MinProjForm f) {
  switch (f) {
    case MinProjForm::corner: return "corner";
    case MinProjForm::lower2x2: return "lower2x2";
    case MinProjForm::full: return "full";
  }
  return "unknown";
}

double constraint_residual(const MinProjParams& p) {
  switch (p.form) {
    case MinProjForm::corner: return 0.0;
    case MinProjForm::lower2x2: return std::abs(p.alpha - p.alpha * p.alpha - norm2sq(p.a));
    case MinProjForm::full: return std::abs(p.alpha - p.alpha * p.alpha - norm2sq(p.a) - norm2sq(p.b));
  }
  return 0.0;
}

HermMatrix build_min_projection_unchecked(const MinProjParams& p) {
  HermMatrix q(3, 3);
  switch (p.form) {
    case MinProjForm::corner:
      q.set_diag(2, 1.0);
      break;
    case MinProjForm::lower2x2:
      q.set_diag(1, p.alpha);
      q.set_diag(2, norm2sq(p.a) / p.alpha);
      q.set_entry(1, 2, p.a);
      break;
    case MinProjForm::full:
      q.set_diag(0, p.alpha);
      q.set_diag(1, norm2sq(p.a) / p.alpha);
      q.set_diag(2, norm2sq(p.b) / p.alpha);
      q.set_entry(0, 1, p.a);
      q.set_entry(0, 2, p.b);
      q.set_entry(1, 2, cd_multiply(cd_diamond(p.a), p.b) / p.alpha);
      break;
  }
  return q;
}

HermMatrix build_min_projection(const MinProjParams& p) {
  if (p.form != MinProjForm::corner) {
    if (p.alpha == 0.0) throw DomainError("build_min_projection: alpha must be nonzero");
    if (p.a.level() != 3 || p.b.level() != 3) throw DomainError("build_min_projection: a and b must be octonions");
    if (!p.a.is_real(kMinProjBuildTol) || !p.b.is_real(kMinProjBuildTol)) {
      throw DomainError("build_min_projection: a and b must be real octonions");
    }
    if (p.form == MinProjForm::lower2x2 && p.b.max_abs() > kMinProjBuildTol) {
      throw DomainError("build_min_projection: the lower 2x2 form has no b");
    }
    if (constraint_residual(p) > kMinProjBuildTol) {
      throw DomainError("build_min_projection: constraint alpha = alpha^2 + |a|^2 + |b|^2 violated by " +
                        std::to_string(constraint_residual(p)));
    }
  }
  return build_min_projection_unchecked(p);
}

MinProjParams random_min_proj_params(Rng& rng, MinProjForm form, double margin) {
  MinProjParams p;
  p.form = form;
  if (form == MinProjForm::corner) return p;
  p.alpha = rng.uniform(margin, 1.0 - margin);
  const double mass = p.alpha - p.alpha * p.alpha;
  if (form == MinProjForm::lower2x2) {
    p.a = random_real_with_norm(rng, 3, std::sqrt(mass));
    return p;
  }
  const double t = rng.uniform();
  p.a = random_real_with_norm(rng, 3, std::sqrt(t * mass));
  p.b = random_real_with_norm(rng, 3, std::sqrt((1.0 - t) * mass));
  return p;
}

HermMatrix random_min_projection(Rng& rng) {
  const double pick = rng.uniform();
  if (pick < 0.1) {
    HermMatrix q(3, 3);
    q.set_diag(rng.index(3), 1.0);
    return q;
  }
  if (pick < 0.3) {
    const HermMatrix q = build_min_projection(random_min_proj_params(rng, MinProjForm::lower2x2));
    const int k = rng.index(3);
    return k == 0 ? q : exchange(q, 1, k + 1);
  }
  return build_min_projection(random_min_proj_params(rng, MinProjForm::full));
}

Classification classify_min_projection(const HermMatrix& q, double tol) {
  if (q.order() != 3 || q.level() != 3) throw DomainError("classify_min_projection: expected an element of C6");
  if (projection_residual(q) > tol) throw DomainError("classify_min_projection: argument is not a projection");
  if (tripotent_rank(q, tol) != 1) throw DomainError("classify_min_projection: projection is not minimal");

  Classification c;
  HermMatrix r = q;
  const double zero = 1e-12;
  const bool row1 = row_is_zero(q, 0, zero);
  if (row1 && row_is_zero(q, 1, zero)) {
    c.params.form = MinProjForm::corner;
  } else if (row1) {
    if (q.diag(2).real() > q.diag(1).real()) {
      c.swap_k = 2;
      c.swap_l = 3;
      r = exchange(q, 2, 3);
    }
    c.params.form = MinProjForm::lower2x2;
    c.params.alpha = r.diag(1).real();
    c.params.a = real_part(r.entry(1, 2));
  } else {
    int k = 0;
    for (int i = 1; i < 3; ++i) {
      if (q.diag(i).real() > q.diag(k).real()) k = i;
    }
    if (k != 0) {
      c.swap_k = 1;
      c.swap_l = k + 1;
      r = exchange(q, 1, k + 1);
    }
    c.params.form = MinProjForm::full;
    c.params.alpha = r.diag(0).real();
    c.params.a = real_part(r.entry(0, 1));
    c.params.b = real_part(r.entry(0, 2));
  }
  c.residual = max_abs_diff(build_min_projection_unchecked(c.params), r);
  if (c.residual > tol) {
    throw ClassificationError("classify_min_projection: rebuilt " + to_string(c.params.form) +
                              " form differs by " + std::to_string(c.residual));
  }
  return c;
}

HermMatrix min_projection_complement(const MinProjParams& p) {
  if (p.form != MinProjForm::full) throw DomainError("min_projection_complement: needs the full form");
  const double na = norm2sq(p.a);
  if (na == 0.0) throw DomainError("min_projection_complement: needs a != 0");
  const double d = p.alpha * p.alpha + na;
  HermMatrix r(3, 3);
  r.set_diag(0, na / d);
  r.set_diag(1, p.alpha * p.alpha / d);
  r.set_entry(0, 1, (-p.alpha / d) * p.a);
  return r;
}

}  // namespace jbdet
