#include "jbdet/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jbdet/biquat.hpp"
#include "jbdet/errors.hpp"
#include "jbdet/spectral.hpp"

namespace jbdet {

namespace {

constexpr int kMaxRetries = 16;
constexpr std::uint64_t kDefaultSeed = 0x5eed'd7'0001ULL;

double max_coord(const CDMatrix& x) {
  double m = 0;
  for (int i = 0; i < x.order(); ++i) {
    for (int j = 0; j < x.order(); ++j) m = std::max(m, x(i, j).max_abs());
  }
  return m;
}

double pivot_threshold(const CDMatrix& x) { return kPivotRel * (1.0 + max_coord(x)); }

cplx dt_rec(const CDMatrix& x, Rng& rng, bool& interpolated);

cplx dt_interp(const CDMatrix& x, Rng& rng, bool& interpolated) {
  const int n = x.order();
  const double rho = 1.0 + max_coord(x);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const double phase = attempt == 0 ? 0.0 : rng.uniform(0.0, 2.0 * std::numbers::pi);
    std::vector<std::pair<cplx, cplx>> points;
    bool ok = true;
    for (int k = 0; k <= n && ok; ++k) {
      const cplx lambda = std::polar(rho, 2.0 * std::numbers::pi * k / (n + 1) + phase);
      CDMatrix z = x;
      for (int i = 0; i < n; ++i) z(i, i)[0] += lambda;
      if (std::abs(z(0, 0)[0]) < pivot_threshold(z)) {
        ok = false;
        break;
      }
      points.emplace_back(lambda, dt_rec(z, rng, interpolated));
    }
    if (ok) return poly_fit(points).coeffs[0];
  }
  throw NumericError("dt_n: pivot collisions persisted after " + std::to_string(kMaxRetries) + " retries");
}

cplx dt_rec(const CDMatrix& x, Rng& rng, bool& interpolated) {
  const int n = x.order();
  const cplx p = x(0, 0)[0];
  if (n == 1) return p;
  if (std::abs(p) < pivot_threshold(x)) {
    interpolated = true;
    return dt_interp(x, rng, interpolated);
  }
  CDMatrix y(n - 1, x.level());
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) y(i - 1, j - 1) = x(i, j) - cd_multiply(x(i, 0), x(0, j)) / p;
  }
  return p * dt_rec(y, rng, interpolated);
}

void require_biquaternionic(const HermMatrix& x, const char* op) {
  if (x.level() != 2) throw DomainError(std::string(op) + ": entries must be biquaternions (level 2)");
}

}  // namespace

std::string to_string(DtRoute r) {
  switch (r) {
    case DtRoute::recursive: return "recursive";
    case DtRoute::interpolated: return "interpolated";
    case DtRoute::sarrus: return "sarrus";
    case DtRoute::eigen_half: return "eigen_half";
  }
  return "unknown";
}

cplx dt_value(const HermMatrix& x, Rng* rng) {
  require_biquaternionic(x, "dt_n");
  Rng local(kDefaultSeed);
  bool interpolated = false;
  return dt_rec(x.to_matrix(), rng ? *rng : local, interpolated);
}

DtResult dt_n(const HermMatrix& x, Rng* rng) {
  require_biquaternionic(x, "dt_n");
  Rng local(kDefaultSeed);
  bool interpolated = false;
  const cplx v = dt_rec(x.to_matrix(), rng ? *rng : local, interpolated);
  return {v, interpolated ? DtRoute::interpolated : DtRoute::recursive, hat_det_residual(x, v)};
}

double hat_det_residual(const HermMatrix& x, cplx dt) {
  const cplx d = det_lu(hat_matrix(x));
  return std::abs(dt * dt - d) / std::max(1.0, std::abs(d));
}

cplx dt3_sarrus(const HermMatrix& x) {
  require_biquaternionic(x, "dt3_sarrus");
  if (x.order() != 3) throw DomainError("dt3_sarrus: order must be 3");
  const CDMatrix m = x.to_matrix();
  auto t = [&](int a, int b, int c, int d, int e, int f) {
    return cd_multiply(cd_multiply(m(a, b), m(c, d)), m(e, f));
  };
  const CDElement s = t(0, 0, 1, 1, 2, 2) + t(2, 1, 1, 0, 0, 2) + t(2, 0, 0, 1, 1, 2) - t(0, 0, 2, 1, 1, 2) -
                      t(1, 1, 2, 0, 0, 2) - t(1, 0, 0, 1, 2, 2);
  return s[0];
}

Polynomial char_poly(const HermMatrix& x) {
  require_biquaternionic(x, "char_poly");
  const int n = x.order();
  const double rho = 1.0 + sup_norm(x);
  std::vector<std::pair<cplx, cplx>> points;
  for (int k = 0; k <= n; ++k) {
    const cplx lambda = std::polar(rho, 2.0 * std::numbers::pi * k / (n + 1));
    points.emplace_back(lambda, dt_value(lambda * HermMatrix::identity(n, 2) - x));
  }
  return poly_fit(points);
}

Polynomial dt_pencil(const HermMatrix& x, const HermMatrix& y) {
  require_biquaternionic(x, "dt_pencil");
  const int n = x.order();
  const double rho = 1.0 + sup_norm(x);
  std::vector<std::pair<cplx, cplx>> points;
  for (int k = 0; k <= n; ++k) {
    const cplx lambda = std::polar(rho, 2.0 * std::numbers::pi * (k + 0.25) / (n + 1));
    points.emplace_back(lambda, dt_value(lambda * y + x));
  }
  return poly_fit(points);
}

EigenHalf eigen_half(const HermMatrix& x) {
  require_biquaternionic(x, "eigen_half");
  const std::vector<cplx> ev = eig(hat_matrix(x));
  EigenHalf r{true, 1.0, cluster_values(ev)};
  for (const auto& c : r.clusters) {
    if (c.count % 2 != 0) r.even = false;
    r.half_product *= std::pow(c.value, c.count / 2);
  }
  return r;
}

cplx dt_relative(const HermMatrix& x, const HermMatrix& e, unsigned flip_mask) {
  require_biquaternionic(x, "dt_relative");
  if (!is_unitary(e)) throw DomainError("dt_relative: e must be unitary");
  const HermMatrix v = unitary_sqrt(e, std::nullopt, flip_mask);
  const CDMatrix vs = star(v).to_matrix();
  const CDMatrix t = box_mul(box_mul(vs, x.to_matrix()), vs);
  return dt_value(HermMatrix::from_matrix(t, 1e-8 * (1.0 + sup_norm(x))));
}

}  // namespace jbdet
