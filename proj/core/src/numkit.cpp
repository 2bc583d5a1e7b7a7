#include "jbdet/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jbdet/errors.hpp"

namespace jbdet {

cplx Polynomial::operator()(cplx z) const {
  cplx v{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(static_cast<double>(k) * coeffs[k]);
  if (d.coeffs.empty()) d.coeffs.push_back(0.0);
  return d;
}

void Polynomial::trim(double tol) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

std::vector<cplx> eig(const MatrixXc& m) {
  if (m.rows() != m.cols()) throw DomainError("eig: matrix must be square");
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<MatrixXc> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eig: QR iteration did not converge for " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + " input, norm " + std::to_string(m.norm()));
  }
  const VectorXc& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

cplx det_lu(const MatrixXc& m) {
  if (m.rows() != m.cols()) throw DomainError("det_lu: matrix must be square");
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

std::vector<double> singular_values(const MatrixXc& m) {
  Eigen::JacobiSVD<MatrixXc> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::vector<cplx> poly_roots(const Polynomial& p) {
  Polynomial q = p;
  q.trim();
  const int d = q.degree();
  if (d < 1) return {};
  if (q.leading() == cplx{}) throw DomainError("poly_roots: zero polynomial");
  MatrixXc companion = MatrixXc::Zero(d, d);
  for (int k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < d; ++k) companion(k, d - 1) = -q.coeffs[k] / q.leading();
  std::vector<cplx> roots = eig(companion);
  const Polynomial dq = q.derivative();
  for (auto& r : roots) {
    const cplx slope = dq(r);
    if (std::abs(slope) > 0) {
      const cplx polished = r - q(r) / slope;
      if (std::abs(q(polished)) <= std::abs(q(r))) r = polished;
    }
  }
  return roots;
}

Polynomial poly_from_roots(std::span<const cplx> roots) {
  Polynomial p{{1.0}};
  for (cplx r : roots) {
    std::vector<cplx> next(p.coeffs.size() + 1, cplx{});
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= r * p.coeffs[k];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

Polynomial poly_fit(std::span<const std::pair<cplx, cplx>> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n == 0) throw DomainError("poly_fit: no points");
  MatrixXc v(n, n);
  VectorXc rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    cplx pw = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      v(i, j) = pw;
      pw *= points[i].first;
    }
    rhs(i) = points[i].second;
  }
  Eigen::FullPivLU<MatrixXc> lu(v);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    throw NumericError("poly_fit: singular Vandermonde system (repeated abscissae)");
  }
  VectorXc c = lu.solve(rhs);
  return Polynomial{{c.data(), c.data() + c.size()}};
}

VectorXc lstsq(const MatrixXc& a, const VectorXc& b) {
  return a.completeOrthogonalDecomposition().solve(b);
}

bool cluster_equal(cplx a, cplx b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(a));
}

std::vector<Cluster> cluster_values(std::span<const cplx> values, double rel) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cluster_equal(values[i], values[j], rel) || cluster_equal(values[j], values[i], rel)) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::vector<Cluster> out;
  std::vector<std::size_t> root_of;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(root_of.begin(), root_of.end(), r);
    if (it == root_of.end()) {
      root_of.push_back(r);
      out.push_back({values[i], 1});
    } else {
      auto& c = out[static_cast<std::size_t>(it - root_of.begin())];
      c.value += values[i];
      ++c.count;
    }
  }
  for (auto& c : out) c.value /= static_cast<double>(c.count);
  return out;
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(eng_);
}

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }

cplx Rng::normal_complex() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

cplx Rng::unit_complex() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

int Rng::index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng_); }

std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined state
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace jbdet
