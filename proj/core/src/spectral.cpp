#include "jbdet/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "jbdet/biquat.hpp"
#include "jbdet/determinant.hpp"
#include "jbdet/errors.hpp"

namespace jbdet {

namespace {

HermMatrix unit_for(const HermMatrix& x, const std::optional<HermMatrix>& e) {
  if (!e) return HermMatrix::identity(x.order(), x.level());
  if (e->order() != x.order() || e->level() != x.level()) throw DomainError("isotope unit has the wrong shape");
  return *e;
}

HermMatrix probe(int order, int level, std::uint64_t seed) {
  Rng rng(seed);
  VectorXc c(herm_dim(order, level));
  for (auto& v : c) v = rng.normal_complex();
  return HermMatrix::from_coords(order, level, std::move(c));
}

// Newton iteration q -> 3q^2 - 2q^3 towards the nearest projection of the
// u-isotope; it also removes mixing between nearby components.
HermMatrix polish_in_isotope(HermMatrix q, const HermMatrix& u) {
  for (int it = 0; it < 8; ++it) {
    q = 0.5 * (q + isotope_star(q, u));
    const HermMatrix q2 = isotope_mul(q, q, u);
    if (max_abs_diff(q2, q) <= 1e-15 * std::max(1.0, sup_norm(q))) break;
    q = 3.0 * q2 - 2.0 * isotope_mul(q2, q, u);
  }
  return q;
}

bool is_zero_eigen(cplx a, double scale) { return std::abs(a) <= kZeroEigen * std::max(1.0, scale); }

double max_modulus(const std::vector<cplx>& v) {
  double m = 0;
  for (cplx a : v) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace

double normality_residual(const HermMatrix& x, const std::optional<HermMatrix>& e) {
  const HermMatrix u = unit_for(x, e);
  const HermMatrix y = triple(u, x, u);
  const double s = std::max(1.0, sup_norm(x));
  double worst = 0;
  for (std::uint64_t seed : {0x9e37'79b9ULL, 0x7f4a'7c15ULL}) {
    const HermMatrix z = probe(x.order(), x.level(), seed);
    const HermMatrix lhs = triple(x, u, triple(y, u, z));
    const HermMatrix rhs = triple(y, u, triple(x, u, z));
    worst = std::max(worst, max_abs_diff(lhs, rhs) / (s * s * std::max(1.0, sup_norm(z))));
  }
  return worst;
}

bool is_normal(const HermMatrix& x, const std::optional<HermMatrix>& e, double tol) {
  return normality_residual(x, e) <= tol;
}

SpectralResolution spectral_decompose(const HermMatrix& x, const std::optional<HermMatrix>& e) {
  const HermMatrix u = unit_for(x, e);
  if (e && !is_unitary(u)) throw DomainError("spectral_decompose: isotope unit is not unitary");
  if (!is_normal(x, e)) throw DomainError("spectral_decompose: element is not normal in the isotope");

  const int cap = x.order();
  const Eigen::Index dim = x.dim();
  std::vector<HermMatrix> powers{u, x};
  MatrixXc basis(dim, 1);
  basis.col(0) = u.coords();

  int degree = cap;
  for (int d = 1; d <= cap; ++d) {
    const VectorXc& target = powers[static_cast<std::size_t>(d)].coords();
    const VectorXc c = lstsq(basis, target);
    const double rel = (basis * c - target).norm() / std::max(1.0, target.norm());
    if (rel <= kMinPolyTol || d == cap) {
      if (rel > kMinPolyTol * 1e2) {
        throw NumericError("spectral_decompose: no annihilating polynomial of degree <= " + std::to_string(cap) +
                           " (residual " + std::to_string(rel) + ")");
      }
      degree = d;
      break;
    }
    basis.conservativeResize(Eigen::NoChange, d + 1);
    basis.col(d) = target;
    powers.push_back(triple(powers.back(), u, x));
  }

  // z -> {z, u, x} is linear and acts on span{u, x, ...} with the components
  // as eigenvectors; its eigenprojections on an orthonormal basis of that
  // span stay accurate when eigenvalues nearly coincide.
  const Eigen::HouseholderQR<MatrixXc> qr(basis.leftCols(degree));
  const MatrixXc q = qr.householderQ() * MatrixXc::Identity(dim, degree);
  MatrixXc image(dim, degree);
  for (int k = 0; k < degree; ++k) {
    image.col(k) = triple(HermMatrix::from_coords(x.order(), x.level(), q.col(k)), u, x).coords();
  }
  const Eigen::ComplexEigenSolver<MatrixXc> es(q.adjoint() * image);
  const MatrixXc vecs = es.eigenvectors();
  const MatrixXc left = vecs.inverse();
  const VectorXc unit_in_q = q.adjoint() * u.coords();
  std::vector<cplx> ritz(es.eigenvalues().begin(), es.eigenvalues().end());

  std::vector<cplx> roots;
  for (const auto& cl : cluster_values(ritz)) roots.push_back(cl.value);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  SpectralResolution r{u, roots, {}, {}, 0.0};
  const double scale = std::max(1.0, sup_norm(x));
  std::vector<VectorXc> comps(roots.size(), VectorXc::Zero(degree));
  for (int k = 0; k < degree; ++k) {
    const cplx z = ritz[static_cast<std::size_t>(k)];
    std::size_t best = 0;
    for (std::size_t j = 1; j < roots.size(); ++j) {
      if (std::abs(z - roots[j]) < std::abs(z - roots[best])) best = j;
    }
    comps[best] += vecs.col(k) * (left.row(k) * unit_in_q).value();
  }
  HermMatrix recon(x.order(), x.level());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    HermMatrix comp = polish_in_isotope(HermMatrix::from_coords(x.order(), x.level(), q * comps[j]), u);
    recon += roots[j] * comp;
    r.components.push_back(std::move(comp));
  }
  r.residual = max_abs_diff(recon, x);
  if (r.residual > kReconstructTol * scale) {
    throw NumericError("spectral_decompose: reconstruction residual " + std::to_string(r.residual));
  }
  int total = 0;
  for (const auto& comp : r.components) {
    r.multiplicities.push_back(tripotent_rank(comp, 1e-6 * scale));
    total += r.multiplicities.back();
  }
  if (total != x.order()) {
    throw NumericError("spectral_decompose: multiplicities sum to " + std::to_string(total));
  }
  return r;
}

HermMatrix unitary_sqrt(const HermMatrix& u, const std::optional<HermMatrix>& e, unsigned flip_mask) {
  if (!is_unitary(u)) throw DomainError("unitary_sqrt: argument is not unitary");
  const SpectralResolution s = spectral_decompose(u, e);
  HermMatrix v(u.order(), u.level());
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    const double sign = (flip_mask >> j) & 1U ? -1.0 : 1.0;
    v += (sign * std::sqrt(s.eigenvalues[j])) * s.components[j];
  }
  return v;
}

cplx dt_unitary(const HermMatrix& u, const std::optional<HermMatrix>& e) {
  if (!is_unitary(u)) throw DomainError("dt_unitary: argument is not unitary");
  const SpectralResolution s = spectral_decompose(u, e);
  cplx d = 1.0;
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) d *= std::pow(s.eigenvalues[j], s.multiplicities[j]);
  return d;
}

std::string to_string(DtGeneralRoute r) {
  switch (r) {
    case DtGeneralRoute::biquaternionic: return "biquaternionic";
    case DtGeneralRoute::self_adjoint: return "self_adjoint";
    case DtGeneralRoute::normal: return "normal";
    case DtGeneralRoute::supplied_automorphism: return "supplied_automorphism";
  }
  return "unknown";
}

C6DtResult dt_general(const HermMatrix& x, const LinearMap* reducer) {
  if (x.order() != 3) throw DomainError("dt_general: expected a 3x3 matrix");
  if (x.level() == 2) return {dt_value(x), DtGeneralRoute::biquaternionic};
  const double scale = std::max(1.0, sup_norm(x));
  if (entries_in_sublevel(x, 2, 1e-12 * scale)) return {dt_value(demote(x, 2)), DtGeneralRoute::biquaternionic};
  if (reducer) {
    const HermMatrix y = (*reducer)(x);
    if (!entries_in_sublevel(y, 2, 1e-8 * scale)) {
      throw DomainError("dt_general: the supplied automorphism does not make the entries biquaternionic");
    }
    return {dt_value(demote(y, 2)), DtGeneralRoute::supplied_automorphism};
  }
  const bool self_adjoint = is_self_adjoint(x, 1e-12 * scale);
  if (!self_adjoint && !is_normal(x)) {
    throw UnsupportedError(
        "dt_general: x is neither biquaternionic nor normal, and no reducing automorphism was supplied; "
        "no constructive reduction of a general octonionic element is known");
  }
  // The components of x resolve both u = sum (a/|a|) u_j and x in the
  // u-isotope (eigenvalues |a|), with the same ranks, so neither is
  // decomposed again.
  const SpectralResolution s = spectral_decompose(x);
  const double top = max_modulus(s.eigenvalues);
  cplx dt_u = 1.0;
  cplx dt_in_isotope = 1.0;
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    const cplx a = s.eigenvalues[j];
    const int m = s.multiplicities[j];
    if (is_zero_eigen(a, top)) {
      dt_in_isotope = 0.0;
    } else {
      dt_u *= std::pow(a / std::abs(a), m);
      dt_in_isotope *= std::pow(std::abs(a), m);
    }
  }
  return {dt_in_isotope * dt_u, self_adjoint ? DtGeneralRoute::self_adjoint : DtGeneralRoute::normal};
}

HermMatrix range_tripotent(const HermMatrix& x) {
  if (is_normal(x)) {
    const SpectralResolution s = spectral_decompose(x);
    const double top = max_modulus(s.eigenvalues);
    HermMatrix r(x.order(), x.level());
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      const cplx a = s.eigenvalues[j];
      if (!is_zero_eigen(a, top)) r += (a / std::abs(a)) * s.components[j];
    }
    return r;
  }
  if (x.level() != 2 && !entries_in_sublevel(x, 2, 1e-12 * std::max(1.0, sup_norm(x)))) {
    throw UnsupportedError("range_tripotent: non-normal element with octonionic entries");
  }
  const HermMatrix b = x.level() == 2 ? x : demote(x, 2);
  const HatMatrix h = hat_matrix(b);
  Eigen::JacobiSVD<HatMatrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  HatMatrix r = HatMatrix::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * std::max(1.0, sv(0))) r += svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
  }
  const HermMatrix rb = HermMatrix::from_matrix(unhat_matrix(r), 1e-8);
  return x.level() == 2 ? rb : promote(rb, x.level());
}

HermMatrix jordan_inverse(const HermMatrix& x) {
  if (is_normal(x)) {
    const SpectralResolution s = spectral_decompose(x);
    const double top = max_modulus(s.eigenvalues);
    HermMatrix y(x.order(), x.level());
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      const cplx a = s.eigenvalues[j];
      if (is_zero_eigen(a, top)) throw SingularError("jordan_inverse: element has a zero eigenvalue");
      y += (1.0 / a) * star(s.components[j]);
    }
    return y;
  }
  const LinearMap ux = op_U(x);
  Eigen::PartialPivLU<MatrixXc> lu(ux.matrix);
  if (!is_invertible(x)) throw SingularError("jordan_inverse: U_x is singular");
  return HermMatrix::from_coords(x.order(), x.level(), lu.solve(x.coords()));
}

bool is_invertible(const HermMatrix& x) {
  const std::vector<double> sv = singular_values(op_U(x).matrix);
  const auto [lo, hi] = std::minmax_element(sv.begin(), sv.end());
  return *lo > 1e-10 * std::max(1.0, *hi);
}

}  // namespace jbdet
