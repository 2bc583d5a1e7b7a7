#include "jbdet/jordan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "jbdet/errors.hpp"

namespace jbdet {

namespace {

void check_shape(const HermMatrix& x, const HermMatrix& y, const char* op) {
  if (x.order() != y.order() || x.level() != y.level()) {
    throw DomainError(std::string(op) + ": shape or level mismatch");
  }
}

void check_shape(const CDMatrix& x, const CDMatrix& y, const char* op) {
  if (x.order() != y.order() || x.level() != y.level()) {
    throw DomainError(std::string(op) + ": shape or level mismatch");
  }
}

// Read-only view of entry (i,j): a scalar on the diagonal, a stored upper
// entry, or the diamond of a stored upper entry below the diagonal.
struct EntryView {
  const cplx* p;
  enum Kind { scalar, upper, lower } kind;
};

EntryView view(const HermMatrix& x, int i, int j) {
  const cplx* base = x.coords().data();
  if (i == j) return {base + i, EntryView::scalar};
  if (i < j) return {base + x.upper_offset(i, j), EntryView::upper};
  return {base + x.upper_offset(j, i), EntryView::lower};
}

// out += scale * (a b), entries of dimension m.
void acc_product(const EntryView& a, const EntryView& b, cplx* out, std::size_t m, const signed char* sign,
                 double scale) {
  if (a.kind == EntryView::scalar && b.kind == EntryView::scalar) {
    out[0] += scale * a.p[0] * b.p[0];
    return;
  }
  if (a.kind == EntryView::scalar || b.kind == EntryView::scalar) {
    const EntryView& s = a.kind == EntryView::scalar ? a : b;
    const EntryView& v = a.kind == EntryView::scalar ? b : a;
    const cplx f = scale * s.p[0];
    if (f == cplx{}) return;
    out[0] += f * v.p[0];
    const double sg = v.kind == EntryView::lower ? -1.0 : 1.0;
    for (std::size_t k = 1; k < m; ++k) out[k] += sg * f * v.p[k];
    return;
  }
  const double sa = a.kind == EntryView::lower ? -1.0 : 1.0;
  const double sb = b.kind == EntryView::lower ? -1.0 : 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    cplx ai = a.p[i];
    if (ai == cplx{}) continue;
    if (i > 0) ai *= sa;
    ai *= scale;
    const signed char* srow = sign + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      cplx p = ai * b.p[j];
      if (j > 0 && sb < 0) p = -p;
      if (srow[j] > 0) {
        out[i ^ j] += p;
      } else {
        out[i ^ j] -= p;
      }
    }
  }
}

}  // namespace

CDMatrix::CDMatrix(int order, int level) : n_(order), level_(level) {
  if (order < 1) throw DomainError("CDMatrix: order must be positive");
  e_.assign(static_cast<std::size_t>(order * order), CDElement(level));
}

CDMatrix CDMatrix::identity(int order, int level) {
  CDMatrix m(order, level);
  for (int i = 0; i < order; ++i) m(i, i) = CDElement::one(level);
  return m;
}

CDMatrix& CDMatrix::operator+=(const CDMatrix& o) {
  check_shape(*this, o, "CDMatrix +");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

CDMatrix& CDMatrix::operator-=(const CDMatrix& o) {
  check_shape(*this, o, "CDMatrix -");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

CDMatrix& CDMatrix::operator*=(cplx s) {
  for (auto& e : e_) e *= s;
  return *this;
}

CDMatrix operator+(CDMatrix a, const CDMatrix& b) { return a += b; }
CDMatrix operator-(CDMatrix a, const CDMatrix& b) { return a -= b; }
CDMatrix operator*(cplx s, CDMatrix a) { return a *= s; }

CDMatrix box_mul(const CDMatrix& x, const CDMatrix& y) {
  check_shape(x, y, "box_mul");
  const int n = x.order();
  CDMatrix r(n, x.level());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) r(i, j) += cd_multiply(x(i, k), y(k, j));
    }
  }
  return r;
}

CDMatrix diamond(const CDMatrix& x) {
  CDMatrix r(x.order(), x.level());
  for (int i = 0; i < x.order(); ++i) {
    for (int j = 0; j < x.order(); ++j) r(i, j) = cd_diamond(x(j, i));
  }
  return r;
}

CDMatrix star(const CDMatrix& x) {
  CDMatrix r(x.order(), x.level());
  for (int i = 0; i < x.order(); ++i) {
    for (int j = 0; j < x.order(); ++j) r(i, j) = cd_star(x(j, i));
  }
  return r;
}

double max_abs_diff(const CDMatrix& x, const CDMatrix& y) {
  check_shape(x, y, "max_abs_diff");
  double m = 0;
  for (int i = 0; i < x.order(); ++i) {
    for (int j = 0; j < x.order(); ++j) m = std::max(m, max_abs_diff(x(i, j), y(i, j)));
  }
  return m;
}

int herm_dim(int order, int level) { return order + (1 << level) * order * (order - 1) / 2; }

HermMatrix::HermMatrix(int order, int level) : n_(order), level_(level) {
  if (order < 1) throw DomainError("HermMatrix: order must be positive");
  if (level < 0 || level > 3) throw DomainError("HermMatrix: entry level must be in 0..3");
  if (level == 3 && order > 3) throw DomainError("HermMatrix: octonionic entries require order <= 3");
  c_ = VectorXc::Zero(herm_dim(order, level));
}

HermMatrix HermMatrix::identity(int order, int level) {
  HermMatrix x(order, level);
  for (int i = 0; i < order; ++i) x.c_(i) = 1.0;
  return x;
}

HermMatrix HermMatrix::diagonal(std::span<const cplx> d, int level) {
  HermMatrix x(static_cast<int>(d.size()), level);
  for (std::size_t i = 0; i < d.size(); ++i) x.c_(static_cast<Eigen::Index>(i)) = d[i];
  return x;
}

HermMatrix HermMatrix::from_coords(int order, int level, VectorXc coords) {
  HermMatrix x(order, level);
  if (coords.size() != x.dim()) throw DomainError("HermMatrix::from_coords: wrong coordinate count");
  x.c_ = std::move(coords);
  return x;
}

HermMatrix HermMatrix::basis(int order, int level, Eigen::Index k) {
  HermMatrix x(order, level);
  x.c_(k) = 1.0;
  return x;
}

HermMatrix HermMatrix::from_matrix(const CDMatrix& m, double tol) {
  HermMatrix x(m.order(), m.level());
  for (int i = 0; i < m.order(); ++i) {
    if (!in_sublevel(m(i, i), 0, tol)) throw DomainError("HermMatrix: diagonal entries must be complex scalars");
    x.c_(i) = m(i, i)[0];
    for (int j = i + 1; j < m.order(); ++j) {
      if (max_abs_diff(m(j, i), cd_diamond(m(i, j))) > tol) {
        throw DomainError("HermMatrix: matrix is not diamond-hermitian at (" + std::to_string(j + 1) + "," +
                          std::to_string(i + 1) + ")");
      }
      x.set_entry(i, j, m(i, j));
    }
  }
  return x;
}

Eigen::Index HermMatrix::upper_offset(int i, int j) const {
  // pairs (i,j), i<j, enumerated row by row
  const int before = i * n_ - i * (i + 1) / 2;
  return n_ + static_cast<Eigen::Index>(before + (j - i - 1)) * (Eigen::Index{1} << level_);
}

CDElement HermMatrix::entry(int i, int j) const {
  CDElement x(level_);
  if (i == j) {
    x[0] = c_(i);
    return x;
  }
  const Eigen::Index off = i < j ? upper_offset(i, j) : upper_offset(j, i);
  for (std::size_t k = 0; k < x.dim(); ++k) x[k] = c_(off + static_cast<Eigen::Index>(k));
  return i < j ? x : cd_diamond(x);
}

void HermMatrix::set_entry(int i, int j, const CDElement& x) {
  if (i == j) throw DomainError("HermMatrix::set_entry: use set_diag for diagonal entries");
  if (x.level() != level_) throw DomainError("HermMatrix::set_entry: level mismatch");
  const CDElement v = i < j ? x : cd_diamond(x);
  const Eigen::Index off = i < j ? upper_offset(i, j) : upper_offset(j, i);
  for (std::size_t k = 0; k < v.dim(); ++k) c_(off + static_cast<Eigen::Index>(k)) = v[k];
}

CDMatrix HermMatrix::to_matrix() const {
  CDMatrix m(n_, level_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m(i, j) = entry(i, j);
  }
  return m;
}

HermMatrix& HermMatrix::operator+=(const HermMatrix& o) {
  check_shape(*this, o, "HermMatrix +");
  c_ += o.c_;
  return *this;
}

HermMatrix& HermMatrix::operator-=(const HermMatrix& o) {
  check_shape(*this, o, "HermMatrix -");
  c_ -= o.c_;
  return *this;
}

HermMatrix& HermMatrix::operator*=(cplx s) {
  c_ *= s;
  return *this;
}

HermMatrix operator+(HermMatrix a, const HermMatrix& b) { return a += b; }
HermMatrix operator-(HermMatrix a, const HermMatrix& b) { return a -= b; }
HermMatrix operator-(HermMatrix a) { return a *= -1.0; }
HermMatrix operator*(cplx s, HermMatrix a) { return a *= s; }
HermMatrix operator*(HermMatrix a, cplx s) { return a *= s; }

HermMatrix c6_identity() { return HermMatrix::identity(3, 3); }

HermMatrix promote(const HermMatrix& x, int level) {
  if (level < x.level()) throw DomainError("promote: target level below source level");
  HermMatrix r(x.order(), level);
  for (int i = 0; i < x.order(); ++i) {
    r.set_diag(i, x.diag(i));
    for (int j = i + 1; j < x.order(); ++j) r.set_entry(i, j, promote(x.entry(i, j), level));
  }
  return r;
}

HermMatrix demote(const HermMatrix& x, int level) {
  if (level > x.level()) throw DomainError("demote: target level above source level");
  HermMatrix r(x.order(), level);
  for (int i = 0; i < x.order(); ++i) {
    r.set_diag(i, x.diag(i));
    for (int j = i + 1; j < x.order(); ++j) r.set_entry(i, j, demote(x.entry(i, j), level));
  }
  return r;
}

bool entries_in_sublevel(const HermMatrix& x, int m, double tol) {
  for (int i = 0; i < x.order(); ++i) {
    for (int j = i + 1; j < x.order(); ++j) {
      if (!in_sublevel(x.entry(i, j), m, tol)) return false;
    }
  }
  return true;
}

bool is_diagonal(const HermMatrix& x, double tol) {
  return x.coords().tail(x.dim() - x.order()).cwiseAbs().maxCoeff() <= tol || x.order() == 1;
}

double sup_norm(const HermMatrix& x) { return x.dim() == 0 ? 0.0 : x.coords().cwiseAbs().maxCoeff(); }

double max_abs_diff(const HermMatrix& x, const HermMatrix& y) {
  check_shape(x, y, "max_abs_diff");
  return (x.coords() - y.coords()).cwiseAbs().maxCoeff();
}

bool approx_equal(const HermMatrix& x, const HermMatrix& y, double tol) {
  return x.order() == y.order() && x.level() == y.level() && max_abs_diff(x, y) <= tol;
}

HermMatrix jordan_mul(const HermMatrix& x, const HermMatrix& y) {
  check_shape(x, y, "jordan_mul");
  const int n = x.order();
  const std::size_t m = std::size_t{1} << x.level();
  const signed char* sign = cd_sign_table(x.level());
  HermMatrix r(n, x.level());
  std::array<cplx, 8> acc{};
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::fill(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(m), cplx{});
      for (int k = 0; k < n; ++k) {
        acc_product(view(x, i, k), view(y, k, j), acc.data(), m, sign, 0.5);
        acc_product(view(y, i, k), view(x, k, j), acc.data(), m, sign, 0.5);
      }
      if (i == j) {
        r.coords()(i) = acc[0];
      } else {
        const Eigen::Index off = r.upper_offset(i, j);
        for (std::size_t k = 0; k < m; ++k) r.coords()(off + static_cast<Eigen::Index>(k)) = acc[k];
      }
    }
  }
  return r;
}

HermMatrix star(const HermMatrix& x) {
  HermMatrix r = x;
  r.coords() = x.coords().conjugate();
  return r;
}

HermMatrix triple(const HermMatrix& x, const HermMatrix& y, const HermMatrix& z) {
  check_shape(x, y, "triple");
  check_shape(x, z, "triple");
  const HermMatrix ys = star(y);
  return jordan_mul(jordan_mul(x, ys), z) + jordan_mul(jordan_mul(z, ys), x) - jordan_mul(jordan_mul(x, z), ys);
}

HermMatrix isotope_mul(const HermMatrix& x, const HermMatrix& y, const HermMatrix& e) { return triple(x, e, y); }

HermMatrix isotope_star(const HermMatrix& x, const HermMatrix& e) { return triple(e, x, e); }

HermMatrix LinearMap::operator()(const HermMatrix& x) const {
  if (x.order() != order || x.level() != level) throw DomainError("LinearMap: argument has the wrong shape");
  VectorXc v = conjugate_linear ? VectorXc(matrix * x.coords().conjugate()) : VectorXc(matrix * x.coords());
  return HermMatrix::from_coords(order, level, std::move(v));
}

LinearMap LinearMap::identity(int order, int level) {
  const int d = herm_dim(order, level);
  return {order, level, MatrixXc::Identity(d, d), false};
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.order != inner.order || outer.level != inner.level) throw DomainError("compose: shape mismatch");
  LinearMap r{outer.order, outer.level, MatrixXc(), outer.conjugate_linear != inner.conjugate_linear};
  r.matrix = outer.conjugate_linear ? MatrixXc(outer.matrix * inner.matrix.conjugate())
                                    : MatrixXc(outer.matrix * inner.matrix);
  return r;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.conjugate_linear != b.conjugate_linear) throw DomainError("LinearMap +: mixed linearity");
  return {a.order, a.level, a.matrix + b.matrix, a.conjugate_linear};
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.conjugate_linear != b.conjugate_linear) throw DomainError("LinearMap -: mixed linearity");
  return {a.order, a.level, a.matrix - b.matrix, a.conjugate_linear};
}

LinearMap operator*(cplx s, const LinearMap& a) { return {a.order, a.level, s * a.matrix, a.conjugate_linear}; }

LinearMap op_L(const HermMatrix& a, const HermMatrix& b) {
  check_shape(a, b, "op_L");
  return materialize(a.order(), a.level(), false, [&](const HermMatrix& x) { return triple(a, b, x); });
}

LinearMap op_Q(const HermMatrix& a) {
  const HermMatrix a2 = jordan_mul(a, a);
  return materialize(a.order(), a.level(), true, [&](const HermMatrix& x) {
    const HermMatrix xs = star(x);
    return 2.0 * jordan_mul(jordan_mul(a, xs), a) - jordan_mul(a2, xs);
  });
}

LinearMap op_U(const HermMatrix& a) {
  const HermMatrix a2 = jordan_mul(a, a);
  return materialize(a.order(), a.level(), false, [&](const HermMatrix& x) {
    return 2.0 * jordan_mul(jordan_mul(a, x), a) - jordan_mul(a2, x);
  });
}

PeirceProjections peirce_projections(const HermMatrix& e, double tol) {
  if (!is_tripotent(e, tol)) throw DomainError("peirce_projections: argument is not a tripotent");
  const LinearMap q = op_Q(e);
  const LinearMap p2 = compose(q, q);
  const LinearMap l = op_L(e, e);
  const LinearMap id = LinearMap::identity(e.order(), e.level());
  return {p2, 2.0 * (l - p2), id - 2.0 * l + p2};
}

double tripotent_residual(const HermMatrix& x) { return max_abs_diff(triple(x, x, x), x); }

double projection_residual(const HermMatrix& x) {
  return std::max(max_abs_diff(x, star(x)), max_abs_diff(jordan_mul(x, x), x));
}

double unitary_residual(const HermMatrix& u) {
  const HermMatrix us = star(u);
  const HermMatrix one = HermMatrix::identity(u.order(), u.level());
  return std::max(max_abs_diff(jordan_mul(u, us), one), max_abs_diff(jordan_mul(jordan_mul(u, u), us), u));
}

bool is_tripotent(const HermMatrix& x, double tol) { return tripotent_residual(x) <= tol; }
bool is_projection(const HermMatrix& x, double tol) { return projection_residual(x) <= tol; }
bool is_orthogonal(const HermMatrix& x, const HermMatrix& y, double tol) { return sup_norm(triple(x, x, y)) <= tol; }
bool is_unitary(const HermMatrix& u, double tol) { return unitary_residual(u) <= tol; }
bool is_self_adjoint(const HermMatrix& x, double tol) { return max_abs_diff(x, star(x)) <= tol; }

int peirce2_dim(const HermMatrix& e) {
  const LinearMap q = op_Q(e);
  const cplx tr = (q.matrix * q.matrix.conjugate()).trace();
  const double d = tr.real();
  const long rounded = std::lround(d);
  if (std::abs(d - static_cast<double>(rounded)) > 1e-3 || std::abs(tr.imag()) > 1e-3) {
    throw ConsistencyError("peirce2_dim: Peirce-2 trace is not an integer: " + std::to_string(d),
                           std::abs(d - static_cast<double>(rounded)));
  }
  return static_cast<int>(rounded);
}

int tripotent_rank(const HermMatrix& e, double tol) {
  if (!is_tripotent(e, tol)) throw DomainError("tripotent_rank: argument is not a tripotent");
  const int d = peirce2_dim(e);
  for (int k = 0; k <= e.order(); ++k) {
    if (k + (1 << e.level()) * k * (k - 1) / 2 == d) return k;
  }
  throw ConsistencyError("tripotent_rank: Peirce-2 dimension " + std::to_string(d) + " matches no rank", 0.0);
}

}  // namespace jbdet
