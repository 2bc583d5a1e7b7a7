#pragma once

#include <span>
#include <vector>

#include "jbdet/cd.hpp"
#include "jbdet/numkit.hpp"

namespace jbdet {

/// General n x n matrix with Cayley-Dickson entries of a fixed level.
class CDMatrix {
 public:
  CDMatrix(int order, int level);
  static CDMatrix identity(int order, int level);

  int order() const { return n_; }
  int level() const { return level_; }
  CDElement& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const CDElement& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  CDMatrix& operator+=(const CDMatrix& o);
  CDMatrix& operator-=(const CDMatrix& o);
  CDMatrix& operator*=(cplx s);

 private:
  int n_;
  int level_;
  std::vector<CDElement> e_;
};

CDMatrix operator+(CDMatrix a, const CDMatrix& b);
CDMatrix operator-(CDMatrix a, const CDMatrix& b);
CDMatrix operator*(cplx s, CDMatrix a);

CDMatrix box_mul(const CDMatrix& x, const CDMatrix& y);
// Transpose combined with the entrywise involution.
CDMatrix diamond(const CDMatrix& x);
CDMatrix star(const CDMatrix& x);
double max_abs_diff(const CDMatrix& x, const CDMatrix& y);

int herm_dim(int order, int level);

/// Diamond-hermitian matrix over H_C (level 2) or O (level 3, order 3).
///
/// Stored as complex coordinates over a fixed real basis: the n diagonal
/// slots, then 2^level slots for each upper position (1,2), (1,3), ...,
/// (2,3), ... in that order. For C6 this is (alpha, beta, gamma, a, b, c).
class HermMatrix {
 public:
  HermMatrix() : HermMatrix(3, 3) {}
  HermMatrix(int order, int level);

  static HermMatrix identity(int order, int level);
  static HermMatrix diagonal(std::span<const cplx> d, int level);
  static HermMatrix from_coords(int order, int level, VectorXc coords);
  static HermMatrix from_matrix(const CDMatrix& m, double tol = kDefaultTol);
  static HermMatrix basis(int order, int level, Eigen::Index k);

  int order() const { return n_; }
  int level() const { return level_; }
  Eigen::Index dim() const { return c_.size(); }
  const VectorXc& coords() const { return c_; }
  VectorXc& coords() { return c_; }

  Eigen::Index upper_offset(int i, int j) const;
  cplx diag(int i) const { return c_(i); }
  void set_diag(int i, cplx v) { c_(i) = v; }
  CDElement entry(int i, int j) const;
  // Writes x at (i,j) for i != j; the mirrored entry follows.
  void set_entry(int i, int j, const CDElement& x);

  CDMatrix to_matrix() const;

  HermMatrix& operator+=(const HermMatrix& o);
  HermMatrix& operator-=(const HermMatrix& o);
  HermMatrix& operator*=(cplx s);

 private:
  int n_;
  int level_;
  VectorXc c_;
};

using C6Element = HermMatrix;

HermMatrix operator+(HermMatrix a, const HermMatrix& b);
HermMatrix operator-(HermMatrix a, const HermMatrix& b);
HermMatrix operator-(HermMatrix a);
HermMatrix operator*(cplx s, HermMatrix a);
HermMatrix operator*(HermMatrix a, cplx s);

HermMatrix c6_identity();
HermMatrix promote(const HermMatrix& x, int level);
HermMatrix demote(const HermMatrix& x, int level);
// Off-diagonal entries lie in the level-m subalgebra within tol.
bool entries_in_sublevel(const HermMatrix& x, int m, double tol = kDefaultTol);
bool is_diagonal(const HermMatrix& x, double tol = kDefaultTol);

double sup_norm(const HermMatrix& x);
double max_abs_diff(const HermMatrix& x, const HermMatrix& y);
bool approx_equal(const HermMatrix& x, const HermMatrix& y, double tol = kDefaultTol);

HermMatrix jordan_mul(const HermMatrix& x, const HermMatrix& y);
HermMatrix star(const HermMatrix& x);
HermMatrix triple(const HermMatrix& x, const HermMatrix& y, const HermMatrix& z);

// Isotope with unitary unit e: x o_e y = {x,e,y}, x^{*e} = {e,x,e}.
HermMatrix isotope_mul(const HermMatrix& x, const HermMatrix& y, const HermMatrix& e);
HermMatrix isotope_star(const HermMatrix& x, const HermMatrix& e);

/// Operator on HermMatrix coordinates; conjugate-linear maps act as
/// x -> matrix * conj(x).
struct LinearMap {
  int order = 3;
  int level = 3;
  MatrixXc matrix;
  bool conjugate_linear = false;

  HermMatrix operator()(const HermMatrix& x) const;
  static LinearMap identity(int order, int level);
};

// outer after inner
LinearMap compose(const LinearMap& outer, const LinearMap& inner);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(cplx s, const LinearMap& a);

// Materializes a linear (or conjugate-linear) map from its action on the basis.
template <class F>
LinearMap materialize(int order, int level, bool conjugate_linear, F&& f) {
  LinearMap m{order, level, MatrixXc(herm_dim(order, level), herm_dim(order, level)), conjugate_linear};
  for (Eigen::Index k = 0; k < m.matrix.cols(); ++k) m.matrix.col(k) = f(HermMatrix::basis(order, level, k)).coords();
  return m;
}

LinearMap op_L(const HermMatrix& a, const HermMatrix& b);
LinearMap op_Q(const HermMatrix& a);
LinearMap op_U(const HermMatrix& a);

struct PeirceProjections {
  LinearMap p2, p1, p0;
};
PeirceProjections peirce_projections(const HermMatrix& e, double tol = 1e-8);

double tripotent_residual(const HermMatrix& x);
double projection_residual(const HermMatrix& x);
double unitary_residual(const HermMatrix& u);
bool is_tripotent(const HermMatrix& x, double tol = 1e-8);
bool is_projection(const HermMatrix& x, double tol = 1e-8);
bool is_orthogonal(const HermMatrix& x, const HermMatrix& y, double tol = 1e-8);
bool is_unitary(const HermMatrix& u, double tol = 1e-8);
bool is_self_adjoint(const HermMatrix& x, double tol = 1e-8);

// Complex dimension of the Peirce-2 space of a tripotent.
int peirce2_dim(const HermMatrix& e);
int tripotent_rank(const HermMatrix& e, double tol = 1e-8);

}  // namespace jbdet
