#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace jbdet {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// Element of the level-n Cayley-Dickson algebra, stored as 2^n complex
/// coordinates. The first half of the coordinates is x1, the second half x2.
class CDElement {
 public:
  CDElement() : CDElement(0) {}
  explicit CDElement(int level);
  CDElement(int level, std::initializer_list<cplx> coords);

  static CDElement basis(int level, std::size_t j, cplx scale = 1.0);
  static CDElement scalar(int level, cplx z) { return basis(level, 0, z); }
  static CDElement one(int level) { return basis(level, 0, 1.0); }

  int level() const { return level_; }
  std::size_t dim() const { return c_.size(); }

  cplx& operator[](std::size_t k) { return c_[k]; }
  const cplx& operator[](std::size_t k) const { return c_[k]; }
  std::span<cplx> coords() { return {c_.data(), c_.size()}; }
  std::span<const cplx> coords() const { return {c_.data(), c_.size()}; }

  CDElement& operator+=(const CDElement& o);
  CDElement& operator-=(const CDElement& o);
  CDElement& operator*=(cplx s);

  /// Coordinates real within tol, i.e. the element lies in the real form.
  bool is_real(double tol = kDefaultTol) const;
  double max_abs() const;

 private:
  int level_;
  boost::container::small_vector<cplx, 8> c_;
};

CDElement operator+(CDElement a, const CDElement& b);
CDElement operator-(CDElement a, const CDElement& b);
CDElement operator-(CDElement a);
CDElement operator*(cplx s, CDElement a);
CDElement operator*(CDElement a, cplx s);
CDElement operator/(CDElement a, cplx s);

CDElement cd_multiply(const CDElement& x, const CDElement& y);
// Same product evaluated directly by the doubling recursion.
CDElement cd_multiply_recursive(const CDElement& x, const CDElement& y);
inline CDElement operator*(const CDElement& x, const CDElement& y) { return cd_multiply(x, y); }

// Sign s with e_i e_j = s e_{i^j}.
int cd_basis_sign(int level, std::size_t i, std::size_t j);
// Row-major 2^n x 2^n table of those signs, for levels up to 5.
const signed char* cd_sign_table(int level);

CDElement cd_conj(const CDElement& x);
CDElement cd_diamond(const CDElement& x);
CDElement cd_star(const CDElement& x);

cplx cd_inner(const CDElement& x, const CDElement& y);
double cd_norm2(const CDElement& x);  // Hilbertian norm
double cd_spin_norm(const CDElement& x);

CDElement cd_triple(const CDElement& x, const CDElement& y, const CDElement& z);
CDElement cd_jordan(const CDElement& x, const CDElement& y);

// Coordinates 2^m.. are zero within tol, i.e. x lies in the level-m subalgebra.
bool in_sublevel(const CDElement& x, int m, double tol = kDefaultTol);
CDElement promote(const CDElement& x, int level);
CDElement demote(const CDElement& x, int level);

double max_abs_diff(const CDElement& x, const CDElement& y);
bool approx_equal(const CDElement& x, const CDElement& y, double tol = kDefaultTol);

}  // namespace jbdet
