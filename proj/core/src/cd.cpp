#include "jbdet/cd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jbdet/errors.hpp"

namespace jbdet {

namespace {

constexpr int kMaxTableLevel = 5;

void check_same_level(const CDElement& x, const CDElement& y, const char* op) {
  if (x.level() != y.level()) {
    throw DomainError(std::string(op) + ": level mismatch (" + std::to_string(x.level()) +
                      " vs " + std::to_string(y.level()) + ")");
  }
}

void diamond_into(const cplx* src, cplx* dst, std::size_t n) {
  dst[0] = src[0];
  for (std::size_t k = 1; k < n; ++k) dst[k] = -src[k];
}

// (x1,x2)(y1,y2) = (x1 y1 - y2 x2^<>, x1^<> y2 + y1 x2) on index ranges.
// scratch must hold at least 2n values.
void mul_rec(const cplx* x, const cplx* y, cplx* out, std::size_t n, cplx* scratch) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  cplx* d = scratch;
  cplx* t = scratch + h;
  cplx* rest = scratch + 2 * h;

  diamond_into(x + h, d, h);
  mul_rec(x, y, out, h, rest);
  mul_rec(y + h, d, t, h, rest);
  for (std::size_t k = 0; k < h; ++k) out[k] -= t[k];

  diamond_into(x, d, h);
  mul_rec(d, y + h, out + h, h, rest);
  mul_rec(y, x + h, t, h, rest);
  for (std::size_t k = 0; k < h; ++k) out[h + k] += t[k];
}

using SignTable = std::vector<signed char>;

std::array<SignTable, kMaxTableLevel + 1> build_tables() {
  std::array<SignTable, kMaxTableLevel + 1> tables;
  for (int level = 0; level <= kMaxTableLevel; ++level) {
    const std::size_t n = std::size_t{1} << level;
    SignTable& t = tables[level];
    t.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CDElement p = cd_multiply_recursive(CDElement::basis(level, i), CDElement::basis(level, j));
        const std::size_t k = i ^ j;
        const double s = p[k].real();
        if (std::abs(std::abs(s) - 1.0) != 0.0 || p[k].imag() != 0.0) {
          throw std::logic_error("basis product is not a signed basis element");
        }
        t[i * n + j] = s > 0 ? 1 : -1;
      }
    }
  }
  return tables;
}

const std::array<SignTable, kMaxTableLevel + 1>& sign_tables() {
  static const auto tables = build_tables();
  return tables;
}

}  // namespace

CDElement::CDElement(int level) : level_(level) {
  if (level < 0 || level > 20) throw DomainError("CDElement: bad level " + std::to_string(level));
  c_.assign(std::size_t{1} << level, cplx{});
}

CDElement::CDElement(int level, std::initializer_list<cplx> coords) : CDElement(level) {
  if (coords.size() != c_.size()) throw DomainError("CDElement: coordinate count must be 2^level");
  std::copy(coords.begin(), coords.end(), c_.begin());
}

CDElement CDElement::basis(int level, std::size_t j, cplx scale) {
  CDElement e(level);
  if (j >= e.dim()) throw DomainError("CDElement::basis: index out of range");
  e.c_[j] = scale;
  return e;
}

CDElement& CDElement::operator+=(const CDElement& o) {
  check_same_level(*this, o, "add");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CDElement& CDElement::operator-=(const CDElement& o) {
  check_same_level(*this, o, "subtract");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CDElement& CDElement::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}

bool CDElement::is_real(double tol) const {
  return std::all_of(c_.begin(), c_.end(), [tol](cplx v) { return std::abs(v.imag()) <= tol; });
}

double CDElement::max_abs() const {
  double m = 0;
  for (auto v : c_) m = std::max(m, std::abs(v));
  return m;
}

CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
CDElement operator-(CDElement a) { return a *= -1.0; }
CDElement operator*(cplx s, CDElement a) { return a *= s; }
CDElement operator*(CDElement a, cplx s) { return a *= s; }
CDElement operator/(CDElement a, cplx s) { return a *= (1.0 / s); }

CDElement cd_multiply_recursive(const CDElement& x, const CDElement& y) {
  check_same_level(x, y, "cd_multiply");
  CDElement out(x.level());
  std::vector<cplx> scratch(2 * x.dim());
  mul_rec(x.coords().data(), y.coords().data(), out.coords().data(), x.dim(), scratch.data());
  return out;
}

int cd_basis_sign(int level, std::size_t i, std::size_t j) {
  if (level > kMaxTableLevel) {
    CDElement p = cd_multiply_recursive(CDElement::basis(level, i), CDElement::basis(level, j));
    return p[i ^ j].real() > 0 ? 1 : -1;
  }
  const std::size_t n = std::size_t{1} << level;
  return sign_tables()[level][i * n + j];
}

const signed char* cd_sign_table(int level) {
  if (level < 0 || level > kMaxTableLevel) throw DomainError("cd_sign_table: level out of range");
  return sign_tables()[level].data();
}

CDElement cd_multiply(const CDElement& x, const CDElement& y) {
  check_same_level(x, y, "cd_multiply");
  const int level = x.level();
  if (level > kMaxTableLevel) return cd_multiply_recursive(x, y);
  const std::size_t n = x.dim();
  const signed char* s = sign_tables()[level].data();
  CDElement out(level);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i];
    if (xi == cplx{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx p = xi * y[j];
      if (s[i * n + j] > 0) {
        out[i ^ j] += p;
      } else {
        out[i ^ j] -= p;
      }
    }
  }
  return out;
}

CDElement cd_conj(const CDElement& x) {
  CDElement r = x;
  for (auto& v : r.coords()) v = std::conj(v);
  return r;
}

CDElement cd_diamond(const CDElement& x) {
  CDElement r(x.level());
  diamond_into(x.coords().data(), r.coords().data(), x.dim());
  return r;
}

CDElement cd_star(const CDElement& x) {
  CDElement r(x.level());
  r[0] = std::conj(x[0]);
  for (std::size_t k = 1; k < x.dim(); ++k) r[k] = -std::conj(x[k]);
  return r;
}

cplx cd_inner(const CDElement& x, const CDElement& y) {
  check_same_level(x, y, "cd_inner");
  cplx s{};
  for (std::size_t k = 0; k < x.dim(); ++k) s += x[k] * std::conj(y[k]);
  return s;
}

double cd_norm2(const CDElement& x) {
  double s = 0;
  for (auto v : x.coords()) s += std::norm(v);
  return std::sqrt(s);
}

double cd_spin_norm(const CDElement& x) {
  double n2 = 0;
  cplx q{};
  for (auto v : x.coords()) {
    n2 += std::norm(v);
    q += v * v;
  }
  const double disc = std::max(0.0, n2 * n2 - std::norm(q));
  return std::sqrt(n2 + std::sqrt(disc));
}

CDElement cd_triple(const CDElement& x, const CDElement& y, const CDElement& z) {
  check_same_level(x, y, "cd_triple");
  check_same_level(x, z, "cd_triple");
  return cd_inner(x, y) * z + cd_inner(z, y) * x - cd_inner(x, cd_conj(z)) * cd_conj(y);
}

CDElement cd_jordan(const CDElement& x, const CDElement& y) {
  return 0.5 * (cd_multiply(x, y) + cd_multiply(y, x));
}

bool in_sublevel(const CDElement& x, int m, double tol) {
  const std::size_t start = std::size_t{1} << m;
  for (std::size_t k = start; k < x.dim(); ++k) {
    if (std::abs(x[k]) > tol) return false;
  }
  return true;
}

CDElement promote(const CDElement& x, int level) {
  if (level < x.level()) throw DomainError("promote: target level below source level");
  CDElement r(level);
  std::copy(x.coords().begin(), x.coords().end(), r.coords().begin());
  return r;
}

CDElement demote(const CDElement& x, int level) {
  if (level > x.level()) throw DomainError("demote: target level above source level");
  CDElement r(level);
  std::copy_n(x.coords().begin(), r.dim(), r.coords().begin());
  return r;
}

double max_abs_diff(const CDElement& x, const CDElement& y) {
  check_same_level(x, y, "max_abs_diff");
  double m = 0;
  for (std::size_t k = 0; k < x.dim(); ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

bool approx_equal(const CDElement& x, const CDElement& y, double tol) {
  return x.level() == y.level() && max_abs_diff(x, y) <= tol;
}

}  // namespace jbdet
