#include "jbdet/biquat.hpp"

#include "jbdet/errors.hpp"

namespace jbdet {

namespace {
constexpr cplx I{0.0, 1.0};
}

Mat2C hat(const CDElement& x) {
  if (x.level() != 2) throw DomainError("hat: expected a biquaternion (level 2)");
  Mat2C m;
  m << x[0] + I * x[1], -x[2] + I * x[3],
       x[2] + I * x[3], x[0] - I * x[1];
  return m;
}

CDElement unhat(const Mat2C& m) {
  const cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return CDElement(2, {(a + d) / 2.0, (a - d) / (2.0 * I), (c - b) / 2.0, (b + c) / (2.0 * I)});
}

Mat2C hat_conj(const Mat2C& m) {
  Mat2C r;
  r << std::conj(m(1, 1)), -std::conj(m(1, 0)),
       -std::conj(m(0, 1)), std::conj(m(0, 0));
  return r;
}

Mat2C hat_diamond(const Mat2C& m) {
  Mat2C r;
  r << m(1, 1), -m(0, 1),
       -m(1, 0), m(0, 0);
  return r;
}

Mat2C hat_star(const Mat2C& m) { return m.adjoint(); }

HatMatrix hat_matrix(const CDMatrix& x) {
  if (x.level() != 2) throw DomainError("hat_matrix: entries must be biquaternions (level 2)");
  const int n = x.order();
  HatMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.block<2, 2>(2 * i, 2 * j) = hat(x(i, j));
  }
  return m;
}

HatMatrix hat_matrix(const HermMatrix& x) { return hat_matrix(x.to_matrix()); }

CDMatrix unhat_matrix(const HatMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw DomainError("unhat_matrix: expected a 2n x 2n matrix");
  const int n = static_cast<int>(m.rows() / 2);
  CDMatrix x(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = unhat(m.block<2, 2>(2 * i, 2 * j));
  }
  return x;
}

}  // namespace jbdet
