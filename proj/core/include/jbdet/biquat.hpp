#pragma once

#include <Eigen/Dense>

#include "jbdet/cd.hpp"
#include "jbdet/jordan.hpp"

namespace jbdet {

using Mat2C = Eigen::Matrix2cd;
using HatMatrix = Eigen::MatrixXcd;

/// Biquaternion -> 2x2 complex matrix,
/// (x1,x2,x3,x4) -> [[x1 + i x2, -x3 + i x4], [x3 + i x4, x1 - i x2]].
Mat2C hat(const CDElement& x);
CDElement unhat(const Mat2C& m);

// The involutions of H_C transported to 2x2 matrices.
Mat2C hat_conj(const Mat2C& m);
Mat2C hat_diamond(const Mat2C& m);
Mat2C hat_star(const Mat2C& m);

HatMatrix hat_matrix(const CDMatrix& x);
HatMatrix hat_matrix(const HermMatrix& x);
CDMatrix unhat_matrix(const HatMatrix& m);

}  // namespace jbdet
