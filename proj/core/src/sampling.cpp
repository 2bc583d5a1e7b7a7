#include "jbdet/sampling.hpp"

namespace jbdet {

CDElement random_cd(Rng& rng, int level, bool real_form) {
  CDElement x(level);
  for (auto& v : x.coords()) v = real_form ? cplx(rng.normal(), 0.0) : rng.normal_complex();
  return x;
}

CDElement random_unit_real(Rng& rng, int level) {
  CDElement x = random_cd(rng, level, true);
  const double n = cd_norm2(x);
  return n > 0 ? x / n : CDElement::one(level);
}

CDElement random_real_with_norm(Rng& rng, int level, double norm) {
  return random_unit_real(rng, level) * norm;
}

HermMatrix random_herm(Rng& rng, int order, int level) {
  VectorXc c(herm_dim(order, level));
  for (auto& v : c) v = rng.normal_complex();
  return HermMatrix::from_coords(order, level, std::move(c));
}

HermMatrix random_self_adjoint(Rng& rng, int order, int level) {
  VectorXc c(herm_dim(order, level));
  for (auto& v : c) v = rng.normal();
  return HermMatrix::from_coords(order, level, std::move(c));
}

}  // namespace jbdet
