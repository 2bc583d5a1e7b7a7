#pragma once

#include "jbdet/cd.hpp"
#include "jbdet/jordan.hpp"
#include "jbdet/numkit.hpp"

namespace jbdet {

// Gaussian coordinates; real parts only when real_form is set.
CDElement random_cd(Rng& rng, int level, bool real_form = false);
CDElement random_unit_real(Rng& rng, int level);
CDElement random_real_with_norm(Rng& rng, int level, double norm);

HermMatrix random_herm(Rng& rng, int order, int level);
// Real coordinates over the fixed basis, i.e. x* = x.
HermMatrix random_self_adjoint(Rng& rng, int order, int level);

}  // namespace jbdet
