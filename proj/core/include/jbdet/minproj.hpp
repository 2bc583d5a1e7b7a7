#pragma once

#include <string>

#include "jbdet/jordan.hpp"
#include "jbdet/numkit.hpp"

namespace jbdet {

enum class MinProjForm { corner, lower2x2, full };
std::string to_string(MinProjForm f);

/// corner:   diag(0, 0, 1)
/// lower2x2: [[0,0,0],[0,alpha,a],[0,a^,|a|^2/alpha]],   alpha = alpha^2 + |a|^2
/// full:     rows 2 and 3 are row 1 left-multiplied by a^/alpha and b^/alpha,
///           alpha = alpha^2 + |a|^2 + |b|^2
/// a, b are real octonions.
struct MinProjParams {
  MinProjForm form = MinProjForm::corner;
  double alpha = 0.0;
  CDElement a{3};
  CDElement b{3};
};

inline constexpr double kMinProjBuildTol = 1e-10;
inline constexpr double kMinProjClassifyTol = 1e-7;
inline constexpr double kMinProjMargin = 0.05;

double constraint_residual(const MinProjParams& p);
HermMatrix build_min_projection(const MinProjParams& p);
// No constraint check; used to rebuild from classified data.
HermMatrix build_min_projection_unchecked(const MinProjParams& p);

MinProjParams random_min_proj_params(Rng& rng, MinProjForm form, double margin = kMinProjMargin);
HermMatrix random_min_projection(Rng& rng);

struct Classification {
  MinProjParams params;
  int swap_k = 0;  // relabeling U(swap_k, swap_l) applied before reading; 0 when none
  int swap_l = 0;
  double residual = 0.0;
};

/// Reads (form, alpha, a, b) from a minimal projection after relabeling so
/// that the pivot diagonal entry is the largest available one.
Classification classify_min_projection(const HermMatrix& q, double tol = kMinProjClassifyTol);

// The orthogonal projection r with r o q = 0 built from the first row of a
// full-form q with a != 0.
HermMatrix min_projection_complement(const MinProjParams& p);

}  // namespace jbdet
