#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jbdet/c6_auto.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/jordan.hpp"

namespace jbdet {

enum class ReductionBranch { case1, case2, case3_1, case3_2_1, case3_2_2 };
inline constexpr std::array<ReductionBranch, 5> kAllBranches{ReductionBranch::case1, ReductionBranch::case2,
                                                             ReductionBranch::case3_1, ReductionBranch::case3_2_1,
                                                             ReductionBranch::case3_2_2};
std::string case_path(ReductionBranch b);

struct ReductionStep {
  std::string label;
  double residual = 0.0;
};

struct ReductionCertificate {
  std::optional<ReductionBranch> branch;  // empty when no case analysis ran
  std::string case_path;
  std::vector<ReductionStep> steps;
  double worst_residual = 0.0;

  void record(std::string label, double residual);
};

struct LiftStep {
  OctonionMap t;
  LiftVariant variant;
  std::string label;
};

struct FrameReduction {
  std::vector<LiftStep> lifts;  // applied in order
  Frame images;                 // images of the input frame, input order
  ReductionCertificate certificate;
};

inline constexpr double kReduceTol = 1e-8;

/// Moves a frame of minimal projections so every entry is a quaternion,
/// using only lifted maps (which preserve diagonal matrices).
FrameReduction reduce_frame(const Frame& q, double tol = kReduceTol);
C6Auto materialize_lifts(const std::vector<LiftStep>& lifts);

/// Minimal projections q_j and values alpha_j with x = sum alpha_j q_j, for
/// x normal. Rank-2 spectral projections are split by compressing a random
/// self-adjoint element.
Frame minimal_frame(const HermMatrix& x, std::array<cplx, 3>* alpha = nullptr,
                    std::uint64_t seed = 0x5b1fULL);

struct ReductionResult {
  C6Auto automorphism;
  std::vector<HermMatrix> images;
  ReductionCertificate certificate;
};

// e must be a diagonal unitary; u any unitary.
ReductionResult simultaneous_biq(const HermMatrix& u, const HermMatrix& e);
// a_diagonalizer must map a to a diagonal matrix.
ReductionResult simultaneous_quat(const HermMatrix& a, const HermMatrix& b, const C6Auto& a_diagonalizer);
// Splits helper(x) = a + i b with a, b self-adjoint; a must come out diagonal
// unless helper(x) is already biquaternionic.
ReductionResult reduce_single(const HermMatrix& x, const C6Auto* helper = nullptr);

}  // namespace jbdet

namespace jbdet {

// Random frame whose case analysis is steered towards `target`; the
// labelled branches other than the generic last one are measure-zero for
// random frames.
Frame coverage_frame(Rng& rng, ReductionBranch target);

}  // namespace jbdet
