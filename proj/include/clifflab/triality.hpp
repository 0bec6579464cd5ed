#pragma once

#include "clifflab/even_structure.hpp"

namespace clifflab {

/// so(8) automorphism sending the half-spin image of 1/2 e_i e_j to the vector
/// image E_ij (E_ij e_i = e_j), solved exactly on skew coordinates.
struct TrialityResult {
  RatMatrix phi;  // 28 x 28, acting on skew coordinates
  bool bijective = false;
  std::size_t bracket_pairs = 0;
  JFamily pulled_back;  // K_ij = 2 phi(E_ij)
  VerificationReport report;

  [[nodiscard]] RatMatrix apply(const RatMatrix& a) const;
};

[[nodiscard]] TrialityResult triality_map();

}  // namespace clifflab
