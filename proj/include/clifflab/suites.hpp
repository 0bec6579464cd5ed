#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clifflab/curvature.hpp"
#include "clifflab/report.hpp"
#include "clifflab/serialize.hpp"

namespace clifflab {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteInfo {
  int id = 0;
  std::string name;
};

/// The twelve acceptance suites in their fixed run order.
[[nodiscard]] const std::vector<SuiteInfo>& suite_list();

/// Runs one suite. Exceptions escaping the underlying checks are recorded as
/// failures, so this never throws for a valid id.
[[nodiscard]] VerificationReport run_suite(int id, std::uint64_t seed);

struct SuiteRun {
  SuiteInfo info;
  VerificationReport report;
  double seconds = 0;
};

struct VerifyAllResult {
  std::uint64_t seed = 0;
  std::vector<SuiteRun> runs;
  [[nodiscard]] bool passed() const;
};

[[nodiscard]] VerifyAllResult verify_all(std::uint64_t seed);
/// Timing is included only on request so default reports are byte-stable.
[[nodiscard]] Json verify_all_json(const VerifyAllResult& r, bool with_timing);

/// verify subcommand: relations, orthogonality, hodge or universality on a
/// user-supplied structure. Throws std::invalid_argument for other names.
[[nodiscard]] VerificationReport run_structure_suite(const EvenCliffordStructure& s, const std::string& suite,
                                                     std::uint64_t seed);

struct CurvatureCheck {
  bool passed = false;
  Json document;
};
/// curvature subcommand: identities, cc or spectrum on a named model.
[[nodiscard]] CurvatureCheck curvature_check(const std::string& model, const std::string& check);

}  // namespace clifflab
