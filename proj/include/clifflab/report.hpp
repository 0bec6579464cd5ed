#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clifflab/rational.hpp"

namespace clifflab {

struct Failure {
  std::string relation;
  std::vector<int> indices;
  Rational residual;  // largest absolute entry of the defect
};

/// Outcome of a verification sweep. Only the first kMaxStoredFailures
/// failures are kept; failure_count carries the total.
struct VerificationReport {
  static constexpr std::size_t kMaxStoredFailures = 64;

  std::string suite;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const noexcept { return failure_count == 0; }

  void fail(std::string relation, std::vector<int> indices, Rational residual) {
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back({std::move(relation), std::move(indices), residual});
  }

  /// Records a check; a nonzero residual is a failure.
  void check(bool ok, const std::string& relation, std::vector<int> indices, const Rational& residual) {
    ++checks;
    if (!ok) fail(relation, std::move(indices), residual);
  }

  void value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }

  void merge(const VerificationReport& o) {
    checks += o.checks;
    failure_count += o.failure_count;
    for (const auto& f : o.failures)
      if (failures.size() < kMaxStoredFailures) failures.push_back(f);
    values.insert(values.end(), o.values.begin(), o.values.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

/// Seeded generator with a portable integer draw (the standard distributions
/// are implementation-defined, which would break report reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace clifflab
