#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clifflab/rational.hpp"
#include "clifflab/report.hpp"

namespace clifflab {

using Params = std::map<std::string, std::int64_t>;

enum class VerdictReason { fails_condition_a, fails_divisibility_b, needs_equivariance_argument, admissible };
[[nodiscard]] std::string to_string(VerdictReason r);

/// Symmetric space G/H from the case analysis, with its dimension and the
/// rank r of an so(r) summand (r >= 5) of the isotropy algebra, if any.
struct SymmetricSpaceCandidate {
  int case_id = 0;
  std::string key;    // "case4", "case8-F4", ...
  std::string label;  // G/H in the candidate's own parameters
  std::string dim_formula;
  std::vector<std::string> param_names;
  std::vector<std::int64_t> param_min;
  std::function<std::int64_t(const Params&)> dim;
  std::function<std::optional<int>(const Params&)> rank;
};

struct Verdict {
  bool admissible = false;
  VerdictReason reason = VerdictReason::fails_condition_a;
  std::string candidate;
  Params witness;
  std::optional<int> r;
  std::int64_t dim = 0;
  std::optional<std::int64_t> n0;
};

[[nodiscard]] const std::vector<SymmetricSpaceCandidate>& candidates();
/// Lookup by key; throws std::invalid_argument for unknown keys.
[[nodiscard]] const SymmetricSpaceCandidate& candidate(const std::string& key);

/// Condition (a) then divisibility (b); case 4 with p != 8 that survives both
/// is reported as needing the equivariance argument.
[[nodiscard]] Verdict check_conditions(const SymmetricSpaceCandidate& c, const Params& params);

struct ScanBounds {
  int max_rank = 32;
  int max_param = 32;
};

/// Every parameter tuple within bounds (parameters from their minimum to max_param).
[[nodiscard]] std::vector<Verdict> scan(const SymmetricSpaceCandidate& c, const ScanBounds& bounds = {});

/// First tuple satisfying condition (a) in the scan: the exclusion witness.
[[nodiscard]] std::optional<Verdict> first_condition_a_witness(const SymmetricSpaceCandidate& c,
                                                               const ScanBounds& bounds = {});

/// SO(p+q)/SO(p)xSO(q): solves [X (x) 1, phi(A)] = phi([X, A]) for linear
/// phi : so(p) -> End(R^p (x) R^q) and checks that no solution squares to -1 on
/// E_12 (every solution kills e_3 (x) f).
struct EquivarianceResult {
  int p = 0, q = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t solution_dim = 0;
  bool clifford_compatible = true;
  VerificationReport report;
};
[[nodiscard]] EquivarianceResult case4_equivariance(int p, int q);

/// Case n = 8: structure forced by a rank r even Clifford structure.
struct Case1Result {
  int r = 0;
  std::string geometry;         // "quaternion-Kähler", ...
  std::string table_label;      // as printed in the table ("QK", ...)
  std::string structure_group;  // identity component of the normalizer
  std::size_t centralizer_dim = 0;
  std::size_t expected_centralizer_dim = 0;
};
[[nodiscard]] Case1Result case1_n8(int r);

/// Non-flat parallel rank r Clifford structures on simply connected M^n.
/// The flat case (8) is reported separately since it exists whenever Cl_r acts.
struct LedgerVerdict {
  int r = 0;
  std::int64_t n = 0;
  std::vector<int> cases;  // 1..7, empty for none
  bool flat_alternative = false;
  std::vector<std::string> geometries;
  std::string reason;
};
[[nodiscard]] LedgerVerdict clifford_ledger(int r, std::int64_t n);

// ---- Tables ----

enum class Projective { no, yes, conditional };
[[nodiscard]] std::string to_string(Projective p);

struct TableRow {
  int table = 0;
  int r = 0;               // 0 when the rank is arbitrary
  std::string r_label;     // "3 and 4", "arbitrary", or the rank
  std::string type_of_E;   // table 2, verbatim
  Projective projective = Projective::no;
  std::string space;       // M
  std::string alias;       // e.g. "OP^2" for the Rosenfeld planes
  std::string total_space; // table 3: Z
  std::string fibre;       // table 3
  std::string dim_label;
  std::optional<std::int64_t> dim;  // fixed dimension
  std::int64_t dim_coeff = 0;       // dim = dim_coeff * param for families
  std::string param;
  std::string dim_Z_label;
  std::string scal_label;
  std::optional<Rational> scal;
  std::string noncompact_dual;  // table 2 metadata
};

[[nodiscard]] std::vector<TableRow> table1_rows();
[[nodiscard]] std::vector<TableRow> table2_rows();
[[nodiscard]] std::vector<TableRow> table3_rows();
[[nodiscard]] std::vector<TableRow> table_rows(int table);

/// Symbolic form of 2n(n/4 + 2r - 4) with n = a * param, e.g. "32k(k+3)".
[[nodiscard]] std::string scal_symbolic(std::int64_t a, int r, const std::string& param,
                                        const Rational& kappa = Rational(2));
/// Prime factorization "2^6·3^2" of a positive integer.
[[nodiscard]] std::string factorize(std::int64_t v);

[[nodiscard]] std::string tables_markdown(int table);
[[nodiscard]] std::string tables_csv(int table);

}  // namespace clifflab
