#include <fstream>
#include <sstream>

#include "doctest.h"

#include "clifflab/classify.hpp"
#include "clifflab/curvature.hpp"
#include "clifflab/spin_reps.hpp"

using namespace clifflab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("candidate dimensions agree with hand values") {
  CHECK(candidate("case1").dim({{"n", 5}}) == 14);
  CHECK(candidate("case2").dim({{"n", 2}}) == 5);
  CHECK(candidate("case3").dim({{"p", 4}, {"q", 3}}) == 24);
  CHECK(candidate("case4").dim({{"p", 8}, {"q", 3}}) == 24);
  CHECK(candidate("case5").dim({{"n", 4}}) == 12);
  CHECK(candidate("case6").dim({{"n", 4}}) == 20);
  CHECK(candidate("case7").dim({{"p", 2}, {"q", 3}}) == 24);
  CHECK(candidate("case8-F4").dim({}) == 16);
  CHECK(candidate("case8-E8").dim({}) == 128);
  CHECK(candidate("case9-SU4").dim({}) == 15);
  CHECK(candidate("case9-SO").dim({{"n", 5}}) == 10);
  CHECK_THROWS_AS((void)candidate("case10"), std::invalid_argument);
}

TEST_CASE("verdicts: divisibility, equivariance, admissible, out of range") {
  const Verdict v1 = check_conditions(candidate("case2"), {{"n", 2}});
  CHECK(v1.reason == VerdictReason::fails_divisibility_b);
  CHECK(v1.r == 5);
  CHECK(v1.n0 == 8);
  CHECK(v1.dim % 8 != 0);

  const Verdict v4 = check_conditions(candidate("case4"), {{"p", 5}, {"q", 8}});
  CHECK(v4.reason == VerdictReason::needs_equivariance_argument);
  CHECK_FALSE(v4.admissible);
  CHECK(check_conditions(candidate("case4"), {{"p", 8}, {"q", 3}}).admissible);
  CHECK(check_conditions(candidate("case4"), {{"p", 3}, {"q", 3}}).reason == VerdictReason::fails_condition_a);

  for (std::int64_t q = 1; q <= 10; ++q) {
    const Verdict v = check_conditions(candidate("case7"), {{"p", 2}, {"q", q}});
    CHECK(v.admissible);
    CHECK(v.dim == 8 * q);
  }
  CHECK(check_conditions(candidate("case9-SU4"), {}).reason == VerdictReason::fails_divisibility_b);
  CHECK_THROWS_AS((void)check_conditions(candidate("case1"), {{"n", 1}}), std::invalid_argument);
  CHECK_THROWS_AS((void)check_conditions(candidate("case3"), {{"p", 1}}), std::invalid_argument);
}

TEST_CASE("case (1) fails divisibility for every r = 5..32") {
  for (std::int64_t n = 5; n <= 32; ++n) {
    const Verdict v = check_conditions(candidate("case1"), {{"n", n}});
    CHECK(v.reason == VerdictReason::fails_divisibility_b);
    CHECK(((n - 1) * (n + 2) / 2) % n0(static_cast<int>(n)) != 0);
  }
}

TEST_CASE("exclusion witnesses") {
  const std::pair<const char*, std::int64_t> w[] = {{"case1", 14}, {"case2", 5},     {"case5", 12},
                                                    {"case6", 20}, {"case9-SU4", 15}, {"case9-SO", 10}};
  for (const auto& [key, dim] : w) {
    const auto v = first_condition_a_witness(candidate(key));
    REQUIRE(v);
    CHECK(v->dim == dim);
    CHECK(v->reason == VerdictReason::fails_divisibility_b);
  }
}

TEST_CASE("case (4) equivariance system") {
  for (const auto& [p, q] : {std::pair{5, 1}, std::pair{5, 2}, std::pair{6, 1}}) {
    const EquivarianceResult e = case4_equivariance(p, q);
    CHECK(e.solution_dim == static_cast<std::size_t>(q * q));
    CHECK_FALSE(e.clifford_compatible);
    CHECK(e.report.passed());
    CHECK(e.unknowns == static_cast<std::size_t>(p * (p - 1) / 2 * (p * q) * (p * q)));
  }
  CHECK_THROWS((void)case4_equivariance(5, 4));
}

TEST_CASE("case n = 8") {
  CHECK(case1_n8(5).geometry == "quaternion-Kähler");
  CHECK(case1_n8(7).geometry == "holonomy contained in Spin(7)");
  CHECK(case1_n8(8).geometry == "no condition");
  for (int r = 5; r <= 8; ++r) CHECK(case1_n8(r).centralizer_dim == case1_n8(r).expected_centralizer_dim);
  CHECK_THROWS((void)case1_n8(4));
}

TEST_CASE("Clifford ledger") {
  const LedgerVerdict a = clifford_ledger(3, 8);
  CHECK(a.cases == std::vector<int>{3});
  const LedgerVerdict b = clifford_ledger(8, 16);
  CHECK(b.cases.empty());
  CHECK(b.flat_alternative);
  CHECK(clifford_ledger(7, 8).cases == std::vector<int>{7});
  CHECK(clifford_ledger(2, 4).geometries == std::vector<std::string>{"Kähler"});
  CHECK(clifford_ledger(2, 8).geometries == std::vector<std::string>{"hyper-Kähler"});
  CHECK(clifford_ledger(5, 16).cases.empty());
  CHECK(clifford_ledger(9, 32).cases.empty());
  const LedgerVerdict bad = clifford_ledger(5, 12);
  CHECK(bad.cases.empty());
  CHECK_FALSE(bad.flat_alternative);
}

TEST_CASE("scalar curvature labels") {
  CHECK(factorize(576) == "2^6·3^2");
  CHECK(factorize(1536) == "2^9·3");
  CHECK(factorize(15360) == "2^10·3·5");
  CHECK(scal_symbolic(8, 5, "k") == "32k(k+3)");
  CHECK(scal_symbolic(4, 3, "q") == "8q(q+2)");
  CHECK(scal_symbolic(4, 3, "q⁺", Rational(4)) == "16q⁺(q⁺+2)");
  // Numeric table 3 values recomputed here: 2n(n/4 + 2r - 4).
  for (const auto& row : table3_rows())
    if (row.scal) CHECK(*row.scal == Rational(2 * *row.dim * (*row.dim / 4 + 2 * row.r - 4)));
}

TEST_CASE("table invariants") {
  for (const auto& row : table2_rows())
    if (row.r >= 5 && row.dim) CHECK(*row.dim % n0(row.r) == 0);
  for (const auto& row : table3_rows()) {
    CHECK(row.r != 7);
    if (row.dim) CHECK(row.dim_Z_label == std::to_string(*row.dim + row.r - 1));
  }
  CHECK(table2_rows().back().dim == 128);
  CHECK(table2_rows().back().dim == n0(16));
}

TEST_CASE("markdown tables match the transcribed fixtures") {
  for (int t = 1; t <= 3; ++t)
    CHECK(tables_markdown(t) == slurp(std::string(CLIFFLAB_FIXTURES) + "/table" + std::to_string(t) + ".md"));
}

TEST_CASE("CSV: CRLF endings and quoting") {
  const std::string csv = tables_csv(2);
  CHECK(csv.rfind("table,r,type_of_E,projective,M,alias,Z,fibre,dim_M,dim_Z,scal,noncompact_dual\r\n", 0) == 0);
  std::size_t lf = 0, crlf = 0;
  for (std::size_t i = 0; i < csv.size(); ++i)
    if (csv[i] == '\n') {
      ++lf;
      if (i > 0 && csv[i - 1] == '\r') ++crlf;
    }
  CHECK(lf == crlf);
  CHECK(lf == table2_rows().size() + 1);
  CHECK(csv.find("\"8k, k ≥ 2\"") != std::string::npos);
  CHECK(csv.find("Sp(k,2)/Sp(k)×Sp(2)") != std::string::npos);
}
