#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"

#include "clifflab/even_structure.hpp"
#include "clifflab/linalg.hpp"
#include "clifflab/spin_reps.hpp"
#include "clifflab/triality.hpp"

using namespace clifflab;

TEST_CASE("dimension tables match the Bott oracle") {
  for (int r = 1; r <= 32; ++r) CHECK(n_irr(r) == oracle::n_irr(r));
  for (int r = 2; r <= 32; ++r) CHECK(n0(r) == n_irr(r - 1));
  CHECK(n0(5) == 8);
  CHECK(n0(6) == 8);
  CHECK(n_irr(16) == 256);
  CHECK(n0(16) == 128);
  CHECK_THROWS_AS((void)n0(1), std::domain_error);
  CHECK_THROWS_AS((void)n_irr(0), std::domain_error);
}

TEST_CASE("full representations: anticommutation by direct multiplication") {
  const MatrixRep r1 = build_clifford_rep(1, 1);
  IntMatrix g(2, 2);
  g(0, 1) = -1;
  g(1, 0) = 1;
  CHECK(r1.generators[0] == g);
  for (int r = 1; r <= 12; ++r) {
    const MatrixRep rep = build_clifford_rep(r, 1);
    REQUIRE(rep.dim == static_cast<std::size_t>(oracle::n_irr(r)));
    const IntMatrix id = IntMatrix::identity(rep.dim);
    for (int i = 0; i < r; ++i) {
      const IntMatrix& a = rep.generators[i];
      CHECK(is_signed_permutation(a));
      CHECK(a.transpose() == a * std::int64_t{-1});
      for (int j = 0; j < r; ++j) {
        const IntMatrix& b = rep.generators[j];
        REQUIRE(a * b + b * a == id * std::int64_t{i == j ? -2 : 0});
      }
    }
  }
  CHECK(build_clifford_rep(3, 2).dim == 8);
  CHECK(build_clifford_rep(5, 1) == build_clifford_rep(5, 1));
}

TEST_CASE("r = 8 volume is an involution with eigenvalues +-1") {
  const MatrixRep rep = build_clifford_rep(8, 1);
  IntMatrix v = IntMatrix::identity(16);
  for (const auto& g : rep.generators) v = v * g;
  CHECK(v * v == IntMatrix::identity(16));
  CHECK(v.trace() == 0);
}

TEST_CASE("even representations satisfy every relation (oracle), r = 2..9") {
  for (int r = 2; r <= 9; ++r) {
    // r = 0 mod 4 needs an explicit split to be irreducible.
    const MatrixRep rep = r % 4 == 0 ? build_even_rep(r, 1, 0) : build_even_rep(r, 1);
    CHECK(rep.dim == static_cast<std::size_t>(n0(r)));
    const JFamily f = j_family(rep);
    CHECK(oracle::cstr_violation(f) == "");
  }
}

TEST_CASE("even rep (4,1,1): volume has trace 0 and squares to I") {
  const MatrixRep rep = build_even_rep(4, 1, 1);
  CHECK(rep.dim == 8);
  REQUIRE(rep.volume_split);
  CHECK(*rep.volume_split == std::pair{1, 1});
  const JFamily f = j_family(rep);
  const RatMatrix v = f.J(1, 2) * f.J(3, 4);
  CHECK(v * v == RatMatrix::identity(8));
  CHECK(v.trace() == Rational(0));
  // The +1 block comes first.
  CHECK(principal_block(v, 0, 4) == RatMatrix::identity(4));
  CHECK_THROWS_AS((void)build_even_rep(5, 1, 2), std::domain_error);
}

TEST_CASE("span dimensions of the J families") {
  auto span_dim = [](const JFamily& f) {
    RatMatrix m(f.all_upper().size(), skew_dim(f.n()));
    for (std::size_t i = 0; i < f.all_upper().size(); ++i) {
      const auto c = skew_coords(f.all_upper()[i]);
      for (std::size_t k = 0; k < c.size(); ++k) m(i, k) = c[k];
    }
    return rank(m);
  };
  CHECK(span_dim(j_family(build_even_rep(5, 1))) == 10);
  for (int r : {3, 6, 7, 8}) CHECK(span_dim(j_family(build_even_rep(r, 1))) == static_cast<std::size_t>(r * (r - 1) / 2));
  CHECK(span_dim(j_family(build_even_rep(4, 1, 0))) < 6);
}

TEST_CASE("evaluate is an algebra morphism") {
  for (int r = 2; r <= 9; ++r) {
    const MatrixRep rep = build_even_rep(r, 1);
    const AlgebraSignature s(r);
    Rng rng(7 + static_cast<std::uint64_t>(r));
    CHECK(evaluate(rep, CliffordElement::scalar(s, Rational(1))) == RatMatrix::identity(rep.dim));
    for (int t = 0; t < 60; ++t) {
      const auto a = random_element(rng, s, 3, true), b = random_element(rng, s, 3, true);
      REQUIRE(evaluate(rep, a * b) == evaluate(rep, a) * evaluate(rep, b));
    }
    CHECK_THROWS_AS((void)evaluate(rep, CliffordElement::generator(s, 1)), ParityError);
  }
}

TEST_CASE("rank cap and its environment override") {
  CHECK_THROWS_AS((void)build_clifford_rep(17, 1), UnsupportedRank);
  ::setenv("CLIFFLAB_MAX_RANK", "17", 1);
  CHECK(max_supported_rank() == 17);
  CHECK(build_even_rep(17, 1).dim == 256);
  ::setenv("CLIFFLAB_MAX_RANK", "99", 1);
  CHECK(max_supported_rank() == kHardRankCeiling);
  ::unsetenv("CLIFFLAB_MAX_RANK");
  CHECK(max_supported_rank() == 16);
}

TEST_CASE("triality: brackets preserved and pulled-back family passes the oracle") {
  const TrialityResult t = triality_map();
  CHECK(t.bijective);
  CHECK(t.bracket_pairs == 378);
  CHECK(t.report.passed());
  CHECK(oracle::cstr_violation(t.pulled_back) == "");
  // All 378 brackets recomputed here.
  std::vector<RatMatrix> basis;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) basis.push_back(elementary_skew(8, a, b));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j, ++pairs)
      REQUIRE(t.apply(commutator(basis[i], basis[j])) == commutator(t.apply(basis[i]), t.apply(basis[j])));
  CHECK(pairs == 378);
}
