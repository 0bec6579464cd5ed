#include "doctest.h"
#include "oracles.hpp"

#include "clifflab/even_structure.hpp"
#include "clifflab/linalg.hpp"

using namespace clifflab;

namespace {

bool has_failure(const VerificationReport& r, const std::string& relation, const std::vector<int>& idx) {
  for (const auto& f : r.failures)
    if (f.relation == relation && f.indices == idx) return true;
  return false;
}

}  // namespace

TEST_CASE("relations: pass, constructed violation, r = 2") {
  const JFamily f6 = j_family(build_even_rep(6, 1));
  CHECK(verify_relations(f6).passed());

  JFamily bad = j_family(build_even_rep(5, 1));
  bad.set_upper(1, 3, bad.upper(1, 2));
  const VerificationReport r = verify_relations(bad);
  CHECK_FALSE(r.passed());
  CHECK(has_failure(r, "J_ij∘J_ik=J_jk", {1, 2, 3}));
  CHECK(oracle::cstr_violation(bad) != "");

  const JFamily f2 = j_family(build_even_rep(2, 1));
  CHECK(f2.upper(1, 2) * f2.upper(1, 2) == RatMatrix::identity(f2.n()) * Rational(-1));
  CHECK(verify_relations(f2).passed());
  CHECK_THROWS_AS((void)JFamily(4, 3, {RatMatrix(4, 4), RatMatrix(4, 4), RatMatrix(3, 3)}), std::domain_error);
}

TEST_CASE("orthogonality: traces computed here") {
  for (int r : {5, 6, 7, 8, 9}) {
    const JFamily f = j_family(build_even_rep(r, 1));
    CHECK(verify_orthogonality(f).passed());
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        for (int k = 1; k <= r; ++k)
          for (int l = k + 1; l <= r; ++l)
            if (i != k && i != l && j != k && j != l)
              REQUIRE(oracle::trace_of_product(f.upper(i, j), f.upper(k, l)) == Rational(0));
  }
  // r = 4 irreducible block with volume +1: J_34 = -J_12, so the trace is +4.
  const JFamily f4 = j_family(build_even_rep(4, 1, 0));
  CHECK(f4.upper(3, 4) == f4.upper(1, 2) * Rational(-1));
  CHECK(oracle::trace_of_product(f4.upper(1, 2), f4.upper(3, 4)) == Rational(4));
  CHECK(verify_orthogonality(f4).passed());  // reported, not asserted
}

TEST_CASE("volume endomorphism") {
  const VolumeInfo v2 = volume_endomorphism(structure_from_rep(build_even_rep(2, 1)));
  CHECK(v2.square_sign == -1);
  const VolumeInfo v4 = volume_endomorphism(structure_from_rep(build_even_rep(4, 1, 1)));
  CHECK(v4.square_sign == 1);
  CHECK(v4.v.trace() == Rational(0));
  REQUIRE(v4.involution_split);
  CHECK(*v4.involution_split == std::pair<std::int64_t, std::int64_t>{4, 4});
  const VolumeInfo v5 = volume_endomorphism(structure_from_rep(build_clifford_rep(5, 1)));
  CHECK(v5.square_sign == -1);
  CHECK(v5.expected_square_sign == -1);
}

TEST_CASE("rank 4 split: projector ranks, quaternion relations, cross commutation") {
  const JFamily f = j_family(build_even_rep(4, 1, 1));
  const SplitResult s = split_rank4(f);
  CHECK(s.report.passed());
  CHECK(rank(s.P_plus) == 4);
  CHECK(rank(s.P_minus) == 4);
  // The three combinations anticommute on the -1 eigenspace.
  const Rational h(1, 2);
  const RatMatrix A = (f.J(1, 2) + f.J(3, 4)) * h, B = (f.J(1, 3) - f.J(2, 4)) * h, C = (f.J(1, 4) + f.J(2, 3)) * h;
  const RatMatrix Pm = s.P_minus;
  CHECK(((A * B + B * A) * Pm).is_zero());
  CHECK(((A * C + C * A) * Pm).is_zero());
  CHECK(((B * C + C * B) * Pm).is_zero());
  for (const auto& Jp : s.J_plus.all_upper())
    for (const auto& Jm : s.J_minus.all_upper()) CHECK(commutator(Jp, Jm).is_zero());

  const SplitResult one = split_rank4(j_family(build_even_rep(4, 1, 0)));
  CHECK(one.P_minus.is_zero());
  CHECK_THROWS((void)split_rank4(j_family(build_even_rep(5, 1))));
}

TEST_CASE("Hodge extension: r = 3 signs and r = 7 anticommutation") {
  const EvenCliffordStructure s3 = structure_from_rep(build_even_rep(3, 1));
  const HodgeExtension h3 = extend_hodge(s3);
  REQUIRE(h3.K.size() == 3);
  CHECK(h3.K[0] == s3.J.J(2, 3));
  CHECK(h3.K[1] == s3.J.J(1, 3) * Rational(-1));
  CHECK(h3.K[2] == s3.J.J(1, 2));

  const HodgeExtension h7 = extend_hodge(structure_from_rep(build_even_rep(7, 1)));
  REQUIRE(h7.K.size() == 7);
  const RatMatrix id = RatMatrix::identity(8);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(h7.K[i] * h7.K[j] + h7.K[j] * h7.K[i] == id * Rational(i == j ? -2 : 0));
  CHECK_THROWS_AS((void)extend_hodge(structure_from_rep(build_even_rep(5, 1))), UnsupportedRank);
  CHECK_THROWS_AS((void)extend_hodge(structure_from_rep(build_even_rep(6, 1))), UnsupportedRank);
}

TEST_CASE("universal extension: round trip, rejection, k = 2") {
  for (int r : {2, 3, 5, 6, 7, 8, 9}) {
    const MatrixRep rep = build_even_rep(r, 1);
    const UniversalExtensionResult u = universal_extension(lambda2_restriction(j_family(rep)));
    REQUIRE(u.accepted);
    CHECK(u.report.passed());
    for (Mask b = 0; b <= AlgebraSignature(r).full_mask(); ++b)
      if (grade(b) % 2 == 0) REQUIRE(u.morphism.images.at(b) == to_rational(evaluate_blade(rep, b)));
  }
  Lambda2Map doubled = lambda2_restriction(j_family(build_even_rep(5, 1)));
  doubled.images[0] = doubled.images[0] * Rational(2);
  const UniversalExtensionResult bad = universal_extension(doubled);
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.witness);
  CHECK(bad.witness->u[0] == Rational(1));
  CHECK(bad.witness->v[1] == Rational(1));
  CHECK(bad.witness->w[1] == Rational(1));

  // Any complex structure on R^2 gives a morphism of Cl^0_2 = C.
  Lambda2Map k2;
  k2.k = 2;
  k2.n = 2;
  RatMatrix J(2, 2);
  J(0, 1) = Rational(-1);
  J(1, 0) = Rational(1);
  k2.images = {J};
  CHECK(universal_extension(k2).accepted);
}
