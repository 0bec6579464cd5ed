#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "clifflab/blade.hpp"
#include "clifflab/report.hpp"
#include "clifflab/spin_reps.hpp"

namespace clifflab {

/// Fiber-level even Clifford structure: the family J_ij on R^n, optionally
/// backed by a full Clifford representation (J_ij = G_i G_j).
struct EvenCliffordStructure {
  JFamily J;
  std::optional<MatrixRep> full_rep;

  [[nodiscard]] std::size_t n() const noexcept { return J.n(); }
  [[nodiscard]] int r() const noexcept { return J.r(); }
};

[[nodiscard]] EvenCliffordStructure structure_from_rep(const MatrixRep& rep);

/// Image of an even blade: product of the consecutive pair images J_{i1 i2} J_{i3 i4} ...
[[nodiscard]] RatMatrix evaluate_even_blade(const JFamily& f, Mask blade);

/// The four relation groups (J_ii = -I, J_ij = -J_ji with J_ij^2 = -I,
/// J_ij J_ik = J_jk, J_ij J_kl = J_kl J_ij) plus skewness, exactly.
[[nodiscard]] VerificationReport verify_relations(const JFamily& f);

/// The same relations with the identity replaced by a projector P that commutes
/// with the family, i.e. the relations on the image of P.
[[nodiscard]] VerificationReport verify_relations_on(const JFamily& f, const RatMatrix& projector);

/// trace(J_ij o J_kl) = 0 for every pattern other than {i,j} = {k,l}. For r = 4
/// the disjoint pairings are reported as values and not asserted.
[[nodiscard]] VerificationReport verify_orthogonality(const JFamily& f);

struct VolumeInfo {
  RatMatrix v;
  int expected_square_sign = 0;  // (-1)^{r(r+1)/2}
  int square_sign = 0;           // +1 or -1 when v^2 = +-I, 0 otherwise
  bool commutes_with_family = false;
  /// +1 commute, -1 anticommute, 0 mixed; only with full generators.
  std::optional<int> generator_parity;
  /// Eigenvalue multiplicities (m+, m-) when v is an involution.
  std::optional<std::pair<std::int64_t, std::int64_t>> involution_split;
};

[[nodiscard]] VolumeInfo volume_endomorphism(const EvenCliffordStructure& s);

struct SplitResult {
  RatMatrix P_plus, P_minus;
  /// phi(e^+_i), phi(e^-_i), i = 1..3.
  std::vector<RatMatrix> frame_plus, frame_minus;
  /// Rank 3 families with upper(1,2) = J^pm_12, upper(1,3) = -J^pm_31, upper(2,3) = J^pm_23.
  JFamily J_plus, J_minus;
  VerificationReport report;
};

[[nodiscard]] SplitResult split_rank4(const JFamily& f);

struct HodgeExtension {
  std::vector<RatMatrix> K;  // K_i = phi(*e_i)
  VerificationReport report;
};

/// r in {3, 7, 11, 15}; any other rank throws UnsupportedRank.
[[nodiscard]] HodgeExtension extend_hodge(const EvenCliffordStructure& s);

/// Linear map Lambda^2 R^k -> End(R^n), given on e_a ^ e_b for a < b.
struct Lambda2Map {
  int k = 0;
  std::size_t n = 0;
  std::vector<RatMatrix> images;

  [[nodiscard]] RatMatrix operator()(int a, int b) const;  // 1-based, antisymmetric
  [[nodiscard]] RatMatrix apply(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
};

[[nodiscard]] Lambda2Map lambda2_restriction(const JFamily& f);

/// Algebra morphism Cl^0_k -> End(R^n) on the even blade basis.
struct EvenMorphism {
  int k = 0;
  std::size_t n = 0;
  std::map<Mask, RatMatrix> images;

  [[nodiscard]] RatMatrix operator()(const CliffordElement& x) const;
};

struct ExtensionWitness {
  std::vector<Rational> u, v, w;
  std::string relation;
  Rational residual;
};

struct UniversalExtensionOptions {
  std::uint64_t seed = 0;
  int random_triples = 256;
  int multiplicativity_pairs = 200;
};

struct UniversalExtensionResult {
  bool accepted = false;
  std::optional<ExtensionWitness> witness;
  EvenMorphism morphism;
  VerificationReport report;
};

/// Checks phi(u^v) phi(u^w) = phi(v^w) - h(v,w) on frame triples and seeded
/// random rational triples (polarized form), then builds the extension from the
/// sigma products and confirms multiplicativity on random even pairs.
[[nodiscard]] UniversalExtensionResult universal_extension(const Lambda2Map& phi,
                                                           const UniversalExtensionOptions& opt = {});

/// Sparse random element of Cl_r with small integer coefficients.
[[nodiscard]] CliffordElement random_element(Rng& rng, const AlgebraSignature& sig, int terms, bool even_only);

}  // namespace clifflab
