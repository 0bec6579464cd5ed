#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clifflab/blade.hpp"
#include "clifflab/matrix.hpp"

namespace clifflab {

struct UnsupportedRank : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Construction cap for representations: 16 unless CLIFFLAB_MAX_RANK says
/// otherwise; never above 18 (a 2048-dimensional rep is the practical limit).
[[nodiscard]] int max_supported_rank();
inline constexpr int kHardRankCeiling = 18;

/// Dimension of an irreducible real Cl_r module: (2,4,4,8,8,8,8,16) then x16 per 8 steps.
[[nodiscard]] std::int64_t n_irr(int r);
/// Dimension of an irreducible real Cl^0_r module, equal to n_irr(r - 1).
[[nodiscard]] std::int64_t n0(int r);

enum class RepKind { full, even };
[[nodiscard]] std::string to_string(RepKind k);
[[nodiscard]] RepKind rep_kind_from_string(const std::string& s);

/// Integer matrix representation of Cl_r (generators G_1..G_r) or of Cl^0_r
/// (generators H_1..H_{r-1} realizing e_1 e_{i+1}).
struct MatrixRep {
  int rank = 0;
  std::size_t dim = 0;
  RepKind kind = RepKind::full;
  std::vector<IntMatrix> generators;
  /// Multiplicities of the volume eigenvalues +1 and -1 (even kind, r = 0 mod 4).
  std::optional<std::pair<int, int>> volume_split;

  friend bool operator==(const MatrixRep&, const MatrixRep&) = default;
};

[[nodiscard]] MatrixRep build_clifford_rep(int r, int copies = 1);

/// For r = 0 mod 4 the volume acts as +1 on the first m_plus blocks and as -1 on
/// the remaining m_minus blocks. Otherwise there is a single irreducible class
/// and m_plus == m_minus is required, giving m_plus copies.
[[nodiscard]] MatrixRep build_even_rep(int r, int m_plus, int m_minus);
[[nodiscard]] MatrixRep build_even_rep(int r, int copies = 1);

/// Representation invariants: signed permutation, orthogonal, skew, anticommuting
/// generators squaring to -I. Returns a description of the first violation.
[[nodiscard]] std::optional<std::string> check_rep_invariants(const MatrixRep& rep);

/// Image of a basis blade; the even kind rejects odd blades with ParityError.
[[nodiscard]] IntMatrix evaluate_blade(const MatrixRep& rep, Mask blade);
/// Algebra morphism Cl_r -> End(R^N) (or Cl^0_r for the even kind).
[[nodiscard]] RatMatrix evaluate(const MatrixRep& rep, const CliffordElement& x);

/// J_ij = phi(e_i e_j), stored for i < j.
class JFamily {
 public:
  JFamily() = default;
  JFamily(std::size_t n, int r, std::vector<RatMatrix> upper);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] int r() const noexcept { return r_; }
  /// 1-based; J_ji = -J_ij and J_ii = -I.
  [[nodiscard]] RatMatrix J(int i, int j) const;
  [[nodiscard]] const RatMatrix& upper(int i, int j) const;
  [[nodiscard]] const std::vector<RatMatrix>& all_upper() const noexcept { return upper_; }
  void set_upper(int i, int j, RatMatrix m);

 private:
  [[nodiscard]] std::size_t slot(int i, int j) const;

  std::size_t n_ = 0;
  int r_ = 0;
  std::vector<RatMatrix> upper_;
};

[[nodiscard]] JFamily j_family(const MatrixRep& rep);

/// Restriction of a family to the coordinate block [begin, begin + size).
[[nodiscard]] JFamily restrict_family(const JFamily& f, std::size_t begin, std::size_t size);

}  // namespace clifflab
