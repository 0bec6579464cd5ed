#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clifflab/rational.hpp"

namespace clifflab {

/// Basis blade as a bitmask: bit (i-1) set means e_i is a factor.
using Mask = std::uint32_t;

inline constexpr int kMaxAlgebraRank = 32;

/// Cl_r with e_i e_i = -1 and e_i e_j = -e_j e_i for i != j.
struct AlgebraSignature {
  int rank = 1;

  explicit AlgebraSignature(int r);
  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;

  [[nodiscard]] Mask full_mask() const noexcept {
    return rank == 32 ? ~Mask{0} : ((Mask{1} << rank) - 1);
  }
};

struct SignedBlade {
  Mask mask = 0;
  int sign = 1;

  /// Ascending 1-based generator indices.
  [[nodiscard]] std::vector<int> indices() const;
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

[[nodiscard]] Mask mask_from_indices(const std::vector<int>& indices, const AlgebraSignature& sig);
[[nodiscard]] std::vector<int> indices_from_mask(Mask m);
[[nodiscard]] inline int grade(Mask m) noexcept { return __builtin_popcount(m); }

/// e_S e_T = sign * e_{S xor T}. O(r) transposition counting; throws
/// std::domain_error when a mask exceeds the rank.
[[nodiscard]] SignedBlade blade_product(Mask s, Mask t, const AlgebraSignature& sig);
[[nodiscard]] SignedBlade blade_product(const std::vector<int>& s, const std::vector<int>& t,
                                        const AlgebraSignature& sig);

/// Sparse exact element of Cl_r.
class CliffordElement {
 public:
  explicit CliffordElement(AlgebraSignature sig) : sig_(sig) {}

  static CliffordElement scalar(AlgebraSignature sig, const Rational& c);
  static CliffordElement blade(AlgebraSignature sig, Mask m, const Rational& c = Rational(1));
  static CliffordElement blade(AlgebraSignature sig, const std::vector<int>& indices,
                               const Rational& c = Rational(1));
  static CliffordElement generator(AlgebraSignature sig, int i);

  [[nodiscard]] const AlgebraSignature& signature() const noexcept { return sig_; }
  [[nodiscard]] int rank() const noexcept { return sig_.rank; }
  [[nodiscard]] const std::map<Mask, Rational>& terms() const noexcept { return terms_; }
  [[nodiscard]] Rational coefficient(Mask m) const;
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_even() const;
  [[nodiscard]] bool is_odd() const;

  /// Adds c * e_m, keeping the no-stored-zero invariant.
  void add_term(Mask m, const Rational& c);

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Rational& c);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Rational& c) { return a *= c; }
  friend CliffordElement operator*(const Rational& c, CliffordElement a) { return a *= c; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  /// Canonical text: terms by grade then index order, each "+c·e{i,j}" or
  /// "-c·e{i,j}", joined by " + "; the zero element prints as "0".
  [[nodiscard]] std::string str() const;

 private:
  void check_same(const CliffordElement& o) const;

  AlgebraSignature sig_;
  std::map<Mask, Rational> terms_;
};

[[nodiscard]] CliffordElement geometric_product(const CliffordElement& a, const CliffordElement& b);

/// e_1 e_2 ... e_r.
[[nodiscard]] CliffordElement volume_element(const AlgebraSignature& sig);
/// (-1)^{r(r+1)/2}.
[[nodiscard]] int volume_square_sign(int r);
/// +1 when the volume commutes with every generator (r odd), -1 when it anticommutes.
[[nodiscard]] int volume_generator_parity(int r);

/// The blade *e_i normalized by e_i * (*e_i) = e_1...e_r.
[[nodiscard]] SignedBlade hodge_dual_vector(int i, const AlgebraSignature& sig);

/// e_i ^ e_j as the element e_i e_j + h(e_i, e_j) of Cl^0.
[[nodiscard]] CliffordElement lambda2_embed(int i, int j, const AlgebraSignature& sig);

/// Bilinear extension: sum of a_ij e_i ^ e_j over the supplied coefficients.
[[nodiscard]] CliffordElement lambda2_embed(const std::map<std::pair<int, int>, Rational>& form,
                                            const AlgebraSignature& sig);

}  // namespace clifflab
