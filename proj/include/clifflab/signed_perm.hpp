#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clifflab/matrix.hpp"

namespace clifflab {

/// Signed permutation matrix stored as column images: M e_j = sign[j] e_{image[j]}.
///
/// Composition is O(n); used by the relation and orthogonality sweeps, where
/// every family built from the generator scheme stays in this group.
class SignedPerm {
 public:
  SignedPerm() = default;

  static SignedPerm identity(std::size_t n) {
    SignedPerm p;
    p.image_.resize(n);
    p.sign_.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) p.image_[i] = static_cast<std::uint32_t>(i);
    return p;
  }

  /// nullopt unless every column holds exactly one entry in {+1, -1}.
  template <class T>
  static std::optional<SignedPerm> from_matrix(const Matrix<T>& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    SignedPerm p;
    p.image_.assign(n, 0);
    p.sign_.assign(n, 0);
    std::vector<bool> hit(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const T& v = m(i, j);
        if (v == T(0)) continue;
        if (p.sign_[j] != 0 || hit[i]) return std::nullopt;
        if (v == T(1)) p.sign_[j] = 1;
        else if (v == T(-1)) p.sign_[j] = -1;
        else return std::nullopt;
        p.image_[j] = static_cast<std::uint32_t>(i);
        hit[i] = true;
      }
      if (p.sign_[j] == 0) return std::nullopt;
    }
    return p;
  }

  [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm r;
    const std::size_t n = b.size();
    r.image_.resize(n);
    r.sign_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      r.image_[j] = a.image_[b.image_[j]];
      r.sign_[j] = static_cast<std::int8_t>(a.sign_[b.image_[j]] * b.sign_[j]);
    }
    return r;
  }

  SignedPerm operator-() const {
    SignedPerm r(*this);
    for (auto& s : r.sign_) s = static_cast<std::int8_t>(-s);
    return r;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

  /// trace(this * other), O(n).
  [[nodiscard]] std::int64_t trace_product(const SignedPerm& other) const {
    std::int64_t t = 0;
    for (std::size_t j = 0; j < size(); ++j) {
      const auto k = other.image_[j];
      if (image_[k] == j) t += sign_[k] * other.sign_[j];
    }
    return t;
  }

  [[nodiscard]] RatMatrix to_matrix() const {
    RatMatrix m(size(), size());
    for (std::size_t j = 0; j < size(); ++j) m(image_[j], j) = Rational(sign_[j]);
    return m;
  }

 private:
  std::vector<std::uint32_t> image_;
  std::vector<std::int8_t> sign_;
};

}  // namespace clifflab
