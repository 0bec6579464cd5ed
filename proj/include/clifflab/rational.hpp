#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clifflab {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Every operation is exact. Intermediate results are computed in 128 bits and
/// reduced; a result that does not fit back into 64 bits throws
/// std::overflow_error instead of wrapping. The values occurring in this
/// library (signed-permutation generators, curvature constants of the model
/// spaces) stay far below that limit.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational& operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (__builtin_add_overflow(num_, o.num_, &r)) overflow();
      num_ = r;
      return *this;
    }
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    assign_wide(n, d);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t r;
      if (__builtin_mul_overflow(num_, o.num_, &r)) overflow();
      num_ = r;
      return *this;
    }
    assign_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    assign_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
  }

  [[nodiscard]] Rational operator-() const {
    if (num_ == INT64_MIN) overflow();
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  [[nodiscard]] Rational abs() const { return num_ < 0 ? -*this : *this; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  /// Best rational approximation of x with denominator at most max_den.
  static Rational approximate(double x, std::int64_t max_den);

 private:
  [[noreturn]] static void overflow() { throw std::overflow_error("rational overflow"); }

  void assign(std::int64_t n, std::int64_t d) { assign_wide(n, d); }

  void assign_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) overflow();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace clifflab
