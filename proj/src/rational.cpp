#include "clifflab/rational.hpp"

#include <cmath>

namespace clifflab {

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    __int128 v = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("malformed rational: " + std::string(text));
      v = v * 10 + (s[pos] - '0');
      if (v > INT64_MAX) throw std::overflow_error("rational literal out of range: " + std::string(text));
    }
    return static_cast<std::int64_t>(neg ? -v : v);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::approximate(double x, std::int64_t max_den) {
  // Continued-fraction convergents, stopping before the denominator bound.
  const bool neg = x < 0;
  double v = std::fabs(x);
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(v);
    if (a > 9.0e15) break;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t h2 = ai * h1 + h0;
    const std::int64_t k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = v - a;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  if (k1 == 0) return Rational(0);
  return Rational(neg ? -h1 : h1, k1);
}

}  // namespace clifflab
