#include "clifflab/matrix.hpp"

#include <sstream>

namespace clifflab {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

bool is_skew(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool is_signed_permutation(const IntMatrix& m) {
  if (!m.is_square()) return false;
  std::vector<int> col_count(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int in_row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1) return false;
      ++in_row;
      ++col_count[j];
    }
    if (in_row != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

Rational max_abs(const RatMatrix& m) {
  Rational best(0);
  for (const auto& x : m.data()) {
    const Rational a = x.abs();
    if (a > best) best = a;
  }
  return best;
}

std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= b || b >= n) throw std::out_of_range("pair_index expects a < b < n");
  // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

std::vector<Rational> skew_coords(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c;
  c.reserve(skew_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.push_back(a(j, i));
  return c;
}

RatMatrix skew_from_coords(std::size_t n, std::span<const Rational> coords) {
  if (coords.size() != skew_dim(n)) throw std::invalid_argument("skew coordinate vector has wrong length");
  RatMatrix m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      m(j, i) = coords[k];
      m(i, j) = -coords[k];
    }
  return m;
}

RatMatrix elementary_skew(std::size_t n, std::size_t a, std::size_t b) {
  RatMatrix m(n, n);
  m(b, a) = Rational(1);
  m(a, b) = Rational(-1);
  return m;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace clifflab
