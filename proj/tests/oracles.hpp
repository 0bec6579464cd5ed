#pragma once

// Test-side oracles. They use only matrix products and plain loops, never the
// library's checkers, so a bug there cannot hide behind itself.

#include <cstdint>
#include <string>
#include <vector>

#include "clifflab/matrix.hpp"
#include "clifflab/spin_reps.hpp"

namespace oracle {

using clifflab::RatMatrix;
using clifflab::Rational;

inline RatMatrix I(std::size_t n) { return RatMatrix::identity(n); }

// Bott table for irreducible Cl_r modules with e_i^2 = -1.
inline std::int64_t n_irr(int r) {
  static const std::int64_t base[] = {1, 2, 4, 4, 8, 8, 8, 8, 16};
  std::int64_t m = 1;
  while (r > 8) {
    r -= 8;
    m *= 16;
  }
  return base[r] * m;
}

// Every relation of the family written out directly; returns the first
// violated relation or an empty string.
inline std::string cstr_violation(const clifflab::JFamily& f) {
  const int r = f.r();
  const std::size_t n = f.n();
  auto J = [&](int i, int j) -> RatMatrix {
    if (i == j) return I(n) * Rational(-1);
    return i < j ? f.upper(i, j) : f.upper(j, i) * Rational(-1);
  };
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      if (i == j) continue;
      if (!(J(i, j).transpose() == J(i, j) * Rational(-1))) return "skew";
      if (!(J(i, j) * J(i, j) == I(n) * Rational(-1))) return "square";
      for (int k = 1; k <= r; ++k) {
        if (k == i || k == j) continue;
        if (!(J(i, j) * J(i, k) == J(j, k))) return "J_ij J_ik = J_jk";
        for (int l = 1; l <= r; ++l) {
          if (l == i || l == j || l == k) continue;
          if (!(J(i, j) * J(k, l) == J(k, l) * J(i, j))) return "disjoint commute";
        }
      }
    }
  return "";
}

inline Rational trace_of_product(const RatMatrix& a, const RatMatrix& b) { return (a * b).trace(); }

}  // namespace oracle
