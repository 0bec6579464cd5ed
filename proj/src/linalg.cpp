#include "clifflab/linalg.hpp"

namespace clifflab {

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols());
    x[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

// row -= f * other, dropping entries that cancel.
void axpy(SparseRow& row, const Rational& f, const SparseRow& other) {
  for (const auto& [c, v] : other) {
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, -(f * v));
    } else {
      it->second -= f * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(std::vector<SparseRow> rows, std::size_t ncols) {
  // Pivot rows are normalized so their leading (smallest) column carries 1.
  std::map<std::size_t, SparseRow> pivot_rows;
  for (auto& row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->first >= ncols) throw std::out_of_range("sparse row column out of range");
      if (it->second.is_zero()) {
        it = row.erase(it);
        continue;
      }
      auto p = pivot_rows.find(it->first);
      if (p == pivot_rows.end()) {
        ++it;
        continue;
      }
      const std::size_t c = it->first;
      const Rational f = it->second;
      axpy(row, f, p->second);
      it = row.lower_bound(c);
    }
    if (row.empty()) continue;
    const std::size_t lead = row.begin()->first;
    const Rational inv = Rational(1) / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    pivot_rows.emplace(lead, std::move(row));
  }
  // Back substitution, highest pivot first, so every row ends fully reduced.
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    SparseRow& row = it->second;
    for (auto e = std::next(row.begin()); e != row.end();) {
      auto p = pivot_rows.find(e->first);
      if (p == pivot_rows.end()) {
        ++e;
        continue;
      }
      const std::size_t c = e->first;
      const Rational f = e->second;
      axpy(row, f, p->second);
      e = row.upper_bound(c);
    }
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot_rows.contains(f)) continue;
    std::vector<Rational> x(ncols);
    x[f] = Rational(1);
    for (const auto& [p, row] : pivot_rows) {
      auto e = row.find(f);
      if (e != row.end()) x[p] = -e->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace clifflab
