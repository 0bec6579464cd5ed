#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "clifflab/matrix.hpp"

namespace clifflab {

/// Sparse row of an exact linear system: column -> coefficient, no stored zeros.
using SparseRow = std::map<std::size_t, Rational>;

/// Reduced row echelon form computed in place. Returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);

[[nodiscard]] std::size_t rank(RatMatrix m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
[[nodiscard]] std::vector<std::vector<Rational>> nullspace(RatMatrix m);

/// Kernel of a sparse system with ncols unknowns. Elimination touches only
/// nonzero entries, which keeps the equivariance systems (thousands of
/// equations, mostly two or three terms each) cheap.
[[nodiscard]] std::vector<std::vector<Rational>> nullspace(std::vector<SparseRow> rows, std::size_t ncols);

/// Unique solution of a square system, or nullopt when singular.
[[nodiscard]] std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace clifflab
