#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "clifflab/curvature.hpp"
#include "clifflab/linalg.hpp"

namespace clifflab {

std::vector<std::pair<Rational, std::size_t>> spectrum(const CurvatureOperator& R) {
  const RatMatrix& m = R.rhat();
  const auto d = static_cast<Eigen::Index>(m.rows());
  if (d == 0) return {};
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver did not converge");

  std::vector<Rational> candidates;
  for (Eigen::Index i = 0; i < d; ++i) {
    const Rational c = Rational::approximate(solver.eigenvalues()(i), 10000);
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::pair<Rational, std::size_t>> out;
  std::size_t total = 0;
  const auto n = m.rows();
  for (const auto& c : candidates) {
    const std::size_t nullity = n - rank(m - RatMatrix::identity(n) * c);
    if (nullity == 0) continue;
    out.emplace_back(c, nullity);
    total += nullity;
  }
  // A symmetric matrix is diagonalizable, so exact nullities summing to the
  // dimension certify the whole spectrum; anything else is irrational.
  if (total != n) throw std::domain_error("spectrum is not rational with small denominators");
  return out;
}

}  // namespace clifflab
