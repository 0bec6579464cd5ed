#include "clifflab/triality.hpp"

#include "clifflab/linalg.hpp"

namespace clifflab {

RatMatrix TrialityResult::apply(const RatMatrix& a) const {
  const auto c = skew_coords(a);
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!phi(i, j).is_zero() && !c[j].is_zero()) out[i] += phi(i, j) * c[j];
  return skew_from_coords(a.rows(), out);
}

TrialityResult triality_map() {
  constexpr std::size_t n = 8;
  constexpr std::size_t d = skew_dim(n);
  const JFamily half_spin = j_family(build_even_rep(8, 1, 0));
  const Rational half(1, 2);

  // Column (ij) of S holds the coordinates of 1/2 J_ij; its target is the unit
  // coordinate vector of E_ij, so phi = S^{-1}.
  RatMatrix S(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = skew_coords(half_spin.upper(static_cast<int>(i + 1), static_cast<int>(j + 1)) * half);
      const auto col = pair_index(n, i, j);
      for (std::size_t k = 0; k < d; ++k) S(k, col) = c[k];
    }
  TrialityResult res;
  res.report.suite = "triality";
  auto inv = inverse(S);
  res.bijective = inv.has_value();
  res.report.check(res.bijective, "bijective", {}, Rational(0));
  if (!inv) throw std::logic_error("internal invariant violation: half-spin images do not span so(8)");
  res.phi = std::move(*inv);

  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(elementary_skew(n, i, j));
      const RatMatrix img = res.apply(half_spin.upper(static_cast<int>(i + 1), static_cast<int>(j + 1)) * half);
      res.report.check(img == basis.back(), "phi(J_ij/2)=E_ij", {static_cast<int>(i + 1), static_cast<int>(j + 1)},
                       max_abs(img - basis.back()));
    }
  std::vector<RatMatrix> images;
  for (const auto& b : basis) images.push_back(res.apply(b));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q) {
      const RatMatrix lhs = res.apply(commutator(basis[p], basis[q]));
      const RatMatrix rhs = commutator(images[p], images[q]);
      res.report.check(lhs == rhs, "bracket", {static_cast<int>(p), static_cast<int>(q)}, max_abs(lhs - rhs));
      ++res.bracket_pairs;
    }
  res.report.value("bracket_pairs", std::to_string(res.bracket_pairs));

  std::vector<RatMatrix> pulled;
  for (const auto& img : images) pulled.push_back(img * Rational(2));
  res.pulled_back = JFamily(n, 8, std::move(pulled));
  VerificationReport rel = verify_relations(res.pulled_back);
  rel.suite.clear();
  for (auto& f : rel.failures) f.relation = "pulled-back " + f.relation;
  res.report.merge(rel);
  VerificationReport ort = verify_orthogonality(res.pulled_back);
  for (auto& f : ort.failures) f.relation = "pulled-back " + f.relation;
  res.report.merge(ort);
  return res;
}

}  // namespace clifflab
