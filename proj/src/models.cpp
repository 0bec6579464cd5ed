#include <stdexcept>

#include "clifflab/curvature.hpp"
#include "clifflab/linalg.hpp"

namespace clifflab {

namespace {

std::vector<RatMatrix> family_span(const JFamily& f) { return f.all_upper(); }

// Orthogonal complement (trace pairing) of the given skew matrices in so(n).
std::vector<RatMatrix> complement(std::size_t n, const std::vector<RatMatrix>& gens) {
  const std::size_t d = skew_dim(n);
  RatMatrix m(gens.size(), d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto c = skew_coords(gens[i]);
    for (std::size_t k = 0; k < d; ++k) m(i, k) = c[k];
  }
  std::vector<RatMatrix> out;
  for (const auto& v : nullspace(m)) out.push_back(skew_from_coords(n, v));
  return out;
}

ModelSpace make_s8() {
  ModelSpace m;
  m.name = "s8";
  m.n = 8;
  m.r = 8;
  m.structure = structure_from_rep(build_even_rep(8, 1, 0));
  m.target_scal = scal_formula(8, 8);
  m.calibration = calibrate_scalar([](const Rational& c) { return constant_curvature_op(8, c); }, m.target_scal);
  m.R = constant_curvature_op(8, m.calibration);
  m.subspaces.emplace_back("so8", family_span(m.structure.J));
  return m;
}

ModelSpace make_cp4() {
  ModelSpace m;
  m.name = "cp4";
  m.n = 8;
  m.r = 6;
  m.structure = structure_from_rep(build_clifford_rep(6, 1));
  // The volume J_12 J_34 J_56 squares to -1 and commutes with the family.
  const RatMatrix kahler = evaluate_even_blade(m.structure.J, AlgebraSignature(6).full_mask());
  m.target_scal = scal_formula(8, 6);
  m.calibration = calibrate_scalar([&](const Rational& c) { return fubini_study_op(c, kahler); }, m.target_scal);
  m.R = fubini_study_op(m.calibration, kahler);
  std::vector<RatMatrix> u4 = family_span(m.structure.J);
  m.subspaces.emplace_back("kahler_line", std::vector<RatMatrix>{kahler});
  m.subspaces.emplace_back("su4", u4);
  u4.push_back(kahler);
  m.subspaces.emplace_back("complement", complement(8, u4));
  return m;
}

ModelSpace make_hp2() {
  ModelSpace m;
  m.name = "hp2";
  m.n = 8;
  m.r = 5;
  const MatrixRep rep5 = build_clifford_rep(5, 1);
  const MatrixRep rep7 = build_clifford_rep(7, 1);
  for (std::size_t i = 0; i < 5; ++i)
    if (!(rep5.generators[i] == rep7.generators[i]))
      throw std::logic_error("internal invariant violation: rank 5 generators are not a prefix of rank 7");
  m.structure = structure_from_rep(rep5);
  // Sp(1) factor: I is the rank 5 volume, J the sixth generator, K = IJ.
  RatMatrix vol = RatMatrix::identity(8);
  for (const auto& g : rep5.generators) vol = vol * to_rational(g);
  const RatMatrix J = to_rational(rep7.generators[5]);
  const std::vector<RatMatrix> sp1{vol, J, vol * J};
  m.target_scal = scal_formula(8, 5);
  m.calibration = calibrate_scalar([&](const Rational& c) { return quaternionic_op(c, sp1); }, m.target_scal);
  m.R = quaternionic_op(m.calibration, sp1);
  std::vector<RatMatrix> sp2 = family_span(m.structure.J);
  m.subspaces.emplace_back("sp2", sp2);
  m.subspaces.emplace_back("sp1", sp1);
  sp2.insert(sp2.end(), sp1.begin(), sp1.end());
  m.subspaces.emplace_back("complement", complement(8, sp2));
  return m;
}

ModelSpace make_op2() {
  ModelSpace m;
  m.name = "op2";
  m.n = 16;
  m.r = 9;
  m.structure = structure_from_rep(build_even_rep(9, 1));
  const std::vector<std::vector<RatMatrix>> ideals{family_span(m.structure.J)};
  m.target_scal = scal_formula(16, 9);
  const auto scales = calibrate_isotropy(16, ideals, m.target_scal);
  m.calibration = scales[0];
  m.R = isotropy_projection_op(16, ideals, scales);
  m.subspaces.emplace_back("spin9", ideals[0]);
  return m;
}

}  // namespace

std::vector<std::string> model_names() { return {"s8", "cp4", "hp2", "op2"}; }

ModelSpace build_model(const std::string& name) {
  if (name == "s8") return make_s8();
  if (name == "cp4") return make_cp4();
  if (name == "hp2") return make_hp2();
  if (name == "op2") return make_op2();
  throw std::invalid_argument("unknown model '" + name + "' (expected s8, cp4, hp2 or op2)");
}

namespace {

// Embeds an operator on the coordinate block [begin, begin + size) into R^n.
RatMatrix embed_rhat(const CurvatureOperator& R, std::size_t n, std::size_t begin) {
  const std::size_t m = R.n();
  RatMatrix out(skew_dim(n), skew_dim(n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d)
          out(pair_index(n, begin + c, begin + d), pair_index(n, begin + a, begin + b)) =
              R.rhat()(pair_index(m, c, d), pair_index(m, a, b));
  return out;
}

RatMatrix embed(const RatMatrix& a, std::size_t n, std::size_t begin) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(begin + i, begin + j) = a(i, j);
  return out;
}

}  // namespace

VerificationReport verify_rank4_product_curvature(int q_plus, int q_minus) {
  if (q_plus < 0 || q_minus < 0 || q_plus + q_minus < 1)
    throw std::invalid_argument("quaternionic dimensions must be non-negative with a positive sum");
  VerificationReport rep;
  rep.suite = "rank4-product";
  const MatrixRep rep4 = build_even_rep(4, q_plus, q_minus);
  const JFamily F = j_family(rep4);
  const SplitResult split = split_rank4(F);
  rep.merge(split.report);
  const std::size_t n = F.n();
  const std::size_t n_plus = 4 * static_cast<std::size_t>(q_plus);

  // J^+ acts on the second block (volume -1), J^- on the first.
  struct Factor {
    const JFamily* fam;
    std::size_t begin, size;
    int q;
    const char* tag;
  };
  const Factor factors[2] = {{&split.J_plus, n_plus, n - n_plus, q_minus, "+"},
                             {&split.J_minus, 0, n_plus, q_plus, "-"}};

  RatMatrix rhat(skew_dim(n), skew_dim(n));
  // omega^pm_ij as 2-forms on R^n, indexed by the pairs (1,2), (1,3), (2,3).
  std::vector<RatMatrix> om_plus(3, RatMatrix(n, n)), om_minus(3, RatMatrix(n, n));
  for (const auto& fac : factors) {
    if (fac.q == 0) continue;
    const JFamily local = restrict_family(*fac.fam, fac.begin, fac.size);
    const std::vector<RatMatrix> triple = local.all_upper();
    const Rational target = scal_formula_kappa(Rational(static_cast<std::int64_t>(fac.size)), 3, Rational(4));
    const Rational c = calibrate_scalar([&](const Rational& t) { return quaternionic_op(t, triple); }, target);
    const CurvatureOperator Rf = quaternionic_op(c, triple);
    rep.value(std::string("scal") + fac.tag, scalar(Rf).str());
    rhat += embed_rhat(Rf, n, fac.begin);
    const Rational nf(static_cast<std::int64_t>(fac.size));
    auto& om = fac.tag[0] == '+' ? om_plus : om_minus;
    for (std::size_t k = 0; k < 3; ++k) {
      const RatMatrix w = Rf.apply(triple[k]) * (Rational(4) / nf);
      const RatMatrix d = w - triple[k] * Rational(4);
      rep.check(d.is_zero(), std::string("w") + fac.tag + "_ij=4J" + fac.tag + "_ij", {static_cast<int>(k)},
                max_abs(d));
      om[k] = embed(w, n, fac.begin);
    }
  }
  const CurvatureOperator R(n, std::move(rhat));
  rep.merge(check_curvature_symmetries(R));
  const Rational expected = Rational(16 * q_plus * (q_plus + 2) + 16 * q_minus * (q_minus + 2));
  rep.check(scalar(R) == expected, "scal=16q+(q++2)+16q-(q-+2)", {}, (scalar(R) - expected).abs());
  rep.value("scal", scalar(R).str());

  // Invert the relation between the rank 4 forms and the rank 3 forms, then
  // compare with 2 J_ij. Stored slots: 0 = (1,2), 1 = (1,3) = -(3,1), 2 = (2,3).
  const Rational h(1, 2);
  const RatMatrix& p12 = om_plus[0];
  const RatMatrix p31 = -om_plus[1];
  const RatMatrix& p23 = om_plus[2];
  const RatMatrix& m12 = om_minus[0];
  const RatMatrix m31 = -om_minus[1];
  const RatMatrix& m23 = om_minus[2];
  const std::pair<std::pair<int, int>, RatMatrix> forms[] = {
      {{1, 2}, (p23 - m23) * h}, {{3, 4}, (p23 + m23) * h}, {{1, 4}, (p12 - m12) * h},
      {{2, 3}, (p12 + m12) * h}, {{1, 3}, (p31 - m31) * h}, {{2, 4}, -(p31 + m31) * h}};
  for (const auto& [ij, w] : forms) {
    const RatMatrix d = w - F.J(ij.first, ij.second) * Rational(2);
    rep.check(d.is_zero(), "w_ij=2J_ij via the rank 3 forms", {ij.first, ij.second}, max_abs(d));
  }
  return rep;
}

}  // namespace clifflab
