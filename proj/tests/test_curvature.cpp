#include "doctest.h"
#include "oracles.hpp"

#include "clifflab/curvature.hpp"
#include "clifflab/linalg.hpp"

using namespace clifflab;

namespace {

Rational delta(std::size_t a, std::size_t b) { return Rational(a == b ? 1 : 0); }

// Model tensors written out from their textbook formulas.
Rational sphere_tensor(const Rational& c, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
  return c * (delta(y, z) * delta(x, w) - delta(x, z) * delta(y, w));
}

// g(J_a X, Y) with X = e_x, Y = e_y is J_a[y][x].
Rational projective_tensor(const Rational& c, const std::vector<RatMatrix>& Js, std::size_t x, std::size_t y,
                           std::size_t z, std::size_t w) {
  Rational s = delta(y, z) * delta(x, w) - delta(x, z) * delta(y, w);
  for (const auto& J : Js) s += J(z, y) * J(w, x) - J(z, x) * J(w, y) - Rational(2) * J(y, x) * J(w, z);
  return c / Rational(4) * s;
}

void require_tensor(const CurvatureOperator& R, const std::function<Rational(std::size_t, std::size_t, std::size_t, std::size_t)>& T) {
  const std::size_t n = R.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) REQUIRE(R.R(a, b, c, d) == T(a, b, c, d));
}

// Ric(x, y) = sum_a R(x, a, a, y) computed from the tensor entries.
RatMatrix ricci_oracle(const CurvatureOperator& R) {
  const std::size_t n = R.n();
  RatMatrix ric(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < n; ++a) ric(x, y) += R.R(x, a, a, y);
  return ric;
}

const std::vector<RatMatrix>& sub(const ModelSpace& m, const std::string& name) {
  for (const auto& [k, v] : m.subspaces)
    if (k == name) return v;
  throw std::logic_error("missing subspace");
}

}  // namespace

TEST_CASE("constant curvature operator") {
  const CurvatureOperator R = constant_curvature_op(8, Rational(4));
  require_tensor(R, [](auto x, auto y, auto z, auto w) { return sphere_tensor(Rational(4), x, y, z, w); });
  CHECK(R.rhat() == RatMatrix::identity(28) * Rational(4));
  CHECK(scalar(R) == Rational(224));
  CHECK(ricci_oracle(R) == RatMatrix::identity(8) * Rational(28));
  CHECK(ricci(R) == ricci_oracle(R));
  CHECK(ricci(constant_curvature_op(4, Rational(1))) == RatMatrix::identity(4) * Rational(3));
  CHECK(constant_curvature_op(5, Rational(0)).rhat().is_zero());
  CHECK(check_curvature_symmetries(R).passed());
  CHECK(bianchi_residual(R) == Rational(0));
}

TEST_CASE("trace(R-hat) = scal/2 and symmetries on every model") {
  for (const auto& name : model_names()) {
    const ModelSpace m = build_model(name);
    CHECK(m.R.rhat().trace() * Rational(2) == scalar(m.R));
    CHECK(check_curvature_symmetries(m.R).passed());
    CHECK(scalar(m.R) == m.target_scal);
  }
}

TEST_CASE("CP4: calibration, tensor, Ricci, spectrum by trace moments") {
  const ModelSpace m = build_model("cp4");
  // scal of CP^m with holomorphic curvature c is m(m+1)c.
  CHECK(m.calibration == Rational(160, 20));
  const RatMatrix& K = sub(m, "kahler_line").front();
  require_tensor(m.R, [&](auto x, auto y, auto z, auto w) { return projective_tensor(m.calibration, {K}, x, y, z, w); });
  CHECK(ricci_oracle(m.R) == RatMatrix::identity(8) * Rational(20));
  // Minimal polynomial R(R-4)(R-20) = 0 and the first two moments pin the
  // multiplicities to (12, 15, 1).
  const RatMatrix& A = m.R.rhat();
  const RatMatrix I = RatMatrix::identity(28);
  CHECK((A * (A - I * Rational(4)) * (A - I * Rational(20))).is_zero());
  CHECK(A.trace() == Rational(4 * 15 + 20));
  CHECK((A * A).trace() == Rational(16 * 15 + 400));
  const auto spec = spectrum(m.R);
  const std::vector<std::pair<Rational, std::size_t>> want{{Rational(0), 12}, {Rational(4), 15}, {Rational(20), 1}};
  CHECK(spec == want);
  // The top eigenvector is the Kähler form.
  CHECK(m.R.apply(K) == K * Rational(20));
  CHECK(verify_cc_normalization(m.R, m.structure.J).passed());
}

TEST_CASE("CP1 degenerates to the round sphere") {
  const CurvatureOperator R = fubini_study_op(1, Rational(3));
  CHECK(R.rhat() == RatMatrix::identity(1) * Rational(3));
}

TEST_CASE("HP2: calibration, tensor, eigenvalues, the sp(1) value") {
  const ModelSpace m = build_model("hp2");
  // scal of HP^q with quaternionic curvature c is 4q(q+2)c.
  CHECK(m.calibration == Rational(128, 32));
  const auto& sp1 = sub(m, "sp1");
  require_tensor(m.R, [&](auto x, auto y, auto z, auto w) { return projective_tensor(m.calibration, sp1, x, y, z, w); });
  CHECK(ricci_oracle(m.R) == RatMatrix::identity(8) * Rational(16));
  for (const auto& X : sub(m, "sp2")) CHECK(m.R.apply(X) == X * Rational(4));
  CHECK(sub(m, "complement").size() == 15);
  for (const auto& X : sub(m, "complement")) CHECK(m.R.apply(X).is_zero());
  // Trace bookkeeping: (64 - 10*4) / 3 = 8 on sp(1).
  CHECK(m.R.rhat().trace() == Rational(64));
  for (const auto& X : sp1) CHECK(m.R.apply(X) == X * Rational(8));
}

TEST_CASE("HP1 is the round 4-sphere") {
  const CurvatureOperator R = quaternionic_op(1, Rational(2));
  CHECK(R.rhat() == RatMatrix::identity(6) * Rational(2));
}

TEST_CASE("isotropy projection") {
  // Full so(n) reproduces the constant curvature operator.
  std::vector<RatMatrix> so5;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) so5.push_back(elementary_skew(5, a, b));
  CHECK(isotropy_projection_op(5, {so5}, {Rational(3)}).rhat() == constant_curvature_op(5, Rational(3)).rhat());

  // sp(2) alone violates Bianchi at every scale.
  const JFamily f5 = j_family(build_even_rep(5, 1));
  CHECK_THROWS_AS((void)calibrate_isotropy(8, {f5.all_upper()}, Rational(128)), CalibrationError);

  // Two non-commuting elements do not span a subalgebra.
  CHECK_THROWS_AS((void)isotropy_projection_op(3, {{elementary_skew(3, 0, 1), elementary_skew(3, 1, 2)}}, {Rational(1)}),
                  std::domain_error);

  // OP2: single scale 8 on spin(9), Einstein with constant 36.
  const ModelSpace op2 = build_model("op2");
  CHECK(op2.calibration == Rational(8));
  for (const auto& X : sub(op2, "spin9")) CHECK(op2.R.apply(X) == X * Rational(8));
  CHECK(ricci_oracle(op2.R) == RatMatrix::identity(16) * Rational(36));
  CHECK(scalar(op2.R) == Rational(576));
  CHECK(bianchi_residual(op2.R) == Rational(0));
}

TEST_CASE("parallel identities and their failure at the wrong kappa") {
  const ModelSpace s8 = build_model("s8");
  CHECK(verify_parallel_identities(s8.R, s8.structure.J, Rational(2)).passed());
  const VerificationReport bad = verify_parallel_identities(s8.R, s8.structure.J, Rational(1));
  CHECK_FALSE(bad.passed());
  bool found = false;
  for (const auto& f : bad.failures)
    if (f.relation == "R(J_ik)=(n/4)kappa J_ik") {
      found = true;
      // R-hat(J) = 4J against the predicted 2J.
      CHECK(f.residual == Rational(2));
    }
  CHECK(found);
  for (const auto& name : model_names()) {
    const ModelSpace m = build_model(name);
    CHECK(verify_curvature_consequences(m.R, m.structure.J).passed());
    CHECK(verify_cc_normalization(m.R, m.structure.J).passed());
  }
}

TEST_CASE("cc normalization fails on a rescaled CP4") {
  const ModelSpace m = build_model("cp4");
  CurvatureOperator half = m.R;
  half *= Rational(1, 2);
  const VerificationReport r = verify_cc_normalization(half, m.structure.J);
  CHECK_FALSE(r.passed());
  CHECK(scalar(half) == Rational(80));
  bool scal_failed = false;
  for (const auto& f : r.failures) scal_failed = scal_failed || f.relation == "scal=2n(n/4+2r-4)";
  CHECK(scal_failed);
}

TEST_CASE("scalar curvature formula") {
  CHECK(scal_formula(8, 8) == Rational(224));
  CHECK(scal_formula(8, 6) == Rational(160));
  CHECK(scal_formula(8, 5) == Rational(128));
  CHECK(scal_formula(16, 9) == Rational(576));
  CHECK(scal_formula(128, 16) == Rational(15360));
}

TEST_CASE("centralizers in so(8)") {
  CHECK(centralizer_dim(8, j_family(build_even_rep(5, 1)).all_upper()) == 3);
  CHECK(centralizer_dim(8, j_family(build_even_rep(6, 1)).all_upper()) == 1);
  CHECK(centralizer_dim(8, j_family(build_even_rep(7, 1)).all_upper()) == 0);
  const JFamily f5 = j_family(build_even_rep(5, 1));
  const Centralizer c = centralizer(8, f5.all_upper());
  for (const auto& X : c.basis)
    for (const auto& G : f5.all_upper()) CHECK(commutator(X, G).is_zero());
}

TEST_CASE("rank 4 products of quaternionic projective spaces") {
  CHECK(verify_rank4_product_curvature(1, 1).passed());
  CHECK(verify_rank4_product_curvature(2, 1).passed());
  CHECK(verify_rank4_product_curvature(0, 1).passed());
  CHECK_THROWS((void)verify_rank4_product_curvature(0, 0));
}
