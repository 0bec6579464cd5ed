#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clifflab/even_structure.hpp"
#include "clifflab/report.hpp"

namespace clifflab {

struct CalibrationError : std::runtime_error {
  CalibrationError(const std::string& what, Rational residual)
      : std::runtime_error(what), residual(residual) {}
  Rational residual;
};

/// Algebraic curvature tensor R(X,Y,Z,W) = g(R_{X,Y}Z, W), stored as the
/// symmetric matrix of the curvature endomorphism on Lambda^2 in the basis
/// {X_a ^ X_b}_{a<b}: rhat(cd, ab) = -R(a,b,c,d). The unit sphere has rhat = id.
class CurvatureOperator {
 public:
  CurvatureOperator() = default;
  CurvatureOperator(std::size_t n, RatMatrix rhat);

  /// Builds from a tensor callback evaluated on a<b, c<d (0-based frame indices).
  static CurvatureOperator from_tensor(std::size_t n,
                                       const std::function<Rational(std::size_t, std::size_t, std::size_t, std::size_t)>& R);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const RatMatrix& rhat() const noexcept { return rhat_; }

  /// R(X_a, X_b, X_c, X_d), 0-based.
  [[nodiscard]] Rational R(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
  /// The endomorphism R_{X_x, X_y}; entry (w, z) is R(x, y, z, w).
  [[nodiscard]] RatMatrix R_XY(std::size_t x, std::size_t y) const;
  /// Curvature endomorphism applied to a skew matrix.
  [[nodiscard]] RatMatrix apply(const RatMatrix& skew) const;

  CurvatureOperator& operator*=(const Rational& c) {
    rhat_ *= c;
    return *this;
  }
  friend CurvatureOperator operator+(const CurvatureOperator& a, const CurvatureOperator& b);

 private:
  std::size_t n_ = 0;
  RatMatrix rhat_;
};

/// Pair symmetry (rhat symmetric) and the first Bianchi identity over a<b<c, all d.
[[nodiscard]] VerificationReport check_curvature_symmetries(const CurvatureOperator& R);
/// Maximal |Bianchi defect|.
[[nodiscard]] Rational bianchi_residual(const CurvatureOperator& R);

[[nodiscard]] RatMatrix ricci(const CurvatureOperator& R);
[[nodiscard]] Rational scalar(const CurvatureOperator& R);
/// The constant c with Ric = c g, if Einstein.
[[nodiscard]] std::optional<Rational> einstein_constant(const CurvatureOperator& R);

/// R = c [g(X,W)g(Y,Z) - g(X,Z)g(Y,W)].
[[nodiscard]] CurvatureOperator constant_curvature_op(std::size_t n, const Rational& c);
/// Complex projective model with holomorphic sectional curvature c for the complex structure J.
[[nodiscard]] CurvatureOperator fubini_study_op(const Rational& c, const RatMatrix& J);
/// Standard complex structure on R^{2m} (blocks [[0,-1],[1,0]]).
[[nodiscard]] CurvatureOperator fubini_study_op(std::size_t m, const Rational& c);
/// Quaternionic projective model for the quaternionic triple {I, J, K}.
[[nodiscard]] CurvatureOperator quaternionic_op(const Rational& c, const std::vector<RatMatrix>& triple);
[[nodiscard]] std::vector<RatMatrix> standard_quaternionic_triple(std::size_t q);
[[nodiscard]] CurvatureOperator quaternionic_op(std::size_t q, const Rational& c);

/// Trace-orthogonal projection of Lambda^2 onto span(gens) (coordinates).
[[nodiscard]] RatMatrix span_projection(std::size_t n, const std::vector<RatMatrix>& gens);

/// sum_i scales[i] * Pi_i for the ideals of a subalgebra; checks closure and
/// Bianchi. Throws std::domain_error on a non-subalgebra and CalibrationError
/// when the scales violate Bianchi.
[[nodiscard]] CurvatureOperator isotropy_projection_op(std::size_t n, const std::vector<std::vector<RatMatrix>>& ideals,
                                                       const std::vector<Rational>& scales);
/// Scales forced by Bianchi (a one-dimensional solution space), normalized to target_scal.
[[nodiscard]] std::vector<Rational> calibrate_isotropy(std::size_t n, const std::vector<std::vector<RatMatrix>>& ideals,
                                                       const Rational& target_scal);

/// c such that builder(c) has the given scalar curvature; builder must be linear in c.
[[nodiscard]] Rational calibrate_scalar(const std::function<CurvatureOperator(const Rational&)>& builder,
                                        const Rational& target_scal);

/// Eigenvalues with multiplicities, certified exactly (candidates come from a
/// floating-point solve and are confirmed by exact nullities summing to dim).
[[nodiscard]] std::vector<std::pair<Rational, std::size_t>> spectrum(const CurvatureOperator& R);

/// kappa n (n/4 + 2r - 4); with kappa = 2 the curvature-constancy scalar curvature.
[[nodiscard]] Rational scal_formula_kappa(const Rational& n, int r, const Rational& kappa);
[[nodiscard]] Rational scal_formula(std::int64_t n, int r);

/// Identities for a parallel structure with omega = kappa J: curvature on the
/// family, the commutator identity [R_{X,Y}, J_ij], and the Einstein constant.
[[nodiscard]] VerificationReport verify_parallel_identities(const CurvatureOperator& R, const JFamily& J,
                                                            const Rational& kappa);
/// Consequences with omega_ij := (4/n) R(J_ij) read off the curvature:
/// the contracted identity, its solved form, orthogonality of omega to J, and
/// the full tensor identity on frame pairs.
[[nodiscard]] VerificationReport verify_curvature_consequences(const CurvatureOperator& R, const JFamily& J);
/// kappa = 2 plus scal = 2n(n/4 + 2r - 4); n = 4 is flagged.
[[nodiscard]] VerificationReport verify_cc_normalization(const CurvatureOperator& R, const JFamily& J);

struct Centralizer {
  std::size_t dim = 0;
  std::vector<RatMatrix> basis;
};
[[nodiscard]] Centralizer centralizer(std::size_t n, const std::vector<RatMatrix>& gens);
[[nodiscard]] std::size_t centralizer_dim(std::size_t n, const std::vector<RatMatrix>& gens);

/// Named n <= 16 models with their even Clifford structure.
struct ModelSpace {
  std::string name;
  std::size_t n = 0;
  int r = 0;
  CurvatureOperator R;
  EvenCliffordStructure structure;
  Rational target_scal;
  Rational calibration;  // the solved model constant
  std::vector<std::pair<std::string, std::vector<RatMatrix>>> subspaces;
};

[[nodiscard]] std::vector<std::string> model_names();
[[nodiscard]] ModelSpace build_model(const std::string& name);

/// HP^{q+} x HP^{q-} assembled from the split of build_even_rep(4, q+, q-):
/// checks the curvature forms of the two rank 3 families against the
/// combinations of the rank 4 forms.
[[nodiscard]] VerificationReport verify_rank4_product_curvature(int q_plus, int q_minus);

}  // namespace clifflab
