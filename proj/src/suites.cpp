#include "clifflab/suites.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "clifflab/classify.hpp"
#include "clifflab/even_structure.hpp"
#include "clifflab/linalg.hpp"
#include "clifflab/spin_reps.hpp"
#include "clifflab/triality.hpp"

namespace clifflab {

namespace {

Rational R(std::int64_t v) { return Rational(v); }

void expect_eq(VerificationReport& rep, const std::string& what, const Rational& got, const Rational& want) {
  rep.check(got == want, what, {}, (got - want).abs());
  rep.value(what, got.str());
}

void expect_true(VerificationReport& rep, bool ok, const std::string& what, std::vector<int> idx = {}) {
  rep.check(ok, what, std::move(idx), Rational(ok ? 0 : 1));
}

// Merges a sub-report under a tag; values stay local to keep verify-all compact.
void absorb(VerificationReport& rep, const VerificationReport& sub, const std::string& tag) {
  rep.checks += sub.checks;
  rep.failure_count += sub.failure_count;
  for (const auto& f : sub.failures) {
    if (rep.failures.size() >= VerificationReport::kMaxStoredFailures) break;
    rep.failures.push_back({tag + ": " + f.relation, f.indices, f.residual});
  }
  for (const auto& n : sub.notes) rep.notes.push_back(tag + ": " + n);
}

// ---- 1 ----
VerificationReport dimension_tables(std::uint64_t) {
  VerificationReport rep;
  expect_eq(rep, "n0(5)", R(n0(5)), R(8));
  expect_eq(rep, "n0(6)", R(n0(6)), R(8));
  const int ranks[] = {9, 10, 12, 16};
  const std::int64_t irr[] = {32, 64, 128, 256};
  const std::int64_t even[] = {16, 32, 64, 128};
  for (int k = 0; k < 4; ++k) {
    expect_eq(rep, "n_irr(" + std::to_string(ranks[k]) + ")", R(n_irr(ranks[k])), R(irr[k]));
    expect_eq(rep, "n0(" + std::to_string(ranks[k]) + ")", R(n0(ranks[k])), R(even[k]));
  }
  return rep;
}

// ---- 2 ----
VerificationReport relations_orthogonality(std::uint64_t) {
  VerificationReport rep;
  for (int r = 2; r <= 16; ++r) {
    const MatrixRep m = r == 4 ? build_even_rep(4, 1, 0) : build_even_rep(r, 1);
    const JFamily f = j_family(m);
    const std::string tag = "r=" + std::to_string(r);
    absorb(rep, verify_relations(f), tag + " relations");
    if (r >= 5) absorb(rep, verify_orthogonality(f), tag + " orthogonality");
    if (r == 4) {
      const Rational t = trace_product(f.J(1, 2), f.J(3, 4));
      expect_true(rep, t.abs() == R(4), "r=4 block: |trace(J_12 J_34)| = 4");
      rep.value("r=4 trace(J_12 J_34)", t.str());
    }
    rep.value(tag + " dim", std::to_string(f.n()));
  }
  return rep;
}

// ---- 3 ----
VerificationReport rank4_split(std::uint64_t) {
  VerificationReport rep;
  const JFamily f = j_family(build_even_rep(4, 1, 1));
  const SplitResult s = split_rank4(f);
  absorb(rep, s.report, "split");
  rep.value("rank P+", std::to_string(rank(s.P_plus)));
  rep.value("rank P-", std::to_string(rank(s.P_minus)));
  expect_true(rep, rank(s.P_plus) == 4 && rank(s.P_minus) == 4, "P+ and P- have rank 4");
  // Cross-family commutation at the algebra level.
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        for (int d = c + 1; d <= 3; ++d) {
          const RatMatrix k = commutator(s.J_plus.J(a, b), s.J_minus.J(c, d));
          rep.check(k.is_zero(), "[J+_ab, J-_cd] = 0", {a, b, c, d}, max_abs(k));
        }
  // A point factor: with no minus block the minus family vanishes identically.
  const SplitResult t = split_rank4(j_family(build_even_rep(4, 1, 0)));
  auto vanishes = [](const JFamily& fam) {
    for (const auto& m : fam.all_upper())
      if (!m.is_zero()) return false;
    return true;
  };
  expect_true(rep, vanishes(t.J_plus) != vanishes(t.J_minus), "single block: exactly one family vanishes");
  absorb(rep, verify_rank4_product_curvature(1, 1), "HP1xHP1 product curvature");
  return rep;
}

// ---- 4 ----
VerificationReport hodge(std::uint64_t) {
  VerificationReport rep;
  for (int r : {3, 7}) {
    const HodgeExtension h = extend_hodge(structure_from_rep(build_even_rep(r, 1)));
    absorb(rep, h.report, "r=" + std::to_string(r));
    expect_true(rep, h.K.size() == static_cast<std::size_t>(r), "r=" + std::to_string(r) + " yields r operators");
  }
  for (int r : {5, 6}) {
    bool rejected = false;
    try {
      (void)extend_hodge(structure_from_rep(build_even_rep(r, 1)));
    } catch (const UnsupportedRank&) {
      rejected = true;
    }
    expect_true(rep, rejected, "r=" + std::to_string(r) + " rejected");
  }
  return rep;
}

// ---- 5 ----
VerificationReport universality(std::uint64_t seed) {
  VerificationReport rep;
  UniversalExtensionOptions opt;
  opt.seed = seed;
  for (int r : {2, 3, 5, 6, 7, 8}) {
    const MatrixRep m = build_even_rep(r, 1);
    const UniversalExtensionResult u = universal_extension(lambda2_restriction(j_family(m)), opt);
    const std::string tag = "r=" + std::to_string(r);
    expect_true(rep, u.accepted, tag + " accepted");
    absorb(rep, u.report, tag);
    std::size_t blades = 0;
    for (Mask b = 0; b <= AlgebraSignature(r).full_mask(); ++b) {
      if (grade(b) % 2 != 0) continue;
      ++blades;
      const auto it = u.morphism.images.find(b);
      const RatMatrix want = to_rational(evaluate_blade(m, b));
      const bool ok = it != u.morphism.images.end() && it->second == want;
      rep.check(ok, tag + " round trip on even blade", indices_from_mask(b),
                ok || it == u.morphism.images.end() ? Rational(ok ? 0 : 1) : max_abs(it->second - want));
    }
    rep.value(tag + " even blades", std::to_string(blades));
  }
  Lambda2Map doubled = lambda2_restriction(j_family(build_even_rep(5, 1)));
  doubled.images[0] = doubled.images[0] * R(2);
  const UniversalExtensionResult bad = universal_extension(doubled, opt);
  expect_true(rep, !bad.accepted && bad.witness.has_value(), "doubled phi(e1^e2) rejected");
  if (bad.witness) {
    const auto& w = *bad.witness;
    auto unit = [](const std::vector<Rational>& v, std::size_t i) {
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != Rational(k == i ? 1 : 0)) return false;
      return true;
    };
    expect_true(rep, unit(w.u, 0) && unit(w.v, 1) && unit(w.w, 1), "witness is (u=e1, v=w=e2)");
    rep.value("witness relation", w.relation);
  }
  return rep;
}

// ---- 6 ----
VerificationReport triality(std::uint64_t) {
  VerificationReport rep;
  const TrialityResult t = triality_map();
  absorb(rep, t.report, "triality");
  expect_true(rep, t.bijective, "bijective");
  expect_eq(rep, "bracket pairs", R(static_cast<std::int64_t>(t.bracket_pairs)), R(378));
  absorb(rep, verify_relations(t.pulled_back), "pulled-back relations");
  absorb(rep, verify_orthogonality(t.pulled_back), "pulled-back orthogonality");
  return rep;
}

bool is_scalar_multiple(const RatMatrix& m, const Rational& c) {
  return (m - RatMatrix::identity(m.rows()) * c).is_zero();
}

// R-hat restricted to a span: R(X) = c X for every generator.
void expect_eigen_on(VerificationReport& rep, const CurvatureOperator& Rop, const std::vector<RatMatrix>& span,
                     const Rational& c, const std::string& what) {
  Rational worst(0);
  for (const auto& X : span) {
    const Rational d = max_abs(Rop.apply(X) - X * c);
    if (worst < d) worst = d;
  }
  rep.check(worst.is_zero(), what, {}, worst);
}

const std::vector<RatMatrix>& subspace(const ModelSpace& m, const std::string& name) {
  for (const auto& [k, v] : m.subspaces)
    if (k == name) return v;
  throw std::logic_error("model " + m.name + " has no subspace " + name);
}

// ---- 7 ----
VerificationReport models_n8(std::uint64_t) {
  VerificationReport rep;
  {
    const ModelSpace s8 = build_model("s8");
    expect_true(rep, is_scalar_multiple(s8.R.rhat(), R(4)), "S8: R-hat = 4 id");
    expect_eq(rep, "S8 scal", scalar(s8.R), R(224));
  }
  {
    const ModelSpace cp4 = build_model("cp4");
    expect_eq(rep, "CP4 scal", scalar(cp4.R), R(160));
    expect_true(rep, is_scalar_multiple(ricci(cp4.R), R(20)), "CP4: Ric = 20 g");
    const auto spec = spectrum(cp4.R);
    const std::vector<std::pair<Rational, std::size_t>> want{{R(0), 12}, {R(4), 15}, {R(20), 1}};
    expect_true(rep, spec == want, "CP4 spectrum {0^12, 4^15, 20^1}");
    std::string text;
    for (const auto& [e, mult] : spec) text += (text.empty() ? "" : ", ") + e.str() + "^" + std::to_string(mult);
    rep.value("CP4 spectrum", text);
    expect_eigen_on(rep, cp4.R, subspace(cp4, "kahler_line"), R(20), "CP4: 20 on the Kähler line");
  }
  {
    const ModelSpace hp2 = build_model("hp2");
    expect_eq(rep, "HP2 scal", scalar(hp2.R), R(128));
    expect_true(rep, is_scalar_multiple(ricci(hp2.R), R(16)), "HP2: Ric = 16 g");
    expect_eigen_on(rep, hp2.R, subspace(hp2, "sp2"), R(4), "HP2: 4 on sp(2)");
    expect_eigen_on(rep, hp2.R, subspace(hp2, "complement"), R(0), "HP2: 0 on the 15-dim complement");
    expect_eq(rep, "HP2 complement dim", R(static_cast<std::int64_t>(subspace(hp2, "complement").size())), R(15));
    expect_eq(rep, "HP2 trace(R-hat)", hp2.R.rhat().trace(), R(64));
  }
  return rep;
}

// ---- 8 ----
VerificationReport op2(std::uint64_t) {
  VerificationReport rep;
  const ModelSpace m = build_model("op2");
  expect_eq(rep, "OP2 scal", scalar(m.R), R(576));
  expect_true(rep, is_scalar_multiple(ricci(m.R), R(36)), "OP2: Ric = 36 g");
  expect_eq(rep, "OP2 Bianchi residual", bianchi_residual(m.R), R(0));
  expect_eigen_on(rep, m.R, subspace(m, "spin9"), R(8), "OP2: 8 on spin(9)");
  absorb(rep, check_curvature_symmetries(m.R), "symmetries");
  absorb(rep, verify_cc_normalization(m.R, m.structure.J), "cc normalization");
  return rep;
}

// ---- 9 ----
VerificationReport identities(std::uint64_t) {
  VerificationReport rep;
  for (const auto& name : model_names()) {
    const ModelSpace m = build_model(name);
    absorb(rep, verify_parallel_identities(m.R, m.structure.J, R(2)), name + " parallel identities");
    absorb(rep, verify_curvature_consequences(m.R, m.structure.J), name + " consequences");
    rep.value(name + " Einstein constant", einstein_constant(m.R) ? einstein_constant(m.R)->str() : "none");
  }
  return rep;
}

// ---- 10 ----
VerificationReport centralizers(std::uint64_t) {
  VerificationReport rep;
  const int ranks[] = {5, 6, 7};
  const std::int64_t want[] = {3, 1, 0};
  for (int k = 0; k < 3; ++k) {
    const Case1Result c = case1_n8(ranks[k]);
    expect_eq(rep, "centralizer dim r=" + std::to_string(ranks[k]), R(static_cast<std::int64_t>(c.centralizer_dim)),
              R(want[k]));
  }
  return rep;
}

// ---- 11 ----
VerificationReport classification(std::uint64_t) {
  VerificationReport rep;
  // Printed Table 3 scalar curvatures.
  const std::pair<const char*, const char*> printed[] = {
      {"quaternion-Kähler (QK)", "8q(q+2)"},
      {"product of two QK manifolds", "16q⁺(q⁺+2)+16q⁻(q⁻+2)"},
      {"Sp(k+2)/Sp(k)×Sp(2)", "32k(k+3)"},
      {"SU(k+4)/S(U(k)×U(4))", "32k(k+4)"},
      {"SO(k+8)/SO(k)×SO(8)", "32k(k+6)"},
      {"F4/Spin(9)", "2^6·3^2"},
      {"E6/Spin(10)·U(1)", "2^9·3"},
      {"E7/Spin(12)·SU(2)", "2^9·3^2"},
      {"E8/Spin⁺(16)", "2^10·3·5"}};
  const auto t3 = table3_rows();
  for (const auto& [space, scal] : printed) {
    bool found = false;
    for (const auto& row : t3)
      if (row.space == space) {
        found = true;
        rep.check(row.scal_label == scal, std::string("Table 3 scal of ") + space, {row.r}, Rational(0));
        if (row.scal) {
          const Rational f = scal_formula(*row.dim, row.r);
          rep.check(f == *row.scal && factorize(f.num()) == scal, std::string("scal_formula for ") + space, {row.r},
                    (f - *row.scal).abs());
        } else if (!row.param.empty() && row.r >= 5) {
          // Families: the label must be the symbolic formula with n = coeff * param.
          rep.check(scal_symbolic(row.dim_coeff, row.r, row.param) == scal, std::string("symbolic scal for ") + space,
                    {row.r}, Rational(0));
        }
      }
    expect_true(rep, found, std::string("Table 3 has ") + space);
  }
  // Symbolic families checked numerically against the formula.
  for (std::int64_t k = 1; k <= 6; ++k) {
    expect_eq(rep, "8q(q+2) at q=" + std::to_string(k), scal_formula(4 * k, 3), R(8 * k * (k + 2)));
    expect_eq(rep, "32k(k+3) at k=" + std::to_string(k), scal_formula(8 * k, 5), R(32 * k * (k + 3)));
    expect_eq(rep, "32k(k+4) at k=" + std::to_string(k), scal_formula(8 * k, 6), R(32 * k * (k + 4)));
    expect_eq(rep, "32k(k+6) at k=" + std::to_string(k), scal_formula(8 * k, 8), R(32 * k * (k + 6)));
  }
  for (const auto& row : table2_rows())
    if (row.r >= 5 && row.dim) rep.check(*row.dim % n0(row.r) == 0, "Table 2 dim divisible by n0(r)", {row.r}, R(0));
  const auto t2 = table2_rows();
  for (const auto& row : t3) {
    expect_true(rep, row.r != 7, "Table 3 has no r = 7 row", {row.r});
    // Hodge and HP x HP rows are special subclasses of the r = 2, 4 rows.
    if (row.r == 2 || row.space.rfind("HP", 0) == 0) continue;
    bool in2 = false;
    for (const auto& r2 : t2) in2 = in2 || (r2.r == row.r && r2.space == row.space);
    expect_true(rep, in2, "Table 3 row appears in Table 2: " + row.space, {row.r});
  }
  for (std::int64_t q = 1; q <= 8; ++q) {
    const Verdict v = check_conditions(candidate("case7"), {{"p", 2}, {"q", q}});
    expect_true(rep, v.admissible && v.dim == 8 * q, "case7 p=2 admissible", {static_cast<int>(q)});
  }

  // Exclusion witnesses for cases (1), (2), (5), (6), (9).
  const std::pair<const char*, std::int64_t> witnesses[] = {
      {"case1", 14}, {"case2", 5}, {"case5", 12}, {"case6", 20}, {"case9-SU4", 15}, {"case9-SO", 10}};
  for (const auto& [key, dim] : witnesses) {
    const auto w = first_condition_a_witness(candidate(key));
    const bool ok = w && w->dim == dim && w->reason == VerdictReason::fails_divisibility_b;
    expect_true(rep, ok, std::string(key) + " excluded with a dimension " + std::to_string(dim) + " witness");
    if (w) rep.value(std::string(key) + " witness dim", std::to_string(w->dim));
    bool any = false;
    for (const auto& v : scan(candidate(key))) any = any || v.admissible;
    expect_true(rep, !any, std::string(key) + " has no admissible instance");
  }
  for (const auto& [p, q] : {std::pair{5, 1}, std::pair{5, 2}, std::pair{6, 1}}) {
    const EquivarianceResult e = case4_equivariance(p, q);
    const std::string tag = "case4 p=" + std::to_string(p) + " q=" + std::to_string(q);
    expect_eq(rep, tag + " solution dim", R(static_cast<std::int64_t>(e.solution_dim)), R(q * q));
    expect_true(rep, !e.clifford_compatible, tag + " not Clifford compatible");
    absorb(rep, e.report, tag);
  }
  return rep;
}

// ---- 12 ----
VerificationReport determinism(std::uint64_t seed) {
  VerificationReport rep;
  const std::string a = dump(report_to_json(universality(seed)));
  const std::string b = dump(report_to_json(universality(seed)));
  expect_true(rep, a == b, "seeded universality report is reproducible");
  const std::string t1 = dump(tables_json()) + tables_markdown(1) + tables_markdown(2) + tables_markdown(3);
  const std::string t2 = dump(tables_json()) + tables_markdown(1) + tables_markdown(2) + tables_markdown(3);
  expect_true(rep, t1 == t2, "table emission is byte-stable");
  rep.notes.push_back("wall-clock timing is excluded from reports unless requested");
  return rep;
}

using SuiteFn = VerificationReport (*)(std::uint64_t);

const std::vector<std::pair<SuiteInfo, SuiteFn>>& registry() {
  static const std::vector<std::pair<SuiteInfo, SuiteFn>> r = {
      {{1, "dimension-tables"}, dimension_tables},
      {{2, "relations-orthogonality"}, relations_orthogonality},
      {{3, "rank4-split"}, rank4_split},
      {{4, "hodge-extension"}, hodge},
      {{5, "universality"}, universality},
      {{6, "triality"}, triality},
      {{7, "model-curvature-n8"}, models_n8},
      {{8, "op2-isotropy"}, op2},
      {{9, "curvature-identities"}, identities},
      {{10, "centralizers"}, centralizers},
      {{11, "classification"}, classification},
      {{12, "determinism"}, determinism},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& [info, fn] : registry()) v.push_back(info);
    return v;
  }();
  return out;
}

VerificationReport run_suite(int id, std::uint64_t seed) {
  for (const auto& [info, fn] : registry()) {
    if (info.id != id) continue;
    VerificationReport rep;
    try {
      rep = fn(seed);
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what(), {}, Rational(1));
    }
    rep.suite = info.name;
    return rep;
  }
  throw std::invalid_argument("unknown suite id " + std::to_string(id));
}

bool VerifyAllResult::passed() const {
  for (const auto& r : runs)
    if (!r.report.passed()) return false;
  return true;
}

VerifyAllResult verify_all(std::uint64_t seed) {
  VerifyAllResult out;
  out.seed = seed;
  for (const auto& info : suite_list()) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteRun run{info, run_suite(info.id, seed), 0};
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.runs.push_back(std::move(run));
  }
  return out;
}

Json verify_all_json(const VerifyAllResult& r, bool with_timing) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = "clifflab";
  j["version"] = kToolVersion;
  j["config"] = {{"command", "verify-all"}, {"seed", r.seed}};
  j["passed"] = r.passed();
  Json suites = Json::array();
  for (const auto& run : r.runs) {
    Json s = report_to_json(run.report);
    s.erase("schema");
    Json entry;
    entry["id"] = run.info.id;
    for (auto it = s.begin(); it != s.end(); ++it) entry[it.key()] = it.value();
    if (with_timing) entry["seconds"] = run.seconds;
    suites.push_back(std::move(entry));
  }
  j["suites"] = std::move(suites);
  return j;
}

VerificationReport run_structure_suite(const EvenCliffordStructure& s, const std::string& suite, std::uint64_t seed) {
  VerificationReport rep;
  if (suite == "relations") {
    rep = verify_relations(s.J);
  } else if (suite == "orthogonality") {
    rep = verify_orthogonality(s.J);
  } else if (suite == "hodge") {
    rep = extend_hodge(s).report;
  } else if (suite == "universality") {
    UniversalExtensionOptions opt;
    opt.seed = seed;
    const UniversalExtensionResult u = universal_extension(lambda2_restriction(s.J), opt);
    rep = u.report;
    if (!u.accepted && rep.passed()) rep.fail("extension rejected", {}, Rational(1));
    if (u.witness) {
      auto vec = [](const std::vector<Rational>& v) {
        std::string out = "(";
        for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].str();
        return out + ")";
      };
      rep.value("witness u", vec(u.witness->u));
      rep.value("witness v", vec(u.witness->v));
      rep.value("witness w", vec(u.witness->w));
      rep.value("witness relation", u.witness->relation);
    }
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "' (expected relations, orthogonality, hodge or universality)");
  }
  rep.suite = suite;
  return rep;
}

CurvatureCheck curvature_check(const std::string& model, const std::string& check) {
  if (check != "identities" && check != "cc" && check != "spectrum")
    throw std::invalid_argument("unknown check '" + check + "' (expected identities, cc or spectrum)");
  const ModelSpace m = build_model(model);
  CurvatureCheck out;
  Json j;
  j["schema"] = kSchemaVersion;
  j["model"] = m.name;
  j["n"] = m.n;
  j["r"] = m.r;
  j["check"] = check;
  j["calibration"] = rational_to_json(m.calibration);
  j["scal"] = rational_to_json(scalar(m.R));
  const auto ein = einstein_constant(m.R);
  j["einstein_constant"] = ein ? rational_to_json(*ein) : Json(nullptr);
  if (check == "spectrum") {
    const auto spec = spectrum(m.R);
    j["spectrum"] = spectrum_to_json(spec);
    Json sub = Json::object();
    for (const auto& [name, span] : m.subspaces) {
      // Eigenvalue on the span when R-hat acts there as a scalar.
      std::optional<Rational> ev;
      bool uniform = !span.empty();
      for (const auto& X : span) {
        const RatMatrix Y = m.R.apply(X);
        std::size_t a = 0, b = 0;
        while (a < X.rows() && X(a, b).is_zero()) {
          if (++b == X.cols()) { b = 0; ++a; }
        }
        const Rational c = Y(a, b) / X(a, b);
        uniform = uniform && (Y - X * c).is_zero() && (!ev || *ev == c);
        ev = c;
      }
      sub[name] = {{"dim", span.size()}, {"eigenvalue", uniform ? Json(ev->str()) : Json(nullptr)}};
    }
    j["subspaces"] = std::move(sub);
    out.passed = true;
  } else {
    VerificationReport rep;
    if (check == "identities") {
      rep.merge(check_curvature_symmetries(m.R));
      rep.merge(verify_parallel_identities(m.R, m.structure.J, Rational(2)));
      rep.merge(verify_curvature_consequences(m.R, m.structure.J));
    } else {
      rep = verify_cc_normalization(m.R, m.structure.J);
    }
    rep.suite = check;
    out.passed = rep.passed();
    j["report"] = report_to_json(rep);
  }
  out.document = std::move(j);
  return out;
}

}  // namespace clifflab
