#include "clifflab/classify.hpp"

#include <stdexcept>

#include "clifflab/curvature.hpp"
#include "clifflab/linalg.hpp"
#include "clifflab/spin_reps.hpp"

namespace clifflab {

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::fails_condition_a: return "fails_condition_a";
    case VerdictReason::fails_divisibility_b: return "fails_divisibility_b";
    case VerdictReason::needs_equivariance_argument: return "needs_equivariance_argument";
    case VerdictReason::admissible: return "admissible";
  }
  return "unknown";
}

namespace {

std::int64_t P(const Params& p, const char* name) { return p.at(name); }

std::optional<int> when(bool cond, int r) { return cond ? std::optional<int>(r) : std::nullopt; }

std::vector<SymmetricSpaceCandidate> build_candidates() {
  std::vector<SymmetricSpaceCandidate> c;
  c.push_back({1, "case1", "SU(n)/SO(n)", "(n-1)(n+2)/2", {"n"}, {2},
               [](const Params& p) { return (P(p, "n") - 1) * (P(p, "n") + 2) / 2; },
               [](const Params& p) { return when(P(p, "n") >= 5, static_cast<int>(P(p, "n"))); }});
  // sp(n) has an so(r) summand with r >= 5 only for sp(2) = so(5).
  c.push_back({2, "case2", "SU(2n)/Sp(n)", "(n-1)(2n+1)", {"n"}, {1},
               [](const Params& p) { return (P(p, "n") - 1) * (2 * P(p, "n") + 1); },
               [](const Params& p) { return when(P(p, "n") == 2, 5); }});
  c.push_back({3, "case3", "SU(p+q)/S(U(p)×U(q))", "2pq", {"p", "q"}, {1, 1},
               [](const Params& p) { return 2 * P(p, "p") * P(p, "q"); },
               [](const Params& p) { return when(P(p, "p") == 4 || P(p, "q") == 4, 6); }});
  c.push_back({4, "case4", "SO(p+q)/SO(p)×SO(q)", "pq", {"p", "q"}, {1, 1},
               [](const Params& p) { return P(p, "p") * P(p, "q"); },
               [](const Params& p) -> std::optional<int> {
                 if (P(p, "p") >= 5) return static_cast<int>(P(p, "p"));
                 if (P(p, "q") >= 5) return static_cast<int>(P(p, "q"));
                 return std::nullopt;
               }});
  c.push_back({5, "case5", "SO(2n)/U(n)", "n(n-1)", {"n"}, {2},
               [](const Params& p) { return P(p, "n") * (P(p, "n") - 1); },
               [](const Params& p) { return when(P(p, "n") == 4, 6); }});
  c.push_back({6, "case6", "Sp(n)/U(n)", "n(n+1)", {"n"}, {1},
               [](const Params& p) { return P(p, "n") * (P(p, "n") + 1); },
               [](const Params& p) { return when(P(p, "n") == 4, 6); }});
  c.push_back({7, "case7", "Sp(p+q)/Sp(p)×Sp(q)", "4pq", {"p", "q"}, {1, 1},
               [](const Params& p) { return 4 * P(p, "p") * P(p, "q"); },
               [](const Params& p) { return when(P(p, "p") == 2 || P(p, "q") == 2, 5); }});
  struct Ex {
    const char* key;
    const char* label;
    std::int64_t dim;
    int r;
  };
  for (const Ex& e : {Ex{"case8-F4", "F4/Spin(9)", 16, 9}, Ex{"case8-E6", "E6/Spin(10)·U(1)", 32, 10},
                      Ex{"case8-E7", "E7/Spin(12)·SU(2)", 64, 12}, Ex{"case8-E8", "E8/Spin⁺(16)", 128, 16}}) {
    const std::int64_t d = e.dim;
    const int r = e.r;
    c.push_back({8, e.key, e.label, std::to_string(d), {}, {}, [d](const Params&) { return d; },
                 [r](const Params&) { return std::optional<int>(r); }});
  }
  c.push_back({9, "case9-SU4", "SU(4)×SU(4)/SU(4)", "15", {}, {}, [](const Params&) { return std::int64_t{15}; },
               [](const Params&) { return std::optional<int>(6); }});
  c.push_back({9, "case9-SO", "SO(n)×SO(n)/SO(n)", "n(n-1)/2", {"n"}, {3},
               [](const Params& p) { return P(p, "n") * (P(p, "n") - 1) / 2; },
               [](const Params& p) { return when(P(p, "n") >= 5, static_cast<int>(P(p, "n"))); }});
  return c;
}

}  // namespace

const std::vector<SymmetricSpaceCandidate>& candidates() {
  static const std::vector<SymmetricSpaceCandidate> all = build_candidates();
  return all;
}

const SymmetricSpaceCandidate& candidate(const std::string& key) {
  for (const auto& c : candidates())
    if (c.key == key) return c;
  throw std::invalid_argument("unknown candidate '" + key + "'");
}

Verdict check_conditions(const SymmetricSpaceCandidate& c, const Params& params) {
  for (std::size_t i = 0; i < c.param_names.size(); ++i) {
    const auto it = params.find(c.param_names[i]);
    if (it == params.end()) throw std::invalid_argument("missing parameter '" + c.param_names[i] + "' for " + c.key);
    if (it->second < c.param_min[i])
      throw std::invalid_argument("parameter '" + c.param_names[i] + "' below its minimum " +
                                  std::to_string(c.param_min[i]) + " for " + c.key);
  }
  Verdict v;
  v.candidate = c.key;
  v.witness = params;
  v.dim = c.dim(params);
  v.r = c.rank(params);
  if (!v.r) {
    v.reason = VerdictReason::fails_condition_a;
    return v;
  }
  v.n0 = n0(*v.r);
  if (v.dim % *v.n0 != 0) {
    v.reason = VerdictReason::fails_divisibility_b;
    return v;
  }
  if (c.case_id == 4 && *v.r != 8) {
    v.reason = VerdictReason::needs_equivariance_argument;
    return v;
  }
  v.reason = VerdictReason::admissible;
  v.admissible = true;
  return v;
}

std::vector<Verdict> scan(const SymmetricSpaceCandidate& c, const ScanBounds& bounds) {
  std::vector<Verdict> out;
  Params p;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == c.param_names.size()) {
      const auto r = c.rank(p);
      if (r && *r > bounds.max_rank) return;
      out.push_back(check_conditions(c, p));
      return;
    }
    for (std::int64_t v = c.param_min[i]; v <= bounds.max_param; ++v) {
      p[c.param_names[i]] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<Verdict> first_condition_a_witness(const SymmetricSpaceCandidate& c, const ScanBounds& bounds) {
  for (auto& v : scan(c, bounds))
    if (v.reason != VerdictReason::fails_condition_a) return v;
  return std::nullopt;
}

EquivarianceResult case4_equivariance(int p, int q) {
  if (p < 3 || q < 1 || p * q > 16) throw std::invalid_argument("case 4 equivariance is limited to small p, q");
  EquivarianceResult res;
  res.p = p;
  res.q = q;
  res.report.suite = "case4-equivariance";
  const auto up = static_cast<std::size_t>(p);
  const auto D = static_cast<std::size_t>(p * q);
  const std::size_t K = skew_dim(up);
  const RatMatrix Iq = RatMatrix::identity(static_cast<std::size_t>(q));
  std::vector<RatMatrix> basis, rho;
  for (std::size_t a = 0; a < up; ++a)
    for (std::size_t b = a + 1; b < up; ++b) {
      basis.push_back(elementary_skew(up, a, b));
      rho.push_back(kron(basis.back(), Iq));
    }
  auto var = [&](std::size_t k, std::size_t s, std::size_t t) { return (k * D + s) * D + t; };
  res.unknowns = K * D * D;

  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      const auto c = skew_coords(commutator(basis[i], basis[k]));
      const RatMatrix& X = rho[i];
      for (std::size_t s = 0; s < D; ++s)
        for (std::size_t t = 0; t < D; ++t) {
          SparseRow row;
          auto add = [&row](std::size_t col, const Rational& v) {
            auto& e = row[col];
            e += v;
            if (e.is_zero()) row.erase(col);
          };
          for (std::size_t u = 0; u < D; ++u) {
            if (!X(s, u).is_zero()) add(var(k, u, t), X(s, u));
            if (!X(u, t).is_zero()) add(var(k, s, u), -X(u, t));
          }
          for (std::size_t m = 0; m < K; ++m)
            if (!c[m].is_zero()) add(var(m, s, t), -c[m]);
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }
  res.equations = rows.size();
  const auto sols = nullspace(std::move(rows), res.unknowns);
  res.solution_dim = sols.size();
  const auto expected = static_cast<std::size_t>(q * q);
  res.report.check(res.solution_dim == expected, "equivariant solutions = q^2", {p, q},
                   Rational(static_cast<std::int64_t>(res.solution_dim) - static_cast<std::int64_t>(expected)).abs());

  // phi(E_12) is the k = 0 block; it must be invertible for phi(E_12)^2 = -1.
  bool all_kill = true;
  for (std::size_t n = 0; n < sols.size(); ++n)
    for (std::size_t f = 0; f < static_cast<std::size_t>(q); ++f) {
      const std::size_t col = 2 * static_cast<std::size_t>(q) + f;  // e_3 (x) f
      Rational worst;
      for (std::size_t s = 0; s < D; ++s)
        if (sols[n][var(0, s, col)].abs() > worst) worst = sols[n][var(0, s, col)].abs();
      res.report.check(worst.is_zero(), "phi(E_12)(e_3 x f)=0", {static_cast<int>(n), static_cast<int>(f)}, worst);
      if (!worst.is_zero()) all_kill = false;
    }
  res.clifford_compatible = !all_kill;
  res.report.value("unknowns", std::to_string(res.unknowns));
  res.report.value("equations", std::to_string(res.equations));
  res.report.value("solution_dim", std::to_string(res.solution_dim));
  res.report.value("clifford_compatible", res.clifford_compatible ? "true" : "false");
  return res;
}

Case1Result case1_n8(int r) {
  if (r < 5 || r > 8) throw std::invalid_argument("case1_n8 requires 5 <= r <= 8");
  Case1Result out;
  out.r = r;
  switch (r) {
    case 5:
      out.geometry = "quaternion-Kähler";
      out.table_label = "QK";
      out.structure_group = "Sp(2)·Sp(1)";
      out.expected_centralizer_dim = 3;
      break;
    case 6:
      out.geometry = "Kähler";
      out.table_label = "Kähler";
      out.structure_group = "U(4)";
      out.expected_centralizer_dim = 1;
      break;
    case 7:
      out.geometry = "holonomy contained in Spin(7)";
      out.table_label = "Spin(7) holonomy";
      out.structure_group = "Spin(7)";
      break;
    default:
      out.geometry = "no condition";
      out.table_label = "Riemannian";
      out.structure_group = "SO(8)";
      break;
  }
  const MatrixRep rep = r == 8 ? build_even_rep(8, 1, 0) : build_even_rep(r, 1);
  out.centralizer_dim = centralizer_dim(rep.dim, j_family(rep).all_upper());
  return out;
}

LedgerVerdict clifford_ledger(int r, std::int64_t n) {
  if (r < 1) throw std::invalid_argument("clifford_ledger requires r >= 1");
  if (n < 1) throw std::invalid_argument("clifford_ledger requires n >= 1");
  LedgerVerdict v;
  v.r = r;
  v.n = n;
  const std::int64_t N = n_irr(r);
  if (n % N != 0) {
    v.reason = "n is not a multiple of N(r) = " + std::to_string(N) + ", so Cl_r does not act on R^n";
    return v;
  }
  auto add = [&v](int c, std::string g) {
    v.cases.push_back(c);
    v.geometries.push_back(std::move(g));
  };
  if (r == 1) {
    add(1, "Kähler");
  } else if (r == 2) {
    if (n == 4)
      add(2, "Kähler");
    else
      add(2, "hyper-Kähler");
  } else if (r == 3) {
    add(3, "quaternion-Kähler");
  } else if (r <= 7) {
    if (n == 8) {
      static const char* geo[] = {"product of two Ricci-flat Kähler surfaces", "hyper-Kähler", "Kähler Ricci-flat",
                                  "Spin(7) holonomy"};
      add(r, geo[r - 4]);
    } else {
      v.reason = "only the flat case remains for n != 8";
    }
  } else if (r == 8) {
    v.reason = "the volume element is a parallel involution anticommuting with E, so TM splits and the structure is flat";
  } else {
    v.reason = "the irreducible Cl_r module has twice the dimension of the candidate tangent spaces";
  }
  v.flat_alternative = true;
  if (v.reason.empty()) v.reason = "admissible";
  return v;
}

}  // namespace clifflab
