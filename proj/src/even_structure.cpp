#include "clifflab/even_structure.hpp"

#include <functional>

#include "clifflab/signed_perm.hpp"

namespace clifflab {

namespace {

RatMatrix identity_like(std::size_t n) { return RatMatrix::identity(n); }

// Exact access to J(i, j) with a signed-permutation fast path.
class FamilyView {
 public:
  explicit FamilyView(const JFamily& f) : f_(f) {
    for (const auto& m : f.all_upper()) {
      auto p = SignedPerm::from_matrix(m);
      if (!p) {
        perms_.clear();
        return;
      }
      perms_.push_back(std::move(*p));
    }
    fast_ = true;
    id_ = SignedPerm::identity(f.n());
  }

  [[nodiscard]] bool fast() const noexcept { return fast_; }

  [[nodiscard]] SignedPerm perm(int i, int j) const {
    if (i == j) return -id_;
    if (i < j) return perms_[pair_index(f_.r(), i - 1, j - 1)];
    return -perms_[pair_index(f_.r(), j - 1, i - 1)];
  }

 private:
  const JFamily& f_;
  bool fast_ = false;
  std::vector<SignedPerm> perms_;
  SignedPerm id_;
};

Rational residual(const RatMatrix& a, const RatMatrix& b) { return max_abs(a - b); }

}  // namespace

EvenCliffordStructure structure_from_rep(const MatrixRep& rep) {
  EvenCliffordStructure s{j_family(rep), std::nullopt};
  if (rep.kind == RepKind::full) s.full_rep = rep;
  return s;
}

RatMatrix evaluate_even_blade(const JFamily& f, Mask blade) {
  const auto idx = indices_from_mask(blade);
  if (idx.size() % 2 != 0) throw ParityError("odd blade in an even Clifford structure");
  if (!idx.empty() && idx.back() > f.r()) throw std::domain_error("blade index outside the family rank");
  RatMatrix m = identity_like(f.n());
  for (std::size_t k = 0; k < idx.size(); k += 2) m = m * f.upper(idx[k], idx[k + 1]);
  return m;
}

VerificationReport verify_relations(const JFamily& f) {
  VerificationReport rep;
  rep.suite = "relations";
  const int r = f.r();
  const auto n = f.n();
  const FamilyView view(f);
  const RatMatrix id = identity_like(n);
  // Group 1 and the antisymmetry half of group 2 hold by the storage convention.
  rep.checks += static_cast<std::size_t>(r) * r;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      const RatMatrix& J = f.upper(i, j);
      const RatMatrix Jt = J.transpose();
      rep.check(Jt == -J, "skew", {i, j}, residual(Jt, -J));
      const bool ok = view.fast() ? view.perm(i, j) * view.perm(i, j) == view.perm(i, i)
                                  : J * J == -id;
      rep.check(ok, "J_ij^2=-I", {i, j}, ok ? Rational(0) : residual(J * J, -id));
    }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k) {
        if (i == j || j == k || i == k) continue;
        bool ok;
        if (view.fast()) ok = view.perm(i, j) * view.perm(i, k) == view.perm(j, k);
        else ok = f.J(i, j) * f.J(i, k) == f.J(j, k);
        rep.check(ok, "J_ij∘J_ik=J_jk", {i, j, k}, ok ? Rational(0) : residual(f.J(i, j) * f.J(i, k), f.J(j, k)));
      }
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = i + 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l) {
          if (k == j || l == j) continue;
          bool ok;
          if (view.fast()) ok = view.perm(i, j) * view.perm(k, l) == view.perm(k, l) * view.perm(i, j);
          else ok = f.upper(i, j) * f.upper(k, l) == f.upper(k, l) * f.upper(i, j);
          rep.check(ok, "J_ij∘J_kl=J_kl∘J_ij", {i, j, k, l},
                    ok ? Rational(0) : max_abs(commutator(f.upper(i, j), f.upper(k, l))));
        }
  return rep;
}

VerificationReport verify_relations_on(const JFamily& f, const RatMatrix& P) {
  VerificationReport rep;
  rep.suite = "relations_on_projector";
  const int r = f.r();
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      const RatMatrix& J = f.upper(i, j);
      rep.check(J.transpose() == -J, "skew", {i, j}, residual(J.transpose(), -J));
      const RatMatrix lhs = J * J * P;
      rep.check(lhs == -P, "J_ij^2=-I", {i, j}, residual(lhs, -P));
    }
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k) {
        if (i == j || j == k || i == k) continue;
        const RatMatrix lhs = f.J(i, j) * f.J(i, k) * P;
        const RatMatrix rhs = f.J(j, k) * P;
        rep.check(lhs == rhs, "J_ij∘J_ik=J_jk", {i, j, k}, residual(lhs, rhs));
      }
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = i + 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l) {
          if (k == j || l == j) continue;
          const RatMatrix c = commutator(f.upper(i, j), f.upper(k, l)) * P;
          rep.check(c.is_zero(), "J_ij∘J_kl=J_kl∘J_ij", {i, j, k, l}, max_abs(c));
        }
  return rep;
}

VerificationReport verify_orthogonality(const JFamily& f) {
  VerificationReport rep;
  rep.suite = "orthogonality";
  const int r = f.r();
  const FamilyView view(f);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) pairs.emplace_back(i, j);
  auto pairing = [&](std::pair<int, int> a, std::pair<int, int> b) -> Rational {
    if (view.fast()) return Rational(view.perm(a.first, a.second).trace_product(view.perm(b.first, b.second)));
    return trace_product(f.upper(a.first, a.second), f.upper(b.first, b.second));
  };
  // <J_ii, J_kl> = -trace(J_kl).
  for (const auto& p : pairs) {
    const Rational t = f.upper(p.first, p.second).trace();
    rep.check(t.is_zero(), "<J_ii,J_kl>=0", {p.first, p.second}, t.abs());
  }
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      const bool disjoint = i != k && i != l && j != k && j != l;
      const Rational t = pairing(pairs[a], pairs[b]);
      if (r == 4 && disjoint) {
        rep.value("trace(J_" + std::to_string(i) + std::to_string(j) + "∘J_" + std::to_string(k) +
                      std::to_string(l) + ")",
                  t.str());
        continue;
      }
      rep.check(t.is_zero(), "<J_ij,J_kl>=0", {i, j, k, l}, t.abs());
    }
  if (r == 4) rep.notes.push_back("rank 4: disjoint pairings reported, not asserted");
  return rep;
}

VolumeInfo volume_endomorphism(const EvenCliffordStructure& s) {
  const int r = s.r();
  const auto n = s.n();
  const AlgebraSignature sig(r);
  VolumeInfo info;
  info.expected_square_sign = volume_square_sign(r);
  if (r % 2 == 0) {
    info.v = evaluate_even_blade(s.J, sig.full_mask());
  } else if (s.full_rep) {
    info.v = to_rational(evaluate_blade(*s.full_rep, sig.full_mask()));
  } else if (r % 4 == 3) {
    const auto h = extend_hodge(s);
    info.v = identity_like(n);
    for (const auto& k : h.K) info.v = info.v * k;
  } else {
    throw std::domain_error("volume of an odd-rank structure needs full Clifford generators");
  }
  const RatMatrix sq = info.v * info.v;
  const RatMatrix id = identity_like(n);
  if (sq == id) info.square_sign = 1;
  else if (sq == -id) info.square_sign = -1;
  info.commutes_with_family = true;
  for (const auto& J : s.J.all_upper())
    if (!commutator(info.v, J).is_zero()) info.commutes_with_family = false;
  if (s.full_rep) {
    bool all_commute = true, all_anti = true;
    for (const auto& g : s.full_rep->generators) {
      const RatMatrix G = to_rational(g);
      const RatMatrix vg = info.v * G, gv = G * info.v;
      if (!(vg == gv)) all_commute = false;
      if (!(vg == -gv)) all_anti = false;
    }
    info.generator_parity = all_commute ? 1 : (all_anti ? -1 : 0);
  }
  if (info.square_sign == 1) {
    const Rational t = info.v.trace();
    const Rational nn(static_cast<std::int64_t>(n));
    info.involution_split = std::make_pair(((nn + t) / Rational(2)).num(), ((nn - t) / Rational(2)).num());
  }
  return info;
}

SplitResult split_rank4(const JFamily& f) {
  if (f.r() != 4) throw std::domain_error("split_rank4 requires a rank 4 structure");
  const auto n = f.n();
  const RatMatrix id = identity_like(n);
  const RatMatrix v = f.upper(1, 2) * f.upper(3, 4);
  if (!(v * v == id)) throw std::domain_error("volume endomorphism is not an involution");
  const Rational half(1, 2);
  SplitResult out;
  out.report.suite = "split_rank4";
  auto& rep = out.report;
  out.P_plus = (id + v) * half;
  out.P_minus = (id - v) * half;
  rep.check(out.P_plus + out.P_minus == id, "P+ + P- = I", {}, residual(out.P_plus + out.P_minus, id));
  rep.check(out.P_plus * out.P_plus == out.P_plus, "P+^2 = P+", {}, Rational(0));
  rep.check(out.P_minus * out.P_minus == out.P_minus, "P-^2 = P-", {}, Rational(0));
  rep.check(out.P_plus - out.P_minus == v, "v = P+ - P-", {}, Rational(0));
  rep.value("rank P+", out.P_plus.trace().str());
  rep.value("rank P-", out.P_minus.trace().str());

  auto J = [&](int i, int j) { return f.J(i, j); };
  for (int s : {1, -1}) {
    const Rational sg(s);
    // Frames e^pm_1 = (e1^e2 pm e3^e4)/2, e^pm_2 = (e1^e3 mp e2^e4)/2, e^pm_3 = (e1^e4 pm e2^e3)/2.
    std::vector<RatMatrix> e = {(J(1, 2) + J(3, 4) * sg) * half, (J(1, 3) - J(2, 4) * sg) * half,
                                (J(1, 4) + J(2, 3) * sg) * half};
    const RatMatrix p12 = e[0] * e[1], p31 = e[2] * e[0], p23 = e[1] * e[2];
    // Stated closed forms, signs verbatim.
    const RatMatrix t12 = (J(1, 4) + J(2, 3) * sg) * (sg * half);
    const RatMatrix t31 = (J(1, 3) - J(2, 4) * sg) * (sg * half);
    const RatMatrix t23 = (J(1, 2) + J(3, 4) * sg) * (sg * half);
    const std::string tag = s > 0 ? "+" : "-";
    rep.check(p12 == t12, "J" + tag + "_12 closed form", {1, 2}, residual(p12, t12));
    rep.check(p31 == t31, "J" + tag + "_31 closed form", {3, 1}, residual(p31, t31));
    rep.check(p23 == t23, "J" + tag + "_23 closed form", {2, 3}, residual(p23, t23));
    JFamily fam(n, 3, {t12, -t31, t23});
    const RatMatrix& own = s > 0 ? out.P_plus : out.P_minus;
    const RatMatrix& other = s > 0 ? out.P_minus : out.P_plus;
    for (const auto& m : fam.all_upper()) {
      const RatMatrix k = m * own;
      rep.check(k.is_zero(), "J" + tag + " vanishes on M" + tag, {}, max_abs(k));
    }
    VerificationReport q = verify_relations_on(fam, other);
    for (auto& fl : q.failures) fl.relation = "J" + tag + " quaternionic: " + fl.relation;
    rep.merge(q);
    (s > 0 ? out.frame_plus : out.frame_minus) = e;
    (s > 0 ? out.J_plus : out.J_minus) = std::move(fam);
  }
  for (const auto& a : out.J_plus.all_upper())
    for (const auto& b : out.J_minus.all_upper()) {
      const RatMatrix c = commutator(a, b);
      rep.check(c.is_zero(), "[J+,J-]=0", {}, max_abs(c));
    }
  return out;
}

HodgeExtension extend_hodge(const EvenCliffordStructure& s) {
  const int r = s.r();
  if (r % 4 != 3 || r > 15)
    throw UnsupportedRank("Hodge extension is defined for r in {3, 7, 11, 15}, got r = " + std::to_string(r));
  const auto rel = verify_relations(s.J);
  if (!rel.passed()) throw std::domain_error("Hodge extension needs a family satisfying the relations");
  const AlgebraSignature sig(r);
  HodgeExtension h;
  h.report.suite = "hodge";
  for (int i = 1; i <= r; ++i) {
    const SignedBlade star = hodge_dual_vector(i, sig);
    RatMatrix k = evaluate_even_blade(s.J, star.mask);
    if (star.sign < 0) k = -k;
    h.K.push_back(std::move(k));
  }
  const auto n = s.n();
  const RatMatrix id = identity_like(n);
  for (int i = 0; i < r; ++i) {
    const RatMatrix& Ki = h.K[i];
    h.report.check(Ki.transpose() == -Ki, "K_i skew", {i + 1}, residual(Ki.transpose(), -Ki));
    h.report.check(Ki * Ki == -id, "K_i^2=-I", {i + 1}, residual(Ki * Ki, -id));
    for (int j = i + 1; j < r; ++j) {
      const RatMatrix a = Ki * h.K[j] + h.K[j] * Ki;
      h.report.check(a.is_zero(), "K_iK_j+K_jK_i=0", {i + 1, j + 1}, max_abs(a));
      const RatMatrix p = Ki * h.K[j];
      h.report.check(p == s.J.upper(i + 1, j + 1), "K_iK_j=J_ij", {i + 1, j + 1}, residual(p, s.J.upper(i + 1, j + 1)));
    }
  }
  if (s.full_rep) {
    const RatMatrix v = to_rational(evaluate_blade(*s.full_rep, sig.full_mask()));
    for (int i = 0; i < r; ++i) {
      const RatMatrix c = commutator(h.K[i], v);
      h.report.check(c.is_zero(), "[K_i,v]=0", {i + 1}, max_abs(c));
    }
  }
  return h;
}

RatMatrix Lambda2Map::operator()(int a, int b) const {
  if (a < 1 || b < 1 || a > k || b > k) throw std::out_of_range("Lambda2Map index out of range");
  if (a == b) return RatMatrix(n, n);
  if (a < b) return images[pair_index(k, a - 1, b - 1)];
  return -images[pair_index(k, b - 1, a - 1)];
}

RatMatrix Lambda2Map::apply(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  RatMatrix out(n, n);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const Rational c = u[a] * v[b] - u[b] * v[a];
      if (!c.is_zero()) out += images[pair_index(k, a, b)] * c;
    }
  return out;
}

Lambda2Map lambda2_restriction(const JFamily& f) { return Lambda2Map{f.r(), f.n(), f.all_upper()}; }

RatMatrix EvenMorphism::operator()(const CliffordElement& x) const {
  if (x.rank() != k) throw std::domain_error("element rank does not match the morphism");
  if (!x.is_even()) throw ParityError("odd element passed to an even Clifford morphism");
  RatMatrix out(n, n);
  for (const auto& [m, c] : x.terms()) out += images.at(m) * c;
  return out;
}

CliffordElement random_element(Rng& rng, const AlgebraSignature& sig, int terms, bool even_only) {
  CliffordElement x(sig);
  const auto top = static_cast<std::int64_t>(sig.full_mask());
  for (int t = 0; t < terms; ++t) {
    auto m = static_cast<Mask>(rng.uniform(0, top));
    if (even_only && grade(m) % 2 == 1) m ^= 1u;
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-3, 3);
    x.add_term(m, Rational(c));
  }
  return x;
}

namespace {

std::vector<Rational> unit_vector(int k, int i) {
  std::vector<Rational> e(k);
  e[i - 1] = Rational(1);
  return e;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

UniversalExtensionResult universal_extension(const Lambda2Map& phi, const UniversalExtensionOptions& opt) {
  UniversalExtensionResult res;
  res.report.suite = "universality";
  const int k = phi.k;
  const auto n = phi.n;
  const RatMatrix id = identity_like(n);
  res.morphism.k = k;
  res.morphism.n = n;
  if (k < 2) {
    // Lambda^2 vanishes: only the unit morphism exists.
    res.accepted = true;
    res.morphism.images.emplace(Mask{0}, id);
    res.report.notes.push_back("k < 2: unit morphism");
    return res;
  }
  if (k > 12) throw UnsupportedRank("universal_extension materializes 2^(k-1) blades; k <= 12 supported");
  if (phi.images.size() != static_cast<std::size_t>(k) * (k - 1) / 2)
    throw std::invalid_argument("Lambda2Map needs k(k-1)/2 images");

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int l = 1; l <= k; ++l) {
        if (j == i || l == i) continue;
        const RatMatrix lhs = phi(i, j) * phi(i, l);
        const RatMatrix rhs = j == l ? phi(j, l) - id : phi(j, l);
        const bool ok = lhs == rhs;
        res.report.check(ok, "e51", {i, j, l}, ok ? Rational(0) : residual(lhs, rhs));
        if (!ok && !res.witness)
          res.witness = ExtensionWitness{unit_vector(k, i), unit_vector(k, j), unit_vector(k, l), "e51",
                                         residual(lhs, rhs)};
      }
  if (res.witness) return res;

  Rng rng(opt.seed);
  auto random_vector = [&](bool nonzero) {
    std::vector<Rational> x(k);
    do {
      for (auto& c : x) c = Rational(rng.uniform(-3, 3));
    } while (nonzero && dot(x, x).is_zero());
    return x;
  };
  auto sigma = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return phi.apply(a, b) - id * dot(a, b);
  };
  for (int t = 0; t < opt.random_triples; ++t) {
    const auto u = random_vector(true), v = random_vector(false), w = random_vector(false);
    const RatMatrix s1 = sigma(u, v) + sigma(v, u);
    const RatMatrix s1r = id * (Rational(-2) * dot(u, v));
    res.report.check(s1 == s1r, "s1", {t}, residual(s1, s1r));
    const RatMatrix lhs = sigma(v, u) * sigma(u, w);
    const RatMatrix rhs = sigma(v, w) * (-dot(u, u));
    const bool ok = lhs == rhs;
    res.report.check(ok, "s2", {t}, ok ? Rational(0) : residual(lhs, rhs));
    if (!ok && !res.witness) res.witness = ExtensionWitness{u, v, w, "s2", residual(lhs, rhs)};
  }
  if (res.witness) return res;

  const AlgebraSignature sig(k);
  for (Mask m = 0; m <= sig.full_mask(); ++m) {
    if (grade(m) % 2 != 0) continue;
    const auto idx = indices_from_mask(m);
    RatMatrix img = id;
    for (std::size_t a = 0; a < idx.size(); a += 2) img = img * phi(idx[a], idx[a + 1]);
    res.morphism.images.emplace(m, std::move(img));
    if (m == sig.full_mask()) break;
  }
  for (int t = 0; t < opt.multiplicativity_pairs; ++t) {
    const auto a = random_element(rng, sig, 3, true);
    const auto b = random_element(rng, sig, 3, true);
    const RatMatrix lhs = res.morphism(a) * res.morphism(b);
    const RatMatrix rhs = res.morphism(a * b);
    ++res.report.checks;
    if (!(lhs == rhs))
      throw std::logic_error("internal invariant violation: accepted map is not multiplicative");
  }
  res.accepted = true;
  return res;
}

}  // namespace clifflab
