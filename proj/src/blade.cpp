#include "clifflab/blade.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifflab {

AlgebraSignature::AlgebraSignature(int r) : rank(r) {
  if (r < 1 || r > kMaxAlgebraRank)
    throw std::domain_error("algebra rank must lie in 1.." + std::to_string(kMaxAlgebraRank));
}

std::vector<int> indices_from_mask(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

std::vector<int> SignedBlade::indices() const { return indices_from_mask(mask); }

Mask mask_from_indices(const std::vector<int>& indices, const AlgebraSignature& sig) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > sig.rank)
      throw std::domain_error("generator index " + std::to_string(i) + " outside 1.." + std::to_string(sig.rank));
    const Mask bit = Mask{1} << (i - 1);
    if (m & bit) throw std::domain_error("repeated generator index " + std::to_string(i) + " in an index set");
    m |= bit;
  }
  return m;
}

SignedBlade blade_product(Mask s, Mask t, const AlgebraSignature& sig) {
  const Mask full = sig.full_mask();
  if ((s & ~full) != 0 || (t & ~full) != 0) throw std::domain_error("blade index outside the algebra rank");
  // Moving each factor of t left past the larger factors of s.
  int swaps = 0;
  for (Mask rest = t; rest != 0; rest &= rest - 1) {
    const int bit = __builtin_ctz(rest);
    const std::uint64_t above = ~((std::uint64_t{1} << (bit + 1)) - 1);
    swaps += __builtin_popcountll(static_cast<std::uint64_t>(s) & above);
  }
  swaps += grade(s & t);
  return SignedBlade{s ^ t, (swaps & 1) ? -1 : 1};
}

SignedBlade blade_product(const std::vector<int>& s, const std::vector<int>& t, const AlgebraSignature& sig) {
  // Index sets may arrive unsorted; canonicalize each factor first.
  auto canon = [&](const std::vector<int>& v) {
    const Mask m = mask_from_indices(v, sig);
    std::vector<int> seq = v;
    int inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
      for (std::size_t b = a + 1; b < seq.size(); ++b)
        if (seq[a] > seq[b]) ++inversions;
    return SignedBlade{m, (inversions & 1) ? -1 : 1};
  };
  const SignedBlade a = canon(s);
  const SignedBlade b = canon(t);
  SignedBlade p = blade_product(a.mask, b.mask, sig);
  p.sign *= a.sign * b.sign;
  return p;
}

CliffordElement CliffordElement::scalar(AlgebraSignature sig, const Rational& c) { return blade(sig, Mask{0}, c); }

CliffordElement CliffordElement::blade(AlgebraSignature sig, Mask m, const Rational& c) {
  if ((m & ~sig.full_mask()) != 0) throw std::domain_error("blade index outside the algebra rank");
  CliffordElement e(sig);
  e.add_term(m, c);
  return e;
}

CliffordElement CliffordElement::blade(AlgebraSignature sig, const std::vector<int>& indices, const Rational& c) {
  const auto b = blade_product(indices, {}, sig);
  return blade(sig, b.mask, b.sign < 0 ? -c : c);
}

CliffordElement CliffordElement::generator(AlgebraSignature sig, int i) { return blade(sig, std::vector<int>{i}); }

Rational CliffordElement::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CliffordElement::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return grade(t.first) % 2 == 0; });
}

bool CliffordElement::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return grade(t.first) % 2 == 1; });
}

void CliffordElement::add_term(Mask m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void CliffordElement::check_same(const CliffordElement& o) const {
  if (!(sig_ == o.sig_)) throw std::domain_error("Clifford elements of different rank");
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  a.check_same(b);
  CliffordElement r(a.sig_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const SignedBlade p = blade_product(ma, mb, a.sig_);
      const Rational c = ca * cb;
      r.add_term(p.mask, p.sign < 0 ? -c : c);
    }
  return r;
}

CliffordElement geometric_product(const CliffordElement& a, const CliffordElement& b) { return a * b; }

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Rational>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [m, c] : terms_) sorted.emplace_back(indices_from_mask(m), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::string out;
  for (const auto& [idx, c] : sorted) {
    if (!out.empty()) out += " + ";
    out += c.sign() < 0 ? "-" : "+";
    out += c.abs().str();
    out += "·e{";
    for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k]);
    out += "}";
  }
  return out;
}

CliffordElement volume_element(const AlgebraSignature& sig) { return CliffordElement::blade(sig, sig.full_mask()); }

int volume_square_sign(int r) { return ((r * (r + 1) / 2) % 2 == 0) ? 1 : -1; }

int volume_generator_parity(int r) { return (r % 2 == 1) ? 1 : -1; }

SignedBlade hodge_dual_vector(int i, const AlgebraSignature& sig) {
  if (i < 1 || i > sig.rank) throw std::domain_error("hodge_dual_vector: index outside 1..r");
  const Mask e = Mask{1} << (i - 1);
  const Mask rest = sig.full_mask() & ~e;
  // e_i * (s e_rest) = s * p e_full must equal +e_full, so s = p.
  const SignedBlade p = blade_product(e, rest, sig);
  return SignedBlade{rest, p.sign};
}

CliffordElement lambda2_embed(int i, int j, const AlgebraSignature& sig) {
  CliffordElement x = CliffordElement::generator(sig, i) * CliffordElement::generator(sig, j);
  if (i == j) x += CliffordElement::scalar(sig, Rational(1));
  return x;
}

CliffordElement lambda2_embed(const std::map<std::pair<int, int>, Rational>& form, const AlgebraSignature& sig) {
  CliffordElement x(sig);
  for (const auto& [ij, a] : form) x += lambda2_embed(ij.first, ij.second, sig) * a;
  return x;
}

}  // namespace clifflab
