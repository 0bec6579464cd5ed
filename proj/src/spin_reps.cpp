#include "clifflab/spin_reps.hpp"

#include <array>
#include <cstdlib>
#include <string_view>

#include "clifflab/signed_perm.hpp"

namespace clifflab {

namespace {

IntMatrix factor(char c) {
  IntMatrix m(2, 2);
  switch (c) {
    case '1': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'E': m(0, 1) = -1; m(1, 0) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: throw std::logic_error("unknown Kronecker factor");
  }
  return m;
}

IntMatrix kron_word(std::string_view word) {
  IntMatrix m = IntMatrix::identity(1);
  for (char c : word) m = kron(m, factor(c));
  return m;
}

// Irreducible bases for dimensions 2, 4, 8, 16. Smaller ranks of the same
// dimension take a prefix: the words of each set are skew, square to -1 and
// pairwise anticommute.
constexpr std::array<std::string_view, 1> kDim2 = {"E"};
constexpr std::array<std::string_view, 3> kDim4 = {"1E", "EX", "EZ"};
constexpr std::array<std::string_view, 7> kDim8 = {"11E", "1EX", "E1Z", "EXX", "EZX", "XEZ", "ZEZ"};
constexpr std::array<std::string_view, 8> kDim16 = {"111E", "11EX", "1E1Z", "1EXX",
                                                    "1EZX", "1XEZ", "XZEZ", "ZZEZ"};

std::vector<IntMatrix> base_generators(int r) {
  auto take = [r](const auto& words) {
    std::vector<IntMatrix> g;
    for (int i = 0; i < r; ++i) g.push_back(kron_word(words[i]));
    return g;
  };
  if (r == 1) return take(kDim2);
  if (r <= 3) return take(kDim4);
  if (r <= 7) return take(kDim8);
  return take(kDim16);
}

// Irreducible generators for any r >= 1, via the period-8 step
// Gamma_a (x) I and omega_8 (x) G_i(r - 8).
std::vector<IntMatrix> irreducible_generators(int r) {
  if (r <= 8) return base_generators(r);
  const auto gamma = base_generators(8);
  IntMatrix omega8 = gamma[0];
  for (int a = 1; a < 8; ++a) omega8 = omega8 * gamma[a];
  const auto inner = irreducible_generators(r - 8);
  const auto id = IntMatrix::identity(inner.front().rows());
  std::vector<IntMatrix> g;
  for (const auto& ga : gamma) g.push_back(kron(ga, id));
  for (const auto& gi : inner) g.push_back(kron(omega8, gi));
  return g;
}

void check_rank(int r, int min_rank) {
  if (r < min_rank) throw std::domain_error("rank " + std::to_string(r) + " below the minimum " + std::to_string(min_rank));
  if (r > max_supported_rank())
    throw UnsupportedRank("rank " + std::to_string(r) + " exceeds the supported maximum " +
                          std::to_string(max_supported_rank()) + " (raise CLIFFLAB_MAX_RANK, at most " +
                          std::to_string(kHardRankCeiling) + ")");
}

IntMatrix copies_of(const IntMatrix& g, int copies) { return kron(IntMatrix::identity(copies), g); }

}  // namespace

int max_supported_rank() {
  const char* env = std::getenv("CLIFFLAB_MAX_RANK");
  if (env == nullptr || *env == '\0') return 16;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 16;
  return static_cast<int>(std::min<long>(v, kHardRankCeiling));
}

std::int64_t n_irr(int r) {
  static constexpr std::array<std::int64_t, 8> kBase = {2, 4, 4, 8, 8, 8, 8, 16};
  if (r < 1) throw std::domain_error("n_irr requires r >= 1");
  std::int64_t scale = 1;
  while (r > 8) {
    if (scale > (std::int64_t{1} << 55)) throw std::overflow_error("n_irr out of range");
    scale *= 16;
    r -= 8;
  }
  return kBase[r - 1] * scale;
}

std::int64_t n0(int r) {
  if (r < 2) throw std::domain_error("n0 requires r >= 2");
  return n_irr(r - 1);
}

std::string to_string(RepKind k) { return k == RepKind::full ? "full" : "even"; }

RepKind rep_kind_from_string(const std::string& s) {
  if (s == "full") return RepKind::full;
  if (s == "even") return RepKind::even;
  throw std::invalid_argument("representation kind must be 'full' or 'even', got '" + s + "'");
}

MatrixRep build_clifford_rep(int r, int copies) {
  check_rank(r, 1);
  if (copies < 1) throw std::domain_error("copies must be >= 1");
  MatrixRep rep;
  rep.rank = r;
  rep.kind = RepKind::full;
  for (const auto& g : irreducible_generators(r)) rep.generators.push_back(copies_of(g, copies));
  rep.dim = rep.generators.front().rows();
  return rep;
}

MatrixRep build_even_rep(int r, int m_plus, int m_minus) {
  check_rank(r, 2);
  if (m_plus < 0 || m_minus < 0 || m_plus + m_minus < 1)
    throw std::domain_error("multiplicities must be non-negative with a positive sum");
  const bool split = r % 4 == 0;
  if (!split && m_plus != m_minus)
    throw std::domain_error("rank " + std::to_string(r) +
                            " has a single irreducible Cl^0 class; multiplicities must agree");
  const auto base = irreducible_generators(r - 1);
  MatrixRep rep;
  rep.rank = r;
  rep.kind = RepKind::even;
  if (!split) {
    for (const auto& h : base) rep.generators.push_back(copies_of(h, m_plus));
    rep.dim = rep.generators.front().rows();
    return rep;
  }
  // Volume of Cl^0_r on the base block: J_12 J_34 ... with J_1b = H_{b-1},
  // J_ab = H_{a-1} H_{b-1}. It is +I or -I; negating every H flips it.
  IntMatrix v = base[0];
  for (int a = 3; a < r; a += 2) v = v * (base[a - 2] * base[a - 1]);
  const auto n = base.front().rows();
  int base_sign = 0;
  if (v == IntMatrix::identity(n)) base_sign = 1;
  else if (v == IntMatrix(n, n) - IntMatrix::identity(n)) base_sign = -1;
  else throw std::logic_error("volume of an irreducible Cl^0 block is not +-I");
  for (const auto& h : base) {
    const IntMatrix plus = base_sign > 0 ? h : -h;
    const IntMatrix minus = -plus;
    IntMatrix g;
    if (m_plus > 0 && m_minus > 0) g = direct_sum(copies_of(plus, m_plus), copies_of(minus, m_minus));
    else if (m_plus > 0) g = copies_of(plus, m_plus);
    else g = copies_of(minus, m_minus);
    rep.generators.push_back(std::move(g));
  }
  rep.dim = rep.generators.front().rows();
  rep.volume_split = std::make_pair(m_plus, m_minus);
  return rep;
}

MatrixRep build_even_rep(int r, int copies) {
  return build_even_rep(r, copies, copies);
}

std::optional<std::string> check_rep_invariants(const MatrixRep& rep) {
  const auto n = rep.dim;
  std::vector<SignedPerm> perms;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const auto& g = rep.generators[i];
    if (g.rows() != n || g.cols() != n) return "generator " + std::to_string(i + 1) + " has the wrong size";
    if (!is_signed_permutation(g)) return "generator " + std::to_string(i + 1) + " is not a signed permutation";
    if (!(g.transpose() == -g)) return "generator " + std::to_string(i + 1) + " is not skew";
    perms.push_back(*SignedPerm::from_matrix(g));
  }
  const auto id = SignedPerm::identity(n);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (!(perms[i] * perms[i] == -id)) return "generator " + std::to_string(i + 1) + " does not square to -I";
    for (std::size_t j = i + 1; j < perms.size(); ++j)
      if (!(perms[i] * perms[j] == -(perms[j] * perms[i])))
        return "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not anticommute";
  }
  return std::nullopt;
}

IntMatrix evaluate_blade(const MatrixRep& rep, Mask blade) {
  const AlgebraSignature sig(rep.rank);
  if ((blade & ~sig.full_mask()) != 0) throw std::domain_error("blade index outside the representation rank");
  const auto idx = indices_from_mask(blade);
  IntMatrix m = IntMatrix::identity(rep.dim);
  if (rep.kind == RepKind::full) {
    for (int i : idx) m = m * rep.generators[i - 1];
    return m;
  }
  if (idx.size() % 2 != 0) throw ParityError("odd blade evaluated in a representation of the even Clifford algebra");
  for (std::size_t k = 0; k < idx.size(); k += 2) {
    const int a = idx[k];
    const int b = idx[k + 1];
    if (a == 1) m = m * rep.generators[b - 2];
    else m = m * (rep.generators[a - 2] * rep.generators[b - 2]);
  }
  return m;
}

RatMatrix evaluate(const MatrixRep& rep, const CliffordElement& x) {
  if (x.rank() != rep.rank) throw std::domain_error("element rank does not match the representation");
  if (rep.kind == RepKind::even && !x.is_even())
    throw ParityError("odd element evaluated in a representation of the even Clifford algebra");
  RatMatrix out(rep.dim, rep.dim);
  for (const auto& [m, c] : x.terms()) {
    const IntMatrix b = evaluate_blade(rep, m);
    for (std::size_t i = 0; i < rep.dim; ++i)
      for (std::size_t j = 0; j < rep.dim; ++j)
        if (b(i, j) != 0) out(i, j) += c * Rational(b(i, j));
  }
  return out;
}

JFamily::JFamily(std::size_t n, int r, std::vector<RatMatrix> upper) : n_(n), r_(r), upper_(std::move(upper)) {
  if (r < 1) throw std::domain_error("family rank must be positive");
  if (upper_.size() != static_cast<std::size_t>(r) * (r - 1) / 2)
    throw std::invalid_argument("family needs r(r-1)/2 matrices");
  for (const auto& m : upper_)
    if (m.rows() != n || m.cols() != n) throw std::domain_error("family matrix has the wrong dimension");
}

std::size_t JFamily::slot(int i, int j) const {
  if (i < 1 || j > r_ || i >= j) throw std::out_of_range("family index pair out of range");
  return pair_index(static_cast<std::size_t>(r_), static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

const RatMatrix& JFamily::upper(int i, int j) const { return upper_[slot(i, j)]; }

void JFamily::set_upper(int i, int j, RatMatrix m) {
  if (m.rows() != n_ || m.cols() != n_) throw std::domain_error("family matrix has the wrong dimension");
  upper_[slot(i, j)] = std::move(m);
}

RatMatrix JFamily::J(int i, int j) const {
  if (i < 1 || j < 1 || i > r_ || j > r_) throw std::out_of_range("family index out of range");
  if (i == j) return -RatMatrix::identity(n_);
  if (i < j) return upper(i, j);
  return -upper(j, i);
}

JFamily j_family(const MatrixRep& rep) {
  std::vector<RatMatrix> upper;
  for (int i = 1; i <= rep.rank; ++i)
    for (int j = i + 1; j <= rep.rank; ++j) {
      const Mask m = (Mask{1} << (i - 1)) | (Mask{1} << (j - 1));
      upper.push_back(to_rational(evaluate_blade(rep, m)));
    }
  return JFamily(rep.dim, rep.rank, std::move(upper));
}

JFamily restrict_family(const JFamily& f, std::size_t begin, std::size_t size) {
  std::vector<RatMatrix> upper;
  for (const auto& m : f.all_upper()) upper.push_back(principal_block(m, begin, size));
  return JFamily(size, f.r(), std::move(upper));
}

}  // namespace clifflab
