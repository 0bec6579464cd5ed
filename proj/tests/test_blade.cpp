#include <algorithm>

#include "doctest.h"

#include "clifflab/blade.hpp"
#include "clifflab/even_structure.hpp"
#include "clifflab/rational.hpp"

using namespace clifflab;

namespace {

// Oracle: bubble-sort the concatenated index word, counting swaps, then
// cancel adjacent equal pairs with e_i e_i = -1.
std::pair<int, std::vector<int>> naive_product(std::vector<int> word) {
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j)
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
      }
  std::vector<int> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i + 1 < word.size() && word[i] == word[i + 1]) {
      sign = -sign;
      ++i;
    } else {
      out.push_back(word[i]);
    }
  }
  return {sign, out};
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)).str() == "1/2");
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK(Rational::approximate(0.333333333333, 100) == Rational(1, 3));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("blade products: spec examples") {
  const AlgebraSignature s(4);
  const auto a = blade_product(std::vector<int>{1}, std::vector<int>{1}, s);
  CHECK(a.sign == -1);
  CHECK(a.mask == 0);
  const auto b = blade_product(std::vector<int>{1, 2}, std::vector<int>{1, 3}, s);
  CHECK(b.sign == 1);
  CHECK(b.indices() == std::vector<int>{2, 3});
  const auto c = blade_product(std::vector<int>{1, 2}, std::vector<int>{3, 4}, s);
  CHECK(c.sign == 1);
  CHECK(c.indices() == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS((void)blade_product(std::vector<int>{5}, std::vector<int>{1}, s), std::domain_error);
}

TEST_CASE("blade products agree with the transposition oracle for all pairs at r = 6") {
  const AlgebraSignature s(6);
  for (Mask x = 0; x < 64; ++x)
    for (Mask y = 0; y < 64; ++y) {
      std::vector<int> word = indices_from_mask(x);
      const auto ty = indices_from_mask(y);
      word.insert(word.end(), ty.begin(), ty.end());
      const auto [sign, idx] = naive_product(word);
      const auto got = blade_product(x, y, s);
      REQUIRE(got.sign == sign);
      REQUIRE(got.indices() == idx);
    }
}

TEST_CASE("geometric product examples") {
  const AlgebraSignature s(3);
  const auto one = CliffordElement::scalar(s, Rational(1));
  const auto e12 = CliffordElement::blade(s, std::vector<int>{1, 2});
  CHECK((one + e12) * (one - e12) == CliffordElement::scalar(s, Rational(2)));
  // e1 e2 e2 e3 = e1 (e2 e2) e3 = -e1 e3.
  CHECK(e12 * CliffordElement::blade(s, std::vector<int>{2, 3}) == CliffordElement::blade(s, std::vector<int>{1, 3}, Rational(-1)));
  CHECK(CliffordElement::generator(s, 1) * e12 == CliffordElement::blade(s, std::vector<int>{2}, Rational(-1)));
}

TEST_CASE("associativity and parity grading on random elements") {
  for (int r = 1; r <= 8; ++r) {
    const AlgebraSignature s(r);
    Rng rng(1000 + static_cast<std::uint64_t>(r));
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_element(rng, s, 3, false);
      const auto b = random_element(rng, s, 3, false);
      const auto c = random_element(rng, s, 3, false);
      REQUIRE((a * b) * c == a * (b * c));
    }
    for (int t = 0; t < 100; ++t) {
      const auto ev1 = random_element(rng, s, 3, true);
      const auto ev2 = random_element(rng, s, 3, true);
      CHECK((ev1 * ev2).is_even());
    }
  }
}

TEST_CASE("generators anticommute up to r = 16") {
  for (int r = 1; r <= 16; ++r) {
    const AlgebraSignature s(r);
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        const auto ei = CliffordElement::generator(s, i), ej = CliffordElement::generator(s, j);
        const auto want = CliffordElement::scalar(s, Rational(i == j ? -2 : 0));
        REQUIRE(ei * ej + ej * ei == want);
      }
  }
}

TEST_CASE("volume element: square sign and center law") {
  for (int r = 2; r <= 9; ++r) {
    const AlgebraSignature s(r);
    const auto w = volume_element(s);
    const auto sq = w * w;
    CHECK(sq == CliffordElement::scalar(s, Rational(volume_square_sign(r))));
    bool commutes = true;
    for (int i = 1; i <= r; ++i) {
      const auto e = CliffordElement::generator(s, i);
      commutes = commutes && (w * e == e * w);
    }
    CHECK(commutes == (r % 2 == 1));
  }
  CHECK(volume_square_sign(2) == -1);
  CHECK(volume_square_sign(3) == 1);
  CHECK(volume_square_sign(4) == 1);
}

TEST_CASE("Hodge dual normalization e_i * (*e_i) = volume") {
  const AlgebraSignature s3(3);
  CHECK(hodge_dual_vector(1, s3).indices() == std::vector<int>{2, 3});
  CHECK(hodge_dual_vector(1, s3).sign == 1);
  CHECK(hodge_dual_vector(2, s3).sign == -1);
  for (int r = 1; r <= 9; ++r) {
    const AlgebraSignature s(r);
    for (int i = 1; i <= r; ++i) {
      const auto d = hodge_dual_vector(i, s);
      const auto p = CliffordElement::generator(s, i) * CliffordElement::blade(s, d.mask, Rational(d.sign));
      REQUIRE(p == volume_element(s));
    }
  }
  CHECK_THROWS((void)hodge_dual_vector(4, s3));
}

TEST_CASE("lambda2 embedding") {
  const AlgebraSignature s(3);
  CHECK(lambda2_embed(1, 2, s) == CliffordElement::blade(s, std::vector<int>{1, 2}));
  CHECK(lambda2_embed(2, 1, s) == CliffordElement::blade(s, std::vector<int>{1, 2}, Rational(-1)));
  CHECK(lambda2_embed(1, 1, s).is_zero());
}

TEST_CASE("canonical text form") {
  const AlgebraSignature s(3);
  auto x = CliffordElement::blade(s, std::vector<int>{1, 3}, Rational(-1, 2));
  x += CliffordElement::scalar(s, Rational(2));
  CHECK(x.str() == "+2·e{} + -1/2·e{1,3}");
  CHECK(CliffordElement(s).str() == "0");
}
