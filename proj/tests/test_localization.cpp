#include <doctest.h>

#include "loopchar/demazure.hpp"
#include "loopchar/localization.hpp"

using namespace loopchar;

namespace {

LaurentPoly mono(const Weight& w, long c = 1) { return LaurentPoly::monomial(w, c); }

std::vector<Word> words_up_to(std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t n = 1; n <= len; ++n)
    for (int first : {0, 1}) {
      std::vector<std::uint8_t> letters(n);
      for (std::size_t j = 0; j < n; ++j) letters[j] = static_cast<std::uint8_t>((first + j) % 2);
      out.emplace_back(letters);
    }
  return out;
}

}  // namespace

TEST_CASE("the worked nil-Hecke coefficient") {
  // b_{s1 s0, s1} = 1/(1 - e^{alpha1}) * 1/(1 - e^{-(alpha0 + 2 alpha1)})
  const FactoredRational expected =
      FactoredRational::inverse_one_minus(kAlpha1) *
      FactoredRational::inverse_one_minus(-(kAlpha0 + 2 * kAlpha1));
  CHECK(rat_equal(b_coeff(Word{1, 0}, WeylElement::generator(1)), expected));
  CHECK(b_coeff(Word{1, 0}, WeylElement::parse("s0s1")).is_zero());
}

TEST_CASE("projective line") {
  const auto r = coset_sums(Word{0});
  REQUIRE(r.size() == 2);
  CHECK(rat_equal(r[0], FactoredRational::inverse_one_minus(kAlpha0)));
  CHECK(rat_equal(r[1], FactoredRational(-mono(kAlpha0), {kAlpha0})));
  CHECK(rat_equal(schubert_character(Word{0}, 1),
                  FactoredRational(mono(kLambda0) + mono(kLambda0 - kAlpha0))));
}

TEST_CASE("isotropy weights") {
  const Word w{1, 0};
  const auto iso = isotropy_weights(w, Gallery::parse("10"));
  REQUIRE(iso.size() == 2);
  CHECK(iso[0] == kAlpha1);
  CHECK(iso[1] == reflect(1, -kAlpha0));
  CHECK_THROWS(isotropy_weights(w, Gallery::parse("1")));
}

TEST_CASE("subword sums, products and recursion agree") {
  for (const Word& w : words_up_to(8)) {
    CAPTURE(w.str());
    const auto b = b_coeffs(w);
    const auto t = nil_hecke_product(w);
    CHECK(t.coeffs().size() == b.size());
    FactoredRational total;
    for (const auto& [v, r] : b) {
      CHECK(rat_equal(r, t.coefficient(v)));
      CHECK(bruhat_leq(v, word_to_elem(w)));
      total += r;
    }
    CHECK(rat_equal(total, FactoredRational::one()));
    if (!w.empty()) {
      const auto tail = b_coeffs(w.suffix_from(1));
      for (const auto& [v, r] : b) CHECK(rat_equal(r, b_recursion_rhs(w[0], tail, v)));
    }
  }
}

TEST_CASE("only one recursion shape matches the subword sum") {
  for (int p : {-1, 1})
    for (int q : {-1, 1}) {
      bool all = true;
      for (const Word& w : words_up_to(8)) {
        if (w.empty()) continue;
        const auto tail = b_coeffs(w.suffix_from(1));
        for (const auto& [v, r] : b_coeffs(w)) all = all && rat_equal(r, b_recursion_rhs(w[0], tail, v, {p, q}));
      }
      CHECK(all == (RecursionForm{p, q} == kBRecursion));
    }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(b_coeffs(Word{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(schubert_character(Word{0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(r_coset(Word{0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_sum(Word{0}, 1, 2), std::invalid_argument);
}

TEST_CASE("level zero gives the constant character") {
  for (const Word& w : words_up_to(6)) {
    const auto conv = calibrated_convention();
    const auto raw = fixed_point_sum(w, 0, conv.exponent_sign);
    CHECK(rat_equal(raw, FactoredRational::one()));
  }
}

TEST_CASE("calibration") {
  const auto c = calibrated_convention();
  CHECK(c.exponent_sign == -1);
  CHECK(c.apply_bar);
}

TEST_CASE("characters agree with Demazure operators") {
  for (const Word& w : words_up_to(6))
    for (int level : {1, 2}) {
      CAPTURE(w.str());
      const auto ch = demazure_character(w, level);
      CHECK(rat_equal(schubert_character(w, level), FactoredRational(ch.character)));
      CHECK(truncated_character(w, level, 4) == ch.depth_slice(4));
    }
}
