#include <doctest.h>

#include <set>

#include "loopchar/weyl.hpp"
#include "oracles.hpp"

using namespace loopchar;

TEST_CASE("words") {
  CHECK(Word::parse("s0s1s0") == Word{0, 1, 0});
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("e").empty());
  CHECK(Word{}.str() == "e");
  CHECK_THROWS_AS(Word::parse("s2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("s0s"), std::invalid_argument);
  CHECK(Word{0, 1, 0}.is_reduced());
  CHECK_FALSE(Word{0, 0}.is_reduced());
}

TEST_CASE("generators and products") {
  const auto s0 = WeylElement::generator(0), s1 = WeylElement::generator(1);
  CHECK(s0 * s0 == WeylElement::identity());
  CHECK(s1 * s1 == WeylElement::identity());
  CHECK((s0 * s1).length() == 2);
  CHECK(s0 * s1 != s1 * s0);
  CHECK(WeylElement::parse("s1s0") == s1 * s0);
  CHECK(WeylElement::parse("1,-1") == s0);
  CHECK_THROWS(WeylElement::parse("2,0"));
  CHECK_THROWS(WeylElement::parse("1,x"));
}

TEST_CASE("group laws on random elements") {
  oracle::Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const WeylElement x(static_cast<int>(rng.range(0, 1)), rng.range(-30, 30));
    const WeylElement y(static_cast<int>(rng.range(0, 1)), rng.range(-30, 30));
    const WeylElement z(static_cast<int>(rng.range(0, 1)), rng.range(-30, 30));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * x.inverse() == WeylElement::identity());
    const Word w = x.reduced_word();
    CHECK(w.is_reduced());
    CHECK(static_cast<std::int64_t>(w.size()) == x.length());
    CHECK(word_to_elem(w) == x);
    // The action is a group action.
    const Weight mu{rng.range(0, 3), rng.range(-5, 5), rng.range(-5, 5)};
    CHECK(act(x * y, mu) == act(x, act(y, mu)));
  }
}

TEST_CASE("chain of minimal coset representatives") {
  CHECK(chain_word(0).empty());
  CHECK(chain_word(1) == Word{0});
  CHECK(chain_word(2) == Word{1, 0});
  CHECK(chain_word(3) == Word{0, 1, 0});
  std::set<WeylElement> seen;
  for (std::size_t n = 0; n <= 64; ++n) {
    const auto v = chain_element(n);
    CHECK(v.length() == static_cast<std::int64_t>(n));
    CHECK(coset_index(v) == n);
    CHECK(coset_index(v * WeylElement::generator(1)) == n);
    CHECK(seen.insert(v).second);
  }
}

TEST_CASE("galleries") {
  const Word w{1, 0};
  const auto range = galleries(w);
  CHECK(range.count() == 4);
  CHECK(range[0].str() == "00");
  CHECK(range[3].str() == "11");
  CHECK(realization(w, Gallery::parse("10")) == WeylElement::generator(1));
  CHECK(realization(w, Gallery::parse("11")) == word_to_elem(w));
  CHECK_THROWS(realization(w, Gallery::parse("1")));
  CHECK_THROWS(Gallery::parse("102"));
  CHECK_THROWS(GalleryRange(41));

  for (std::size_t n = 0; n <= 10; ++n)
    for (int first : {0, 1}) {
      std::vector<std::uint8_t> letters(n);
      for (std::size_t j = 0; j < n; ++j) letters[j] = static_cast<std::uint8_t>((first + j) % 2);
      const Word word(letters);
      const auto top = word_to_elem(word);
      for (const Gallery& g : galleries(word)) {
        const auto v = realization(word, g);
        CHECK(bruhat_leq(v, top));
        CHECK(coset_index(v) <= n);
      }
    }
}

TEST_CASE("f sums") {
  CHECK(f_sum(Word{}) == Weight{});
  CHECK(f_sum(Word{0}) == kAlpha0);
  CHECK(f_sum(chain_word(2)) == Weight{0, 2, 1});
  CHECK(s_factor(Word{0}) == LaurentPoly::monomial(kAlpha0));
  CHECK_THROWS(f_sum(Word{0, 0}));
}

TEST_CASE("action on weights") {
  CHECK(act(Word{0}, kLambda0) == kLambda0 - kAlpha0);
  // Words act right to left.
  CHECK(act(Word{1, 0}, kLambda0) == reflect(1, reflect(0, kLambda0)));
  CHECK(act(WeylElement::parse("s1s0"), kLambda0) == act(Word{1, 0}, kLambda0));
}
