#include <doctest.h>

#include <sstream>

#include "loopchar/charalg.hpp"
#include "oracles.hpp"

using namespace loopchar;

namespace {

LaurentPoly mono(const Weight& w, long c = 1) { return LaurentPoly::monomial(w, c); }

FactoredRational random_rational(oracle::Rng& rng) {
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0, n = static_cast<int>(rng.range(1, 3)); k < n; ++k)
    terms.push_back({Weight{0, rng.range(-2, 2), rng.range(0, 1)}, rng.range(-3, 3)});
  const auto roots = positive_roots_up_to(3);
  std::vector<Weight> den;
  for (int k = 0, n = static_cast<int>(rng.range(0, 3)); k < n; ++k) {
    const Weight b = roots[static_cast<std::size_t>(rng.range(0, 9))];
    den.push_back(rng.range(0, 1) ? b : -b);
  }
  return FactoredRational(LaurentPoly::from_terms(terms), den);
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const LaurentPoly p = mono(kAlpha1) + LaurentPoly(1);
  const LaurentPoly q = LaurentPoly(1) - mono(kAlpha1);
  CHECK(p * q == LaurentPoly(1) - mono(2 * kAlpha1));
  CHECK((p - p).is_zero());
  CHECK(p.coefficient(kAlpha1) == 1);
  CHECK(p.coefficient(kDelta) == 0);
  CHECK(p.times_one_minus(kAlpha1) == p * q);
  CHECK(LaurentPoly::from_terms({{kDelta, 2}, {kDelta, -2}}).is_zero());
  CHECK(p.shifted(kDelta).coefficient(kDelta + kAlpha1) == 1);
  CHECK(p.scaled(-3).coefficient_sum() == -6);
}

TEST_CASE("exact division by binomials") {
  const LaurentPoly p = mono(kDelta) - mono(kDelta + 3 * kAlpha0);
  auto q = p.divide_one_minus(kAlpha0);
  REQUIRE(q);
  CHECK(q->times_one_minus(kAlpha0) == p);
  CHECK_FALSE((LaurentPoly(1) + mono(kAlpha1)).divide_one_minus(kAlpha1));
  CHECK_FALSE(LaurentPoly(1).divide_one_minus(kDelta));
}

TEST_CASE("polarization") {
  const auto pol = polarize(-kAlpha0);
  CHECK(pol.beta == kAlpha0);
  CHECK(pol.prefactor == -mono(-kAlpha0));
  CHECK_THROWS_AS(polarize(Weight{}), std::domain_error);
  CHECK_THROWS_AS(polarize(2 * kAlpha1), std::invalid_argument);
  // 1/(1 - e^{-a}) = -e^{a}/(1 - e^{a})
  const FactoredRational r = FactoredRational::inverse_one_minus(-kAlpha0);
  CHECK(r.identical(FactoredRational(-mono(kAlpha0), {kAlpha0})));
}

TEST_CASE("reduction cancels dividing factors") {
  const FactoredRational r(LaurentPoly(1) - mono(kAlpha1), {kAlpha1, kDelta});
  const auto red = r.reduced();
  CHECK(red.identical(FactoredRational::inverse_one_minus(kDelta)));
  CHECK(rat_equal(r, red));
  CHECK(FactoredRational().reduced().is_zero());
}

TEST_CASE("rat_equal is compatible with ring operations") {
  oracle::Rng rng(23);
  for (int t = 0; t < 1000; ++t) {
    const auto r = random_rational(rng), s = random_rational(rng), u = random_rational(rng);
    CHECK(rat_equal(r, r));
    CHECK(rat_equal(r + s, s + r));
    CHECK(rat_equal(r * s, s * r));
    CHECK(rat_equal((r + s) * u, r * u + s * u));
    CHECK(rat_equal((r - s) + s, r));
    CHECK(rat_equal(r.reduced(), r));
  }
}

TEST_CASE("expansion of the imaginary-root product counts partitions") {
  std::vector<Weight> den;
  for (int n = 1; n <= 4; ++n) den.push_back(n * kDelta);
  const auto e = expand(FactoredRational(LaurentPoly(1), den), 4);
  const long expected[] = {1, 1, 2, 3, 5};
  for (int n = 0; n <= 4; ++n) CHECK(e.coefficient(n * kDelta) == expected[n]);
  CHECK(e.size() == 5);
}

TEST_CASE("expansion is additive and multiplicative in the window") {
  oracle::Rng rng(29);
  const std::int64_t order = 4, cut = 4, wide = 12;
  auto window = [&](const LaurentPoly& p) {
    return p.filtered([&](const Weight& w) { return w.d <= order && w.a1 >= -cut && w.a1 <= cut; });
  };
  for (int t = 0; t < 200; ++t) {
    const auto r = random_rational(rng), s = random_rational(rng);
    CHECK(expand(r + s, order, cut) == expand(r, order, cut) + expand(s, order, cut));
    CHECK(expand(r * s, order, cut) == window(expand(r, order, wide) * expand(s, order, wide)));
  }
}

TEST_CASE("geometric series invert their binomial") {
  for (const auto& b : positive_roots_up_to(3)) {
    const auto series = expand(FactoredRational::inverse_one_minus(b), 6, 6);
    const auto back = series.times_one_minus(b).filtered(
        [&](const Weight& w) { return w.d <= 6 - b.d && w.a1 >= -5 && w.a1 <= 5; });
    CHECK(back == LaurentPoly(1));
  }
}

TEST_CASE("printing") {
  std::ostringstream os;
  os << mono(kDelta, 2);
  CHECK(os.str() == "2*e(0,0,1)");
}
