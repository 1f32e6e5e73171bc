#include <gtest/gtest.h>

#include "amzv/error.hpp"
#include "amzv/prod.hpp"
#include "amzv/zeta.hpp"
#include "oracles.hpp"

using namespace amzv;

namespace {

// Compares an engine series (nonnegative valuation) to an oracle series on the
// first n coefficients.
void expect_matches(const Laurent& got, const oracle::Series& want, int n) {
  ASSERT_GE(got.abs_prec(), n);
  for (int i = 0; i < n; ++i) EXPECT_EQ(got.coeff(i).code(), want[static_cast<std::size_t>(i)]) << "coefficient of u^" << i;
}

Laurent series(const std::string& text, const FieldPtr& f) { return parse_laurent(text, f); }

}  // namespace

TEST(Poly, MonicEnumeration) {
  auto f2 = ff::Field::make(2, 1);
  auto f3 = ff::Field::make(3, 1);
  const auto d0 = monic_enum(0, f2);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0[0].format(), "1");
  const auto d1 = monic_enum(1, f2);
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_EQ(d1[0].format(), "theta");
  EXPECT_EQ(d1[1].format(), "theta + 1");
  EXPECT_EQ(monic_enum(1, f3).size(), 3u);
  EXPECT_EQ(monic_enum(4, f3).size(), 81u);
  for (const Poly& a : monic_enum(3, f3)) {
    EXPECT_TRUE(a.is_monic());
    EXPECT_EQ(a.degree(), 3);
  }
  EXPECT_THROW(monic_enum(4, f3, 80), BudgetExceeded);
  EXPECT_NO_THROW(monic_enum(4, f3, 81));
}

TEST(Laurent, FormatAndParse) {
  auto f3 = ff::Field::make(3, 1);
  const Laurent a = series("1 + g^1*u^2 + u^3 + O(u^6)", f3);
  EXPECT_EQ(a.val(), 0);
  EXPECT_EQ(a.abs_prec(), 6);
  EXPECT_EQ(a.coeff(2).code(), 2);
  EXPECT_EQ(a.coeff(5).code(), 0);
  EXPECT_THROW(a.coeff(6), std::out_of_range);
  EXPECT_EQ(a.format(), "1 + g^1*u^2 + u^3 + O(u^6)");
  EXPECT_EQ(series("u + O(u^3)", f3).format(), "u + O(u^3)");
  EXPECT_EQ(series("O(u^4)", f3).format(), "O(u^4)");
  EXPECT_TRUE(series("O(u^4)", f3).is_zero());
  EXPECT_EQ(series("u^-2 + O(u^1)", f3).val(), -2);
  EXPECT_THROW(series("1 + u", f3), ParseError);
  EXPECT_THROW(series("u^5 + O(u^4)", f3), ParseError);
}

TEST(Laurent, ArithmeticTracksPrecision) {
  auto f2 = ff::Field::make(2, 1);
  const Laurent a = series("u + u^2 + O(u^5)", f2);
  const Laurent b = series("1 + u + O(u^3)", f2);
  const Laurent sum = a + b;
  EXPECT_EQ(sum.abs_prec(), 3);
  EXPECT_EQ(sum.format(), "1 + u^2 + O(u^3)");
  const Laurent prod = a * b;
  // Known to min(1 + 3, 0 + 5) = 4.
  EXPECT_EQ(prod.abs_prec(), 4);
  EXPECT_EQ(prod.format(), "u + u^3 + O(u^4)");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(a.agrees_with(series("u + u^2 + u^7 + O(u^9)", f2), 5));
  EXPECT_FALSE(a.agrees_with(series("u + O(u^9)", f2), 5));
  EXPECT_EQ(a.truncated(2).format(), "u + O(u^2)");
}

TEST(Laurent, InversePowerExamples) {
  auto f2 = ff::Field::make(2, 1);
  EXPECT_EQ(laurent_inv_pow(Poly(f2, {1, 1}), 1, 4).format(), "u + u^2 + u^3 + u^4 + O(u^5)");
  EXPECT_EQ(laurent_inv_pow(Poly(f2, {0, 1, 1}), 1, 3).format(), "u^2 + u^3 + u^4 + O(u^5)");
  for (int s = 1; s <= 4; ++s) {
    const Laurent t = laurent_inv_pow(Poly(f2, {0, 1}), s, 5);
    EXPECT_EQ(t.val(), s);
    EXPECT_EQ(t.abs_prec(), s + 5);
    const std::string mono = s == 1 ? "u" : "u^" + std::to_string(s);
    EXPECT_EQ(t.format(), mono + " + O(u^" + std::to_string(s + 5) + ")");
  }
  EXPECT_THROW(laurent_inv_pow(Poly(f2), 1, 4), std::invalid_argument);
}

TEST(Laurent, InversePowerMatchesOracle) {
  for (int q : {2, 3, 4, 5}) {
    auto f = ff::Field::from_q_string(std::to_string(q));
    for (int d = 0; d <= 3; ++d)
      for (const Poly& a : monic_enum(d, f))
        for (int s = 1; s <= 3; ++s) {
          const int n = 12;
          const Laurent got = laurent_inv_pow(a, s, n);
          oracle::Series inv = oracle::inverse_of_monic(*f, a.coeffs(), n + s * d);
          oracle::Series want(inv.size(), 0);
          want[0] = 1;
          for (int k = 0; k < s; ++k) want = oracle::series_mul(*f, want, inv);
          expect_matches(got, want, n + s * d);
        }
  }
}

TEST(PowerSum, SpotValues) {
  for (int q : {2, 3, 4, 5}) {
    auto f = ff::Field::from_q_string(std::to_string(q));
    for (Elem e : f->units())
      for (int s = 1; s <= 3; ++s) {
        const ZetaArray arr{{e.code()}, {s}};
        EXPECT_EQ(power_sum_d(arr, 0, 10, f).format(), "1 + O(u^10)");
        EXPECT_EQ(power_sum_lt(arr, 1, 10, f).format(), "1 + O(u^10)");
        EXPECT_TRUE(power_sum_lt(arr, 0, 10, f).is_zero());
        EXPECT_TRUE(power_sum_d(arr, -1, 10, f).is_zero());
      }
    const ZetaArray two{{1, 1}, {1, 2}};
    EXPECT_TRUE(power_sum_d(two, 0, 10, f).is_zero());
  }
  auto f2 = ff::Field::make(2, 1);
  EXPECT_EQ(power_sum_d(ZetaArray{{1}, {1}}, 1, 6, f2).format(), "u^2 + u^3 + u^4 + u^5 + O(u^6)");
}

TEST(PowerSum, MatchesChainEnumeration) {
  for (int q : {2, 3, 4}) {
    auto f = ff::Field::from_q_string(std::to_string(q));
    const int n = 12;
    ZetaEngine engine(f, n);
    for (int w = 1; w <= 4; ++w)
      for (const Word& u : basis_words(w, *f)) {
        const ZetaArray arr = word_to_array(u);
        for (int d = 0; d <= 3; ++d) {
          const auto want = oracle::power_sum_chains(*f, arr.eps, arr.s, d, n);
          SCOPED_TRACE("q=" + std::to_string(q) + " " + format_word(u, *f) + " d=" + std::to_string(d));
          expect_matches(engine.power_sum_d(u, d), want, n);
        }
      }
  }
}

TEST(PowerSum, FactorizationAndTwist) {
  for (int q : {2, 3, 4}) {
    auto f = ff::Field::from_q_string(std::to_string(q));
    ZetaEngine engine(f, 16);
    for (int d = 0; d <= 4; ++d)
      for (Elem e : f->units())
        for (int s = 1; s <= 3; ++s) {
          const Letter x = make_letter(s, e);
          const Laurent twisted = engine.power_sum_letter(x, d);
          const Laurent plain = engine.power_sum_letter(make_letter(s, f->one()), d);
          EXPECT_TRUE(twisted.agrees_with(plain.scaled(e.pow(d).code()), 16));
        }
    for (int w = 2; w <= 4; ++w)
      for (const Word& u : basis_words(w, *f))
        for (int d = 0; d <= 3; ++d) {
          const Laurent lhs = engine.power_sum_d(u, d);
          const Laurent rhs = engine.power_sum_letter(u.front(), d) * engine.power_sum_lt(u.tail(), d);
          EXPECT_TRUE(lhs.agrees_with(rhs, 16));
        }
  }
}

TEST(PowerSum, ValuationBound) {
  auto f3 = ff::Field::make(3, 1);
  ZetaEngine engine(f3, 24);
  for (int w = 1; w <= 4; ++w)
    for (const Word& u : basis_words(w, *f3))
      for (int d = 0; d <= 5; ++d) EXPECT_GE(engine.power_sum_d(u, d).valuation(), d);
}

TEST(Zeta, SpotValues) {
  auto f2 = ff::Field::make(2, 1);
  EXPECT_EQ(zeta_trunc(unit_element(f2), 8).format(), "1 + O(u^8)");
  const Element x1 = parse_element("x[1,0]", f2);
  EXPECT_EQ(zeta_trunc(x1, 4).format(), "1 + u^2 + u^3 + O(u^4)");
  // Cross-check with the brute-force enumerator: S_0 + ... + S_4 to u^4.
  oracle::Series total(4, 0);
  for (int d = 0; d <= 4; ++d) {
    const auto sd = oracle::power_sum_chains(*f2, {1}, {1}, d, 4);
    for (int i = 0; i < 4; ++i) total[i] = f2->add(total[i], sd[i]);
  }
  expect_matches(zeta_trunc(x1, 4), total, 4);
}

TEST(Zeta, Linearity) {
  auto f3 = ff::Field::make(3, 1);
  ZetaEngine engine(f3, 12);
  const Element a = parse_element("x[1,0]x[2,1] + 2*x[3,1]", f3);
  const Laurent za = engine.zeta(a);
  EXPECT_TRUE(engine.zeta(f3->from_int(2) * a).agrees_with(za.scaled(2), 12));
  EXPECT_TRUE(engine.zeta(a + a).agrees_with(za + za, 12));
}

TEST(Zeta, ShuffleHomomorphismSmall) {
  auto f2 = ff::Field::make(2, 1);
  ProductEngine products(f2);
  ZetaEngine engine(f2, 16);
  for (int wa = 1; wa <= 2; ++wa)
    for (int wb = 1; wb <= 2; ++wb)
      for (const Word& a : basis_words(wa, *f2))
        for (const Word& b : basis_words(wb, *f2)) {
          const Element prod = products.shuffle(a, b);
          EXPECT_TRUE(engine.zeta(prod).agrees_with(engine.zeta(a) * engine.zeta(b), 16));
          for (int d = 0; d <= 3; ++d)
            EXPECT_TRUE(engine.power_sum_lt(prod, d).agrees_with(engine.power_sum_lt(a, d) * engine.power_sum_lt(b, d), 16));
        }
}

TEST(Arrays, Conversion) {
  auto f3 = ff::Field::make(3, 1);
  const Word w = parse_word("x[1,1]x[3,0]", *f3);
  const ZetaArray arr = word_to_array(w);
  EXPECT_EQ(arr.eps, (std::vector<Code>{2, 1}));
  EXPECT_EQ(arr.s, (std::vector<int>{1, 3}));
  EXPECT_EQ(array_to_word(arr), w);
  EXPECT_THROW(word_to_array(Word{}), std::invalid_argument);
  for (const Word& u : basis_words(4, *f3)) EXPECT_EQ(array_to_word(word_to_array(u)), u);
}

TEST(Budget, ExceededPropagates) {
  auto f3 = ff::Field::make(3, 1);
  ZetaEngine engine(f3, 40, 100);
  EXPECT_THROW(engine.power_sum_d(ZetaArray{{1}, {1}}, 5), BudgetExceeded);
}

TEST(PowerSum, VanishingShortcutMatchesEnumeration) {
  // Covers degrees where the engine skips enumeration because the sum
  // vanishes to the working precision.
  for (int q : {2, 3}) {
    auto f = ff::Field::from_q_string(std::to_string(q));
    const int n = 10;
    const int d_top = q == 2 ? 9 : 5;
    ZetaEngine engine(f, n);
    for (int w = 1; w <= 3; ++w)
      for (const Word& u : basis_words(w, *f)) {
        if (u.depth() > 2) continue;
        const ZetaArray arr = word_to_array(u);
        for (int d = 0; d <= d_top; ++d) {
          SCOPED_TRACE("q=" + std::to_string(q) + " " + format_word(u, *f) + " d=" + std::to_string(d));
          expect_matches(engine.power_sum_d(u, d), oracle::power_sum_chains(*f, arr.eps, arr.s, d, n), n);
        }
      }
  }
}

TEST(Zeta, MatchesTruncatedChainSums) {
  // zeta_A to precision N only sees S_d with d < N; compare against the sum of
  // enumerated S_d for every d < N.
  auto f3 = ff::Field::make(3, 1);
  const int n = 6;
  ZetaEngine engine(f3, n);
  for (const Word& u : basis_words_up_to(2, *f3)) {
    if (u.empty()) continue;
    const ZetaArray arr = word_to_array(u);
    oracle::Series total(n, 0);
    for (int d = 0; d < n; ++d) {
      if (d * arr.s[0] >= n) break;  // every summand has valuation >= d * s_1
      const auto sd = oracle::power_sum_chains(*f3, arr.eps, arr.s, d, n);
      for (int i = 0; i < n; ++i) total[i] = f3->add(total[i], sd[i]);
    }
    expect_matches(engine.zeta(u), total, n);
  }
}
