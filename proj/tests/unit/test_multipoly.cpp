#include <gtest/gtest.h>

#include <random>

#include "../common/properties.hpp"
#include "pzeta/multipoly.hpp"

using namespace pzeta;

namespace {

MultiPoly x(std::uint64_t p, std::uint32_t e = 1) { return MultiPoly::term(1, Monomial::variable(p, e)); }

}  // namespace

TEST(MultiPoly, RingExamples) {
  EXPECT_EQ((1 + x(2)) * (1 - x(2)), 1 - x(2, 2));
  const MultiPoly f = 3 * x(2) * x(5) - 7 + x(3, 2);
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ((1 - x(2)) * (1 - 3 * x(3)), 1 - x(2) - 3 * x(3) + 3 * x(2) * x(3));
}

TEST(MultiPoly, CanonicalRepresentation) {
  MultiPoly f = x(2) - x(2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.term_count(), 0u);
  EXPECT_EQ(Monomial::variable(3, 0), Monomial());
}

TEST(MultiPoly, GcdExamples) {
  EXPECT_EQ(gcd(x(2), x(3)), MultiPoly(1));
  EXPECT_EQ(gcd((1 - x(2)) * (1 + x(3)), 1 - x(2)), normalize_sign(1 - x(2)));
  const MultiPoly f = 4 * x(2) * x(3) - 6 * x(5);
  EXPECT_EQ(gcd(f, 1), MultiPoly(1));
  EXPECT_EQ(gcd(f, 0), normalize_sign(f));
}

TEST(MultiPoly, GcdProperties) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto f = props::random_multipoly(rng), g = props::random_multipoly(rng), h = props::random_multipoly(rng, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    auto d = gcd(f, g);
    ASSERT_TRUE(exact_divide(f, d).has_value()) << f.to_string() << " / " << d.to_string();
    ASSERT_TRUE(exact_divide(g, d).has_value()) << g.to_string() << " / " << d.to_string();
    auto lhs = gcd(f * h, g * h);
    auto rhs = d * h;
    EXPECT_TRUE(lhs == rhs || lhs == -rhs) << f.to_string() << " | " << g.to_string() << " | " << h.to_string();
  }
}

TEST(MultiPoly, PerfectPowerExamples) {
  auto sq = is_perfect_power(4 * x(2, 2));
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(sq->exponent, 2u);
  EXPECT_EQ(sq->root.pow(2), 4 * x(2, 2));
  EXPECT_FALSE(is_perfect_power(1 + x(2)).has_value());
  auto cube = is_perfect_power(x(2, 3) * x(3, 3));
  ASSERT_TRUE(cube.has_value());
  EXPECT_EQ(cube->exponent, 3u);
  EXPECT_EQ(cube->root, x(2) * x(3));
  EXPECT_FALSE(is_perfect_power(6 * x(2)).has_value());
}

TEST(MultiPoly, PerfectPowerRoundTrip) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    auto g = props::random_multipoly(rng, 3);
    if (g.is_zero()) continue;
    const unsigned k = 2 + static_cast<unsigned>(rng() % 3);
    const MultiPoly f = g.pow(k);
    auto pw = is_perfect_power(f);
    ASSERT_TRUE(pw.has_value()) << f.to_string();
    EXPECT_EQ(pw->root.pow(pw->exponent), f);
    ++checked;
    if (auto any = is_perfect_power(g)) EXPECT_EQ(any->root.pow(any->exponent), g);
  }
  EXPECT_GT(checked, 900);
}

TEST(MultiPoly, BinomialFormExamples) {
  auto b = binomial_form(1 - 6 * x(2) * x(7), 7);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->a, 6 * x(2));
  EXPECT_EQ(b->m, 1u);
  EXPECT_FALSE(binomial_form(1 - 22 * x(11) - 12 * x(2, 2) * x(3), 3).has_value());
  EXPECT_FALSE(binomial_form(MultiPoly(1), 5).has_value());
}

TEST(MultiPoly, LinearVariableExamples) {
  EXPECT_EQ(linear_variable_irreducible(x(2) + x(3), 2).verdict, FactorVerdict::irreducible);
  EXPECT_EQ(linear_variable_irreducible(2 + 2 * x(2), 2).verdict, FactorVerdict::reducible);
  auto s = linear_variable_irreducible((1 - x(3)) + (1 - x(3)) * x(2), 2);
  EXPECT_EQ(s.verdict, FactorVerdict::reducible);
  EXPECT_EQ(normalize_sign(s.common), normalize_sign(1 - x(3)));
  EXPECT_EQ(linear_variable_irreducible(x(2, 2) + 1, 2).verdict, FactorVerdict::inapplicable);
}

TEST(MultiPoly, BinomialInVariableDecidesSquares) {
  // x^2 - y^2 splits; x^2 + y is irreducible.
  EXPECT_EQ(binomial_in_variable(x(2, 2) - x(3, 2), 2).verdict, FactorVerdict::reducible);
  EXPECT_EQ(binomial_in_variable(x(2, 2) + x(3), 2).verdict, FactorVerdict::irreducible);
  EXPECT_EQ(binomial_in_variable(x(2, 2) + x(2) + 1, 2).verdict, FactorVerdict::inapplicable);
}

// Linear-variable verdicts agree with the bounded brute-force oracle on small inputs.
TEST(MultiPoly, LinearVariableAgreesWithBruteForce) {
  std::mt19937_64 rng(13);
  int compared = 0;
  for (int i = 0; i < 1500 && compared < 1000; ++i) {
    MultiPoly a, b;
    for (int k = 0, n = 1 + static_cast<int>(rng() % 3); k < n; ++k) {
      std::vector<Monomial::Entry> e;
      if (auto d = rng() % 3) e.emplace_back(3, static_cast<std::uint32_t>(d));
      if (auto d = rng() % 2) e.emplace_back(5, static_cast<std::uint32_t>(d));
      a += MultiPoly::term(Integer(static_cast<long>(rng() % 7) - 3), Monomial::from_entries(e));
    }
    for (int k = 0, n = 1 + static_cast<int>(rng() % 2); k < n; ++k) {
      std::vector<Monomial::Entry> e;
      if (auto d = rng() % 3) e.emplace_back(3, static_cast<std::uint32_t>(d));
      b += MultiPoly::term(Integer(static_cast<long>(rng() % 7) - 3), Monomial::from_entries(e));
    }
    if (b.is_zero() || a.is_zero()) continue;
    const MultiPoly f = a + b * x(2);
    if (f.term_count() > 6) continue;
    auto verdict = linear_variable_irreducible(f, 2).verdict;
    ASSERT_NE(verdict, FactorVerdict::inapplicable);
    auto factor = brute_force_factor(f, {.max_terms = 4, .max_coefficient = 50, .max_candidates = 2'000'000});
    if (verdict == FactorVerdict::irreducible) {
      EXPECT_FALSE(factor.has_value()) << f.to_string() << " factor " << factor->to_string();
    } else {
      EXPECT_TRUE(factor.has_value()) << f.to_string();
    }
    ++compared;
  }
  EXPECT_GE(compared, 1000);
}

TEST(MultiPoly, RingLawsProperty) {
  auto r = props::ring_laws(101);
  EXPECT_GE(r.cases, props::kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}
