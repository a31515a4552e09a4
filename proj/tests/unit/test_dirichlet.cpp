#include <gtest/gtest.h>

#include <random>

#include "../common/properties.hpp"
#include "pzeta/dirichlet.hpp"
#include "pzeta/error.hpp"

using namespace pzeta;

namespace {

DirichletPoly T(std::uint64_t n, long a) { return DirichletPoly::term(n, Integer(a)); }

DirichletPoly psl2_11() {
  return T(1, 1) + T(11, -22) + T(12, -12) + T(66, 66) + T(110, 220) + T(132, 132) + T(165, 165) +
         T(220, -220) + T(330, -990) + T(660, 660);
}

MultiPoly x(std::uint64_t p, std::uint32_t e = 1) { return MultiPoly::term(1, Monomial::variable(p, e)); }

}  // namespace

TEST(Dirichlet, ArithmeticExamples) {
  const auto f = T(1, 1) + T(2, -1);
  EXPECT_EQ(f * f, T(1, 1) + T(2, -2) + T(4, 1));
  EXPECT_EQ(f * DirichletPoly::one(), f);
  EXPECT_EQ(f * (T(1, 1) + T(3, -3)), T(1, 1) + T(2, -1) + T(3, -3) + T(6, 3));
  EXPECT_EQ(psl2_11().to_string(),
            "1 - 22/11^s - 12/12^s + 66/66^s + 220/110^s + 132/132^s + 165/165^s - 220/220^s - 990/330^s + "
            "660/660^s");
}

TEST(Dirichlet, ProjectExamples) {
  EXPECT_EQ(project(psl2_11(), {2}), T(1, 1) + T(11, -22) + T(165, 165));
  EXPECT_EQ(project(psl2_11(), {}), psl2_11());
  EXPECT_EQ(project(DirichletPoly::one(), {2, 3, 5}), DirichletPoly::one());
}

TEST(Dirichlet, VPartExamples) {
  EXPECT_EQ(v_part_of(psl2_11(), 2), 4u);
  EXPECT_EQ(v_part_of(DirichletPoly::one(), 3), 1u);
  EXPECT_EQ(v_part_of(T(1, 1) + T(8, -3), 2), 8u);
  EXPECT_THROW(v_part_of(DirichletPoly(), 2), InvalidArgument);
}

TEST(Dirichlet, VPartSubmultiplicative) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    auto f = props::random_dirichlet(rng), g = props::random_dirichlet(rng);
    const auto fg = f * g;
    if (f.is_zero() || g.is_zero() || fg.is_zero()) continue;
    for (std::uint64_t v : {2, 3, 5}) {
      EXPECT_LE(v_part_of(fg, v), v_part_of(f, v) * v_part_of(g, v));
      // Single-term factors cannot cancel.
      if (f.size() == 1) EXPECT_EQ(v_part_of(fg, v), v_part_of(f, v) * v_part_of(g, v));
    }
  }
}

TEST(Dirichlet, ShiftExamples) {
  const auto f = psl2_11();
  EXPECT_EQ(shift(f, 1), f);
  EXPECT_EQ(shift(T(4, 3), 2), T(16, 12));
}

TEST(Dirichlet, PhiExamples) {
  EXPECT_EQ(phi(T(1, 1) + T(2, -1)), 1 - x(2));
  EXPECT_EQ(phi(T(12, -12)), -12 * x(2, 2) * x(3));
}

TEST(Dirichlet, SubringMembership) {
  EXPECT_TRUE(in_r_prime(T(1, 1) + T(11, -22)));
  EXPECT_TRUE(in_r_prime(psl2_11()));
  EXPECT_FALSE(in_r_prime(T(1, 1) + T(2, -1)));
  EXPECT_TRUE(in_r_prime_pi(T(1, 1) + T(2, -4), {2}));
  EXPECT_FALSE(in_r_prime_pi(T(1, 1) + T(6, -6), {2}));
}

TEST(Dirichlet, EvaluateExamples) {
  EXPECT_EQ(evaluate(T(1, 1) + T(2, -1), 1), Rational(1, 2));
  EXPECT_EQ(evaluate(T(1, 1) + T(2, -1) + T(3, -3) + T(6, 3), 2), Rational(1, 2));
  EXPECT_EQ(evaluate(psl2_11(), 0), 0);
  EXPECT_EQ(evaluate(psl2_11(), 2), Rational(127, 165));
}

TEST(Dirichlet, BinomialPowerTestExamples) {
  EXPECT_EQ(binomial_power_test(T(1, 1) + T(14, -6), 7).verdict, LemmaVerdict::irreducible);
  auto sq = binomial_power_test(T(1, 1) + T(4, -4), 2);
  EXPECT_EQ(sq.verdict, LemmaVerdict::inconclusive);
  ASSERT_TRUE(sq.power_of_a.has_value());
  EXPECT_EQ(sq.power_of_a->exponent, 2u);
  EXPECT_EQ(binomial_power_test(project(psl2_11(), {5}), 3).verdict, LemmaVerdict::inconclusive);
}

TEST(Dirichlet, CoprimeProjectionExamples) {
  const auto h = psl2_11();
  auto r = coprime_projection_test(h, {5}, {11, 3}, LemmaVerdict::irreducible);
  EXPECT_EQ(r.verdict, LemmaVerdict::irreducible);
  EXPECT_EQ(r.m, 660u);
  EXPECT_EQ(r.projected_v_parts.at(11), 11u);
  EXPECT_EQ(r.m_v_parts.at(11), 11u);
  EXPECT_EQ(r.projected_v_parts.at(3), 3u);
  EXPECT_EQ(r.m_v_parts.at(3), 3u);
  EXPECT_TRUE(r.projected.is_one());
  EXPECT_TRUE(r.gcd.is_unit());

  EXPECT_EQ(coprime_projection_test(h, {5}, {7}, LemmaVerdict::irreducible).verdict,
            LemmaVerdict::hypotheses_not_met);
  const auto sq = (T(1, 1) + T(2, -1)) * (T(1, 1) + T(2, -1));
  EXPECT_EQ(coprime_projection_test(sq, {3}, {2}, LemmaVerdict::reducible).verdict,
            LemmaVerdict::hypotheses_not_met);
  EXPECT_EQ(to_string(LemmaVerdict::hypotheses_not_met), "hypotheses-not-met");
}

TEST(Dirichlet, ProjectionShiftProperty) {
  auto r = props::projection_shift_laws(202);
  EXPECT_GE(r.cases, props::kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Dirichlet, PhiRoundTripProperty) {
  auto r = props::phi_round_trip(303);
  EXPECT_GE(r.cases, props::kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}
