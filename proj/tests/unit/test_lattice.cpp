#include <gtest/gtest.h>

#include <algorithm>

#include "../common/oracle.hpp"
#include "../common/properties.hpp"
#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/registry.hpp"
#include "pzeta/zeta.hpp"

using namespace pzeta;

namespace {

std::vector<std::size_t> class_orders(const SubgroupLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& c : l.classes) out.push_back(c.order);
  return out;
}

const SubgroupClass& class_of_order(const SubgroupLattice& l, std::size_t order) {
  for (const auto& c : l.classes)
    if (c.order == order) return c;
  throw std::runtime_error("no class of order " + std::to_string(order));
}

DirichletPoly from_map(const std::map<std::uint64_t, mpz_class>& m) {
  DirichletPoly f;
  for (const auto& [n, a] : m) f.add(n, a);
  return f;
}

}  // namespace

TEST(Lattice, S3Classes) {
  GroupTable g(symmetric(3));
  auto l = enumerate_subgroups(g);
  EXPECT_EQ(class_orders(l), (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(class_of_order(l, 2).class_size, 3u);
  EXPECT_EQ(l.subgroup_count(), 6u);
  EXPECT_EQ(class_of_order(l, 6).mu, 1);
  EXPECT_EQ(class_of_order(l, 3).mu, -1);
  EXPECT_EQ(class_of_order(l, 2).mu, -1);
  EXPECT_EQ(class_of_order(l, 1).mu, 3);
}

TEST(Lattice, A4Classes) {
  GroupTable g(alternating(4));
  auto l = enumerate_subgroups(g);
  EXPECT_EQ(class_orders(l), (std::vector<std::size_t>{1, 2, 3, 4, 12}));
  EXPECT_EQ(class_of_order(l, 2).class_size, 3u);
  EXPECT_EQ(class_of_order(l, 3).class_size, 4u);
  EXPECT_EQ(class_of_order(l, 2).mu, 0);
  EXPECT_EQ(class_of_order(l, 1).mu, 4);
}

TEST(Lattice, CyclicPrime) {
  GroupTable g(cyclic(7));
  auto l = enumerate_subgroups(g);
  ASSERT_EQ(l.classes.size(), 2u);
  EXPECT_EQ(l.classes[1].mu, 1);
  EXPECT_EQ(l.classes[0].mu, -1);
}

TEST(Lattice, Psl211HasSixteenClasses) {
  GroupTable g(psl2(11));
  EXPECT_EQ(enumerate_subgroups(g).classes.size(), 16u);
}

TEST(Lattice, TrivialGroup) {
  GroupTable g(PermGroup(3, {}));
  auto l = enumerate_subgroups(g);
  ASSERT_EQ(l.classes.size(), 1u);
  EXPECT_TRUE(l.polynomial().is_one());
}

TEST(Lattice, RefusesAboveBound) {
  GroupTable g(psl2(13));
  EXPECT_THROW(enumerate_subgroups(g, 1000), SizeRefusal);
}

TEST(Lattice, AgreesWithBruteForceOracle) {
  for (const char* name : {"Sym(3)", "C(6)", "Dih(4)", "Q8", "Alt(4)", "SL(2,3)", "Sym(4)", "Alt(5)",
                           "C(2) x C(2) x C(2)", "Dih(6)", "PSL(2,7)"}) {
    const PermGroup pg = registry::builtin_group(name);
    GroupTable g(pg);
    auto l = enumerate_subgroups(g);
    auto elems = oracle::elements(pg.degree(), pg.generators());
    auto subs = oracle::all_subgroups(pg.degree(), elems);
    EXPECT_EQ(l.subgroup_count(), subs.size()) << name;
    EXPECT_EQ(l.polynomial(), from_map(oracle::p_g(pg.degree(), pg.generators()))) << name;
  }
}

TEST(Lattice, SupplementsEngineMatchesFull) {
  for (const char* name : {"Sym(3)", "Alt(4)", "Sym(4)", "SL(2,3)", "Alt(5)", "PSL(2,11)", "PGL(2,7)"}) {
    GroupTable g(registry::builtin_group(name));
    EXPECT_EQ(mobius_supplements(g, g.whole()).polynomial(), enumerate_subgroups(g).polynomial()) << name;
    auto triv = mobius_supplements(g, g.trivial());
    ASSERT_EQ(triv.classes.size(), 1u) << name;
    EXPECT_TRUE(triv.polynomial().is_one());
  }
}

TEST(Lattice, StructureQueries) {
  GroupTable sl23(sl2(3));
  EXPECT_EQ(frattini(sl23).order, 2u);
  EXPECT_EQ(frattini(sl23), sl23.centralizer(sl23.generator_ids()));
  GroupTable s3(symmetric(3));
  EXPECT_EQ(frattini(s3).order, 1u);

  GroupTable a4(alternating(4));
  auto series = chief_series(a4);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[0].order, 12u);
  EXPECT_EQ(series[1].order, 4u);
  EXPECT_EQ(series[2].order, 1u);
  EXPECT_FALSE(is_frattini_factor(a4, series[0], series[1]));
  EXPECT_FALSE(is_frattini_factor(a4, series[1], series[2]));

  GroupTable s4(symmetric(4));
  auto maxes = maximal_subgroups(s4);
  std::vector<std::size_t> idx;
  for (const auto& c : maxes) idx.push_back(c.index);
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{2, 3, 4}));
}

TEST(Lattice, FrattiniMatchesIntersectionOfMaximals) {
  for (const char* name : {"Sym(3)", "Dih(4)", "Q8", "SL(2,3)", "Sym(4)", "SL(2,5)", "C(8)", "C(4) x C(2)"}) {
    GroupTable g(registry::builtin_group(name));
    Bitset inter = g.whole().elements;
    for (const auto& c : maximal_subgroups(g))
      for (const auto& conj : c.conjugates) inter &= conj;
    EXPECT_EQ(frattini(g).elements, inter) << name;
  }
}

TEST(Lattice, ChiefFactorOrdersMultiply) {
  for (const char* name : {"Sym(4)", "SL(2,3)", "SL(2,5)", "Dih(6)", "Alt(5) x C(3)", "Sym(3) wr C(2)"}) {
    GroupTable g(registry::builtin_group(name));
    auto series = chief_series(g);
    std::size_t prod = 1;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      ASSERT_TRUE(g.is_normal(series[i]));
      prod *= series[i].order / series[i + 1].order;
    }
    EXPECT_EQ(prod, g.size()) << name;
  }
}

TEST(Lattice, ComplementsCount) {
  GroupTable s3(symmetric(3));
  EXPECT_EQ(complements_count(s3, registry::parse_normal(s3, "derived")), 3u);
  GroupTable v4(dihedral(2));
  const Subgroup c2 = v4.closure(std::vector<ElemId>{v4.generator_ids()[0]});
  EXPECT_EQ(complements_count(v4, c2), 2u);
  GroupTable c4(cyclic(4));
  const Subgroup sq = c4.closure(std::vector<ElemId>{c4.pow(c4.generator_ids()[0], 2)});
  EXPECT_EQ(complements_count(c4, sq), 0u);
}

TEST(Lattice, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphism_group(GroupTable(dihedral(2))).order(), 6u);
  EXPECT_EQ(automorphism_group(GroupTable(alternating(5))).order(), 120u);
  EXPECT_EQ(automorphism_group(GroupTable(cyclic(3))).order(), 2u);
  EXPECT_EQ(automorphism_group(GroupTable(quaternion8())).order(), 24u);
  EXPECT_EQ(automorphism_group(GroupTable(symmetric(3))).as_perm_group().order(), 6);
}

TEST(Lattice, MobiusSumZeroProperty) {
  auto r = props::mobius_sum_zero(404);
  EXPECT_GE(r.cases, props::kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Lattice, NonzeroMuIsIntersectionOfMaximalsProperty) {
  auto r = props::mu_nonzero_is_intersection(505);
  EXPECT_GE(r.cases, props::kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Lattice, EngineAgreementProperty) {
  auto r = props::engine_agreement(606);
  EXPECT_GE(r.cases, props::kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}
