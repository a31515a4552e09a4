#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "../common/oracle.hpp"
#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/group_table.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/registry.hpp"

using namespace pzeta;

namespace {

std::map<std::uint64_t, std::size_t> order_histogram(const GroupTable& g) {
  std::map<std::uint64_t, std::size_t> h;
  for (ElemId x = 0; x < g.size(); ++x) ++h[g.element_order(x)];
  return h;
}

}  // namespace

TEST(PermGroup, ChainOrders) {
  EXPECT_EQ(alternating(5).order(), 60);
  EXPECT_EQ(PermGroup(7, {}).order(), 1);
  EXPECT_EQ(psl2(11).order(), 660);
  EXPECT_EQ(psl2(5).order(), 60);
  EXPECT_EQ(pgl2(5).order(), 120);
  EXPECT_EQ(sl2(5).order(), 120);
  EXPECT_EQ(symmetric(8).order(), 40320);
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23})
    EXPECT_EQ(psl2(p).order(), p * (p * p - 1) / 2) << p;
}

TEST(PermGroup, ChainAgreesWithClosureOracle) {
  for (const auto& g : {alternating(5), symmetric(4), sl2(3), quaternion8(), dihedral(6), psl2(7)}) {
    EXPECT_EQ(g.order(), oracle::closure(g.degree(), g.generators()).size());
    GroupTable t(g);
    EXPECT_EQ(t.size(), g.order_u64());
  }
}

TEST(PermGroup, Membership) {
  std::mt19937_64 rng(5);
  const PermGroup g = psl2(11);
  const PermGroup s = symmetric(12);
  for (int i = 0; i < 200; ++i) {
    Perm x(12);
    for (int k = 0, n = 1 + static_cast<int>(rng() % 5); k < n; ++k)
      x = x * g.generators()[rng() % g.generators().size()];
    EXPECT_TRUE(g.contains(x));
  }
  int rejected = 0;
  for (int i = 0; i < 200; ++i) rejected += !g.contains(s.random_element(rng));
  EXPECT_GT(rejected, 190);
  EXPECT_FALSE(alternating(5).contains(Perm::from_cycles(5, {{0, 1}})));
}

TEST(PermGroup, RandomElementTrivialAndC2) {
  std::mt19937_64 rng(9);
  const PermGroup triv(4, {});
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(triv.random_element(rng).is_identity());
  const PermGroup c2 = cyclic(2);
  int id = 0;
  for (int i = 0; i < 10000; ++i) id += c2.random_element(rng).is_identity();
  EXPECT_GE(id, 4700);
  EXPECT_LE(id, 5300);
}

TEST(PermGroup, RandomElementChiSquareAlt5) {
  std::mt19937_64 rng(10);
  const PermGroup a5 = alternating(5);
  GroupTable t(a5);
  std::vector<std::size_t> counts(t.size(), 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[t.require_id(a5.random_element(rng))];
  const double expected = static_cast<double>(draws) / 60.0;
  double chi = 0;
  for (auto c : counts) chi += (c - expected) * (c - expected) / expected;
  // 59 degrees of freedom; the 0.999 quantile is about 98.3.
  EXPECT_LT(chi, 98.3);
}

TEST(PermGroup, Constructions) {
  const PermGroup c2c3 = direct_product(cyclic(2), cyclic(3));
  EXPECT_EQ(c2c3.order(), 6);
  GroupTable t(c2c3);
  EXPECT_TRUE(t.is_abelian(t.whole()));

  const PermGroup w = wreath_with_top(alternating(5), symmetric(2));
  EXPECT_EQ(w.order(), 7200);
  GroupTable wt(w);
  const auto mins = minimal_normal_subgroups(wt);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].order, 3600u);

  EXPECT_EQ(direct_product(alternating(4), dihedral(4)).order(), 12 * 8);
  EXPECT_EQ(wreath_with_top(cyclic(3), cyclic(2)).order(), 18);
}

TEST(PermGroup, QuotientOfSl25ByCenter) {
  GroupTable g(sl2(5));
  const Subgroup z = g.centralizer(g.generator_ids());
  ASSERT_EQ(z.order, 2u);
  auto q = quotient_by_normal(g, z);
  EXPECT_EQ(q.group.order(), 60);
  GroupTable qt(q.group);
  EXPECT_EQ(order_histogram(qt), order_histogram(GroupTable(psl2(5))));
  std::vector<ElemId> images;
  for (const auto& p : q.generator_images) images.push_back(qt.require_id(p));
  auto hom = g.homomorphism_to(qt, images);
  std::size_t kernel = 0;
  for (ElemId x = 0; x < g.size(); ++x) kernel += hom[x] == GroupTable::identity();
  EXPECT_EQ(kernel, 2u);
}

TEST(PermGroup, SubgroupOperations) {
  GroupTable g(symmetric(4));
  const Perm t = Perm::from_cycles(4, {{0, 1}});
  const ElemId tid = g.require_id(t);
  const Subgroup h = g.closure(std::vector<ElemId>{tid});
  EXPECT_EQ(h.order, 2u);
  EXPECT_EQ(g.conjugacy_orbit(h).conjugates.size(), 6u);
  EXPECT_EQ(g.core(h).order, 1u);
  EXPECT_EQ(g.normal_closure(std::vector<ElemId>{tid}).order, 24u);
  EXPECT_EQ(g.centralizer(std::vector<ElemId>{tid}).order, 4u);
  EXPECT_EQ(g.normalizer(h).order, 4u);
  const Perm dbl = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(g.normal_closure(std::vector<ElemId>{g.require_id(dbl)}).order, 4u);
  Bitset two = h.elements;
  two |= g.conjugate(h.elements, g.require_id(Perm::from_cycles(4, {{1, 2}})));
  EXPECT_THROW(g.from_elements(two), InvalidArgument);
}

TEST(PermGroup, PslIsSimple) {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    GroupTable g(psl2(p));
    for (const auto& cls : g.conjugacy_classes()) {
      const ElemId x = cls.front();
      if (x == GroupTable::identity()) continue;
      EXPECT_EQ(g.normal_closure(std::vector<ElemId>{x}).order, g.size()) << p;
    }
  }
}

TEST(PermGroup, PslElementOrders) {
  for (std::uint64_t p : {5, 7, 11, 13, 17}) {
    GroupTable g(psl2(p));
    for (ElemId x = 0; x < g.size(); ++x) {
      const auto o = g.element_order(x);
      EXPECT_TRUE(p % o == 0 || ((p - 1) / 2) % o == 0 || ((p + 1) / 2) % o == 0) << p << " " << o;
    }
  }
}

TEST(PermGroup, OrderMultiplicativity) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto a = symmetric(2 + rng() % 3), b = cyclic(1 + rng() % 5);
    EXPECT_EQ(direct_product(a, b).order(), a.order() * b.order());
    const mpz_class w = wreath_with_top(b, a).order();
    mpz_class expect;
    mpz_pow_ui(expect.get_mpz_t(), b.order().get_mpz_t(), a.degree());
    EXPECT_EQ(w, expect * a.order());
  }
}

TEST(PermGroup, SizeRefusal) { EXPECT_THROW(GroupTable(symmetric(8)), SizeRefusal); }

TEST(Registry, ParsesBuiltins) {
  EXPECT_EQ(registry::parse_group("builtin:PSL(2,11)").order(), 660);
  EXPECT_EQ(registry::parse_group("builtin:PGL(2,7)").order(), 336);
  EXPECT_EQ(registry::parse_group("builtin:SL(2,3)").order(), 24);
  EXPECT_EQ(registry::parse_group("builtin:Alt(5) x Alt(5)").order(), 3600);
  EXPECT_EQ(registry::parse_group("builtin:Alt(5) wr C(2)").order(), 7200);
  EXPECT_EQ(registry::parse_group("builtin:(C(2) x C(2)) wr Sym(2)").order(), 32);
  EXPECT_EQ(registry::parse_group("builtin:Q8").order(), 8);
  EXPECT_EQ(registry::parse_group("builtin:Dih(4)").order(), 8);
  EXPECT_THROW(registry::parse_group("builtin:PSL(2,9)"), InvalidArgument);
  EXPECT_THROW(registry::parse_group("builtin:Foo(3)"), InvalidArgument);
  EXPECT_THROW(registry::parse_group("Alt(5)"), InvalidArgument);
}

TEST(Registry, NormalSpecs) {
  GroupTable g(sl2(5));
  EXPECT_EQ(registry::parse_normal(g, "center").order, 2u);
  EXPECT_EQ(registry::parse_normal(g, "frattini").order, 2u);
  EXPECT_EQ(registry::parse_normal(g, "derived").order, 120u);
  GroupTable s4(symmetric(4));
  EXPECT_EQ(registry::parse_normal(s4, "derived").order, 12u);
  EXPECT_EQ(registry::parse_normal(s4, "socle").order, 4u);
  EXPECT_EQ(registry::parse_normal(s4, "chief:1").order, 12u);
  EXPECT_THROW(registry::parse_normal(s4, "chief:9"), InvalidArgument);
}
