#include <gtest/gtest.h>

#include <filesystem>

#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/io.hpp"
#include "pzeta/verifier.hpp"

using namespace pzeta;

namespace {

DirichletPoly T(std::uint64_t n, long a) { return DirichletPoly::term(n, Integer(a)); }
MultiPoly x(std::uint64_t p, std::uint32_t e = 1) { return MultiPoly::term(1, Monomial::variable(p, e)); }

}  // namespace

TEST(Verifier, Psl11Certificate) {
  auto c = verify_irreducible(11, 1, Variant::psl);
  EXPECT_EQ(c.verdict, "irreducible");
  EXPECT_EQ(c.t, 5u);
  EXPECT_EQ(c.r, 3u);
  EXPECT_EQ(c.strategy, "linear-variable");
  EXPECT_EQ(c.split_variable, 11u);
  ASSERT_TRUE(c.split_a && c.split_b && c.split_gcd);
  EXPECT_EQ(*c.split_a, 1 - 12 * x(2, 2) * x(3));
  EXPECT_EQ(*c.split_b, -22 + 66 * x(2) * x(3) + 132 * x(2, 2) * x(3));
  EXPECT_EQ(*c.split_gcd, MultiPoly(1));
  EXPECT_EQ(c.h_t.support(), (std::vector<std::uint64_t>{1, 11, 12, 66, 132}));
  EXPECT_EQ(c.m, 660u);
  EXPECT_TRUE(c.h_pi_t_is_one);
  EXPECT_TRUE(c.h_pi.is_one());
  EXPECT_FALSE(c.seral_dependent);
  EXPECT_TRUE(recheck(c).ok);
}

TEST(Verifier, MersenneRejected) {
  auto c = verify_irreducible(7, 1, Variant::psl);
  EXPECT_EQ(c.verdict, "hypotheses-not-met");
  EXPECT_FALSE(c.r.has_value());
  EXPECT_NE(c.r_reason.find("Mersenne"), std::string::npos);
  EXPECT_TRUE(recheck(c).ok);
}

TEST(Verifier, MissingTReported) {
  auto c = verify_irreducible(17, 1, Variant::psl);
  EXPECT_EQ(c.verdict, "hypotheses-not-met");
  EXPECT_FALSE(c.t.has_value());
  EXPECT_TRUE(c.r.has_value());
  ASSERT_FALSE(c.failures.empty());
  EXPECT_NE(c.failures[0].find("t absent"), std::string::npos);
}

TEST(Verifier, Psl13Certificate) {
  auto c = verify_irreducible(13, 1, Variant::psl);
  EXPECT_EQ(c.verdict, "irreducible");
  EXPECT_EQ(c.t, 3u);
  EXPECT_EQ(c.r, 7u);
  EXPECT_TRUE(recheck(c).ok);
}

TEST(Verifier, ShiftReduction) {
  for (std::uint64_t p : {11, 13}) {
    auto c = verify_irreducible(p, 2, Variant::psl);
    EXPECT_EQ(c.verdict, "irreducible") << p;
    EXPECT_TRUE(c.seral_dependent);
    EXPECT_EQ(c.h, shift(c.base, 2));
    EXPECT_TRUE(recheck(c).ok) << p;
  }
}

TEST(Verifier, PglVariant) {
  for (std::uint64_t p : {11, 13}) {
    auto c = verify_irreducible(p, 1, Variant::pgl);
    EXPECT_EQ(c.verdict, "irreducible") << p;
    EXPECT_TRUE(recheck(c).ok);
  }
}

TEST(Verifier, IrreducibleVerdictsSurviveBruteForceOracle) {
  for (std::uint64_t p : {11, 13}) {
    auto c = verify_irreducible(p, 1, Variant::psl);
    const MultiPoly f = phi(c.h_t);
    if (f.term_count() <= 8) {
      EXPECT_FALSE(brute_force_factor(f).has_value()) << p;
    }
  }
}

TEST(Verifier, RecheckDetectsTampering) {
  auto c = verify_irreducible(11, 1, Variant::psl);
  auto bad = c;
  bad.h.add(660, Integer(1));
  EXPECT_FALSE(recheck(bad).ok);
  bad = c;
  bad.m = 330;
  EXPECT_FALSE(recheck(bad).ok);
  bad = c;
  bad.split_gcd = 1 + x(2);
  EXPECT_FALSE(recheck(bad).ok);
  bad = c;
  bad.h_pi_t_is_one = false;
  EXPECT_FALSE(recheck(bad).ok);
  bad = c;
  bad.strategy = "binomial+lemma10";
  EXPECT_FALSE(recheck(bad).ok);
}

TEST(Verifier, RejectsBadInput) {
  EXPECT_THROW(verify_irreducible(9, 1, Variant::psl), InvalidArgument);
  EXPECT_THROW(verify_irreducible(3, 1, Variant::psl), InvalidArgument);
  EXPECT_THROW(verify_irreducible(11, 0, Variant::psl), InvalidArgument);
}

TEST(Verifier, PglIdentity) {
  for (std::uint64_t p : {5, 7}) {
    auto r = verify_pgl_identity(p);
    EXPECT_TRUE(r.equal) << p;
    EXPECT_EQ(r.mu_psl, -1);
    EXPECT_EQ(r.right.coefficient(1), 1);
  }
}

TEST(Io, PolynomialRoundTrip) {
  DirichletPoly f = T(1, 1) + T(11, -22);
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  f.add(3600, big);
  auto j = io::poly_to_json(f);
  EXPECT_TRUE(j[2]["a"].is_string());
  EXPECT_EQ(j[0]["n"], 1);
  EXPECT_EQ(io::poly_from_json(j), f);
  EXPECT_THROW(io::poly_from_json(io::json::object()), InvalidArgument);
}

TEST(Io, GroupRoundTripAndHash) {
  const PermGroup g = psl2(7);
  auto j = io::group_to_json(g);
  const PermGroup back = io::group_from_json(j);
  EXPECT_EQ(back.order(), 168);
  EXPECT_EQ(io::group_hash(g), io::group_hash(back));
  EXPECT_NE(io::group_hash(g), io::group_hash(pgl2(7)));
  j["generators"][0][0] = j["generators"][0][1];
  EXPECT_THROW(io::group_from_json(j), InvalidArgument);
}

TEST(Io, LatticeCacheRoundTrip) {
  GroupTable g(symmetric(4));
  auto lat = enumerate_subgroups(g);
  auto back = io::lattice_from_json(g, io::lattice_to_json(g, lat));
  EXPECT_EQ(back.polynomial(), lat.polynomial());
  EXPECT_EQ(back.containment, lat.containment);
  ASSERT_EQ(back.classes.size(), lat.classes.size());
  for (std::size_t i = 0; i < lat.classes.size(); ++i)
    EXPECT_EQ(back.classes[i].representative.elements, lat.classes[i].representative.elements);
  GroupTable other(alternating(4));
  EXPECT_THROW(io::lattice_from_json(other, io::lattice_to_json(g, lat)), InvalidArgument);
}

TEST(Io, CertificateRoundTripIsByteIdentical) {
  for (std::uint64_t p : {7, 11, 13, 17}) {
    auto c = verify_irreducible(p, p == 13 ? 2 : 1, Variant::psl);
    const auto j = io::certificate_to_json(c);
    const auto back = io::certificate_from_json(j);
    EXPECT_EQ(io::certificate_to_json(back).dump(), j.dump()) << p;
    EXPECT_EQ(recheck(back).ok, recheck(c).ok);
    EXPECT_EQ(io::certificate_to_json(verify_irreducible(p, p == 13 ? 2 : 1, Variant::psl)).dump(), j.dump());
  }
}

TEST(Io, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "pzeta_io_test.json";
  io::write_json_file(path, io::poly_to_json(T(1, 1) + T(2, -1)));
  EXPECT_EQ(io::poly_from_json(io::read_json_file(path)), T(1, 1) + T(2, -1));
  std::filesystem::remove(path);
  EXPECT_THROW(io::read_json_file(path), InvalidArgument);
}
