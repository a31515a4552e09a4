#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pzeta/dirichlet.hpp"
#include "pzeta/group_table.hpp"
#include "pzeta/lattice.hpp"

namespace pzeta {

/// P_G by the supplements engine with N = G.
DirichletPoly p_g(const GroupTable& g);
/// P_G from the full lattice (|G| <= bound).
DirichletPoly p_g_full(const GroupTable& g, std::size_t bound = kDefaultLatticeBound);
/// P_{G,N}. Rejects non-normal N.
DirichletPoly p_gn(const GroupTable& g, const Subgroup& n);

/// Isomorphism type of a chief factor: p^d or S^n.
struct FactorDescriptor {
  bool abelian = true;
  std::uint64_t order = 1;        // |H/K|
  std::uint64_t base_order = 1;   // p, or |S|
  unsigned multiplicity = 1;      // d, or n
  std::string name;               // "C2^2", "Alt(5)", "Alt(5)^2", ...

  bool operator==(const FactorDescriptor& o) const { return name == o.name && order == o.order; }
  bool operator<(const FactorDescriptor& o) const {
    return order != o.order ? order < o.order : name < o.name;
  }
};

/// Name of a nonabelian simple group of the given order, when the order
/// determines it among small simple groups.
std::optional<std::string> simple_group_name(std::uint64_t order);

/// Describes H/K for a chief factor of G.
FactorDescriptor describe_factor(const GroupTable& g, const Subgroup& h, const Subgroup& k);

struct ChiefFactor {
  Subgroup upper;  // G_i
  Subgroup lower;  // G_{i+1}
  FactorDescriptor descriptor;
  bool frattini = false;
  DirichletPoly poly;  // P_{G/G_{i+1}, G_i/G_{i+1}}; 1 for Frattini factors
  /// Smallest i with tilde P_{L_A, i} equal to poly, when matching was requested.
  std::optional<unsigned> tilde_index;
  bool tilde_checked = false;
};

struct ChiefFactorization {
  std::vector<ChiefFactor> factors;  // from the top of the series down
  DirichletPoly product;
  DirichletPoly direct;  // P_G computed independently
  bool verified = false;
};

struct FactorizationOptions {
  bool match_tilde = false;
  unsigned max_tilde_index = 4;
};

ChiefFactorization chief_factorization(const GroupTable& g, const FactorizationOptions& opts = {});

/// Data attached to a minimal normal subgroup A of G.
struct MonolithicData {
  std::shared_ptr<const GroupTable> l;  // L_A
  Subgroup a;                           // A inside L_A
  bool abelian = true;
  FactorDescriptor descriptor;
  std::optional<Integer> gamma;         // |C_Aut(A)(L_A/A)| in the modulo-Inn reading
  std::string gamma_reason;
  Integer q = 1;                        // |End_{L_A}(A)|, 1 when A is nonabelian
  std::optional<std::size_t> complements;  // c(A), abelian case
  std::shared_ptr<const GroupTable> x;  // X_A, nonabelian case
  std::optional<Subgroup> s;            // S_A inside X_A
};

/// Rejects A that is not minimal normal. gamma is computed when |A| is within
/// the automorphism bound and left empty otherwise.
MonolithicData monolithic(const GroupTable& g, const Subgroup& a);

/// |{alpha in Aut(A) : [alpha, j] in Inn(A) for every j in J}| where J is the
/// set of automorphisms of A induced by conjugation with the generators of G.
Integer gamma_modulo_inner(const GroupTable& g, const Subgroup& a);
/// The literal centralizer of J in Aut(A).
Integer gamma_literal(const GroupTable& g, const Subgroup& a);
/// |End_G(A)| for an elementary abelian normal subgroup A.
Integer endomorphism_count(const GroupTable& g, const Subgroup& a);

/// P_{L_A,A} for i = 1; minus (1 + q + ... + q^(i-2)) gamma / |A|^s for i > 1.
DirichletPoly tilde_p(const MonolithicData& m, unsigned i);
DirichletPoly p_la(const MonolithicData& m);

struct SeralPrime {
  std::uint64_t r;
  DirichletPoly left;   // projection of P_{L,soc}
  DirichletPoly right;  // projection of shift(P_{X,S}, n)
  bool equal;
};

struct SeralReport {
  unsigned n = 1;
  std::uint64_t simple_order = 0;
  DirichletPoly p_l_soc;
  DirichletPoly p_x_s;
  DirichletPoly shifted;
  std::vector<SeralPrime> primes;
  bool holds = false;
  /// Same comparison without the shift; expected to fail somewhere when n >= 2.
  bool unshifted_holds = false;
};

/// L must have a nonabelian socle S^n that is its unique minimal normal subgroup.
SeralReport seral_check(const GroupTable& l);

inline constexpr double kExactEnumerationLimit = 1e8;

/// Exact proportion of generating k-tuples.
Rational generation_probability_exact(const GroupTable& g, unsigned k);

struct MonteCarloResult {
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double estimate = 0;
  double stderr_ = 0;
};

/// Uniform k-tuples through random_element; deterministic for fixed seed and
/// independent of the thread count.
MonteCarloResult generation_probability_mc(const PermGroup& g, unsigned k, std::uint64_t samples,
                                           std::uint64_t seed, unsigned threads = 1);

/// Least index of a proper subgroup H with HS = X; nullopt when only X supplements.
std::optional<std::size_t> min_supplement_index(const GroupTable& x, const Subgroup& s);

struct ComparisonReport {
  DirichletPoly p_first, p_second;
  bool polynomials_equal = false;
  std::vector<FactorDescriptor> factors_first, factors_second;  // non-Frattini, sorted
  std::vector<DirichletPoly> factor_polys_first, factor_polys_second;  // aligned with the above
  bool factor_names_equal = false;
  /// Same descriptors and the same factor polynomials.
  bool factors_equal = false;
};

ComparisonReport compare_groups(const GroupTable& g, const GroupTable& h);

std::string factor_multiset_string(const std::vector<FactorDescriptor>& f);

}  // namespace pzeta
