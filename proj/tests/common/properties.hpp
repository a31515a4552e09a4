#pragma once

// Randomized property suites shared by the unit tests and the acceptance gate.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pzeta/constructions.hpp"
#include "pzeta/dirichlet.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/multipoly.hpp"
#include "pzeta/zeta.hpp"

namespace props {

using namespace pzeta;

struct Result {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

inline constexpr std::size_t kCases = 1000;

inline DirichletPoly random_dirichlet(std::mt19937_64& rng, std::size_t max_terms = 4,
                                      std::uint64_t max_index = 40) {
  DirichletPoly f;
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t i = 0; i < terms; ++i) {
    const long c = static_cast<long>(rng() % 11) - 5;
    f.add(1 + rng() % max_index, Integer(c));
  }
  return f;
}

inline PrimeSet random_primes(std::mt19937_64& rng) {
  static const std::uint64_t pool[] = {2, 3, 5, 7, 11, 13};
  PrimeSet pi;
  for (auto p : pool)
    if (rng() % 3 == 0) pi.insert(p);
  return pi;
}

inline MultiPoly random_multipoly(std::mt19937_64& rng, std::size_t max_terms = 4) {
  static const std::uint64_t vars[] = {2, 3, 5};
  MultiPoly f;
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<Monomial::Entry> e;
    for (auto v : vars)
      if (auto d = rng() % 3) e.emplace_back(v, static_cast<std::uint32_t>(d));
    f += MultiPoly::term(Integer(static_cast<long>(rng() % 9) - 4), Monomial::from_entries(e));
  }
  return f;
}

/// Random permutation group: either a subgroup of Sym(d), d <= 6, or a direct
/// product of two such groups of degree <= 4.
inline PermGroup random_group(std::mt19937_64& rng) {
  auto make = [&](std::size_t d) {
    std::vector<Perm> gens;
    const std::size_t m = 1 + rng() % 3;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Point> im(d);
      for (Point j = 0; j < d; ++j) im[j] = j;
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(std::move(im));
    }
    return PermGroup(d, std::move(gens));
  };
  if (rng() % 4 == 0) return direct_product(make(2 + rng() % 3), make(2 + rng() % 3));
  return make(3 + rng() % 4);
}

inline Result ring_laws(std::uint64_t seed, std::size_t cases = kCases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    auto f = random_dirichlet(rng), g = random_dirichlet(rng), h = random_dirichlet(rng);
    r.check((f * g) * h == f * (g * h), "Dirichlet associativity");
    r.check(f * g == g * f, "Dirichlet commutativity");
    r.check(f * (g + h) == f * g + f * h, "Dirichlet distributivity");
    r.check((f + (-f)).is_zero(), "Dirichlet additive inverse");
    r.check(f * DirichletPoly::one() == f, "Dirichlet identity");
    auto a = random_multipoly(rng), b = random_multipoly(rng), c = random_multipoly(rng);
    r.check((a * b) * c == a * (b * c), "MultiPoly associativity");
    r.check(a * b == b * a, "MultiPoly commutativity");
    r.check(a * (b + c) == a * b + a * c, "MultiPoly distributivity");
    r.check((a - a).is_zero(), "MultiPoly additive inverse");
  }
  return r;
}

inline Result projection_shift_laws(std::uint64_t seed, std::size_t cases = kCases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    auto f = random_dirichlet(rng), g = random_dirichlet(rng);
    auto pi = random_primes(rng);
    const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
    r.check(project(f * g, pi) == project(f, pi) * project(g, pi), "project multiplicative");
    r.check(project(f + g, pi) == project(f, pi) + project(g, pi), "project additive");
    r.check(project(project(f, pi), pi) == project(f, pi), "project idempotent");
    r.check(shift(f * g, n) == shift(f, n) * shift(g, n), "shift multiplicative");
    r.check(shift(f + g, n) == shift(f, n) + shift(g, n), "shift additive");
    r.check(shift(f, 1) == f, "shift by 1 is the identity");
    bool support_ok = true;
    auto sf = shift(f, n);
    for (const auto& [k, a] : f.coefficients()) {
      std::uint64_t kn = 1;
      for (unsigned j = 0; j < n; ++j) kn *= k;
      support_ok = support_ok && sf.coefficient(kn) != 0;
    }
    r.check(support_ok && sf.size() == f.size(), "support of shift is {k^n}");
  }
  return r;
}

inline Result phi_round_trip(std::uint64_t seed, std::size_t cases = kCases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    auto f = random_dirichlet(rng, 6, 200), g = random_dirichlet(rng);
    r.check(phi_inverse(phi(f)) == f, "phi_inverse(phi(F)) = F");
    r.check(phi(f * g) == phi(f) * phi(g), "phi multiplicative");
    r.check(phi(f + g) == phi(f) + phi(g), "phi additive");
    auto a = random_multipoly(rng);
    r.check(phi(phi_inverse(a)) == a, "phi(phi_inverse(A)) = A");
  }
  return r;
}

/// Full lattice of a random group: the Moebius values sum to zero.
inline Result mobius_sum_zero(std::uint64_t seed, std::size_t cases = kCases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    GroupTable g(random_group(rng));
    auto lat = enumerate_subgroups(g);
    Integer total = 0;
    for (const auto& c : lat.classes) total += Integer(static_cast<long>(c.mu)) * static_cast<unsigned long>(c.class_size);
    const bool nontrivial = g.size() > 1;
    r.check(!nontrivial || total == 0, "sum of mu over a lattice of order " + std::to_string(g.size()));
    r.check(!nontrivial || evaluate(lat.polynomial(), 0) == 0, "P_G(0) = 0");
    r.check(nontrivial || lat.polynomial().is_one(), "P_1 = 1");
  }
  return r;
}

inline Result mu_nonzero_is_intersection(std::uint64_t seed, std::size_t cases = kCases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    GroupTable g(random_group(rng));
    auto lat = enumerate_subgroups(g);
    auto maxes = maximal_subgroups(g);
    for (const auto& c : lat.classes) {
      if (c.mu == 0) continue;
      r.check(is_intersection_of_maximals(g, c.representative.elements, maxes),
              "class of order " + std::to_string(c.order) + " in a group of order " + std::to_string(g.size()));
    }
  }
  return r;
}

/// Supplement coefficients read off the full lattice agree with the
/// supplements engine, for every normal subgroup of a random group.
inline Result engine_agreement(std::uint64_t seed, std::size_t cases = kCases) {
  std::mt19937_64 rng(seed);
  Result r;
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    GroupTable g(random_group(rng));
    auto lat = enumerate_subgroups(g);
    r.check(lat.polynomial() == p_g(g), "P_G full vs supplements, order " + std::to_string(g.size()));
    for (const auto& n : lat.classes) {
      if (n.class_size != 1) continue;
      DirichletPoly expected;
      for (const auto& c : lat.classes) {
        if (c.mu == 0) continue;
        if (g.product_size(c.representative, n.representative) != g.size()) continue;
        expected.add(c.index, Integer(static_cast<long>(c.mu)) * static_cast<unsigned long>(c.class_size));
      }
      r.check(expected == p_gn(g, n.representative),
              "P_{G,N} with |G| = " + std::to_string(g.size()) + ", |N| = " + std::to_string(n.order));
    }
  }
  return r;
}

}  // namespace props
