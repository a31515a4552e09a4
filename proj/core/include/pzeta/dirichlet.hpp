#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pzeta/multipoly.hpp"

namespace pzeta {

using PrimeSet = std::set<std::uint64_t>;

/// Finite Dirichlet series sum_n a_n / n^s with integer coefficients.
/// Stored as an ordered map n -> a_n without explicit zeros.
class DirichletPoly {
 public:
  using CoeffMap = std::map<std::uint64_t, Integer>;

  DirichletPoly() = default;
  static DirichletPoly one() { return term(1, Integer(1)); }
  static DirichletPoly term(std::uint64_t n, const Integer& a);
  static DirichletPoly from_map(const CoeffMap& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const CoeffMap& coefficients() const { return coeffs_; }
  Integer coefficient(std::uint64_t n) const;
  std::vector<std::uint64_t> support() const;
  std::size_t size() const { return coeffs_.size(); }

  /// Adds c to a_n.
  void add(std::uint64_t n, const Integer& c);

  DirichletPoly& operator+=(const DirichletPoly& other);
  DirichletPoly& operator-=(const DirichletPoly& other);
  friend DirichletPoly operator+(DirichletPoly a, const DirichletPoly& b) { return a += b; }
  friend DirichletPoly operator-(DirichletPoly a, const DirichletPoly& b) { return a -= b; }
  /// Dirichlet convolution: (F G)_n = sum_{de = n} F_d G_e.
  friend DirichletPoly operator*(const DirichletPoly& a, const DirichletPoly& b);
  DirichletPoly operator-() const;

  bool operator==(const DirichletPoly& other) const { return coeffs_ == other.coeffs_; }

  /// Text form such as "1 - 22/11^s - 12/12^s + 66/66^s", ordered by n.
  std::string to_string() const;

 private:
  CoeffMap coeffs_;
};

/// F^(pi): drops every term whose index is divisible by a prime of pi.
DirichletPoly project(const DirichletPoly& f, const PrimeSet& pi);

/// |F|_v: the largest v-part of an index carrying a nonzero coefficient.
std::uint64_t v_part_of(const DirichletPoly& f, std::uint64_t v);

/// lcm of the support of F.
std::uint64_t support_lcm(const DirichletPoly& f);

/// F(ns - n + 1): a_k / k^s becomes a_k k^(n-1) / (k^n)^s.
DirichletPoly shift(const DirichletPoly& f, unsigned n);

/// Ring isomorphism onto Z[x_p : p prime] sending a_n / n^s with
/// n = prod p^e to a_n prod x_p^e.
MultiPoly phi(const DirichletPoly& f);
DirichletPoly phi_inverse(const MultiPoly& f);

/// Membership in R': n | a_n for every index in the support.
bool in_r_prime(const DirichletPoly& f);
/// Membership in R'_pi under the support reading: in R', and every index
/// n > 1 of the support is a pi-number (all prime divisors lie in pi).
bool in_r_prime_pi(const DirichletPoly& f, const PrimeSet& pi);

/// sum_n a_n / n^k as an exact rational.
Rational evaluate(const DirichletPoly& f, unsigned k);

enum class LemmaVerdict { irreducible, reducible, inconclusive, hypotheses_not_met };
std::string to_string(LemmaVerdict v);

struct BinomialPowerTest {
  LemmaVerdict verdict = LemmaVerdict::inconclusive;
  MultiPoly image;                        // phi(F)
  std::optional<BinomialForm> form;       // F = 1 - a x_r^m
  std::optional<PowerDecomposition> power_of_a;
  std::optional<PowerDecomposition> power_of_minus_a;
  std::string reason;
};

/// One-directional binomial test: if phi(F) = 1 - a x_r^m and neither a nor
/// -a is a non-trivial power, F is irreducible. Never returns "reducible".
BinomialPowerTest binomial_power_test(const DirichletPoly& f, std::uint64_t r);

struct CoprimeProjectionTest {
  LemmaVerdict verdict = LemmaVerdict::hypotheses_not_met;
  std::uint64_t m = 0;                        // lcm of the support of h
  std::map<std::uint64_t, std::uint64_t> projected_v_parts;  // |h^(pi0)|_v
  std::map<std::uint64_t, std::uint64_t> m_v_parts;          // |m|_v
  DirichletPoly projected;                    // h^(pi)
  MultiPoly gcd;                              // gcd(phi h, phi h^(pi))
  std::vector<std::string> failures;
};

/// Given an attestation that h^(pi0) is irreducible, a nonempty pi inside
/// pi(m) with |h^(pi0)|_v = |m|_v for all v in pi, decides irreducibility of
/// h by whether gcd(h, h^(pi)) is a unit.
CoprimeProjectionTest coprime_projection_test(const DirichletPoly& h, const PrimeSet& pi0,
                                              const PrimeSet& pi,
                                              LemmaVerdict pi0_attestation);

}  // namespace pzeta
