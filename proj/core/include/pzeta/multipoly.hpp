#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// A monomial in variables x_p indexed by primes: a sorted list of
/// (prime, exponent) pairs with positive exponents. The empty list is 1.
class Monomial {
 public:
  using Entry = std::pair<std::uint64_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::uint64_t prime, std::uint32_t exponent = 1);
  /// Accepts entries in any order; merges duplicates and drops zero exponents.
  static Monomial from_entries(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t degree(std::uint64_t prime) const;
  std::uint64_t total_degree() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this, when it exists.
  std::optional<Monomial> quotient_of(const Monomial& other) const;
  Monomial without(std::uint64_t prime) const;
  Monomial pow(std::uint32_t k) const;

  bool operator==(const Monomial&) const = default;
  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic order, x_2 > x_3 > x_5 > ... within a degree.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the integers. Terms are kept in
/// graded-lex order with no zero coefficients, so equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLex>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(std::uint64_t prime);
  static MultiPoly term(const Integer& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_unit() const;
  std::optional<Integer> constant_value() const;
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest term under graded lex. Requires a nonzero polynomial.
  const std::pair<const Monomial, Integer>& leading_term() const;
  const std::pair<const Monomial, Integer>& trailing_term() const;

  std::uint32_t degree_in(std::uint64_t prime) const;
  std::uint32_t min_degree_in(std::uint64_t prime) const;
  std::uint64_t total_degree() const;
  std::set<std::uint64_t> variables() const;

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  /// Coefficient of x_prime^k, as a polynomial free of x_prime.
  MultiPoly coefficient_in(std::uint64_t prime, std::uint32_t k) const;
  std::vector<MultiPoly> as_univariate(std::uint64_t prime) const;
  static MultiPoly from_univariate(std::uint64_t prime,
                                   const std::vector<MultiPoly>& coeffs);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly pow(unsigned k) const;
  /// Multiply every coefficient by c.
  MultiPoly scaled(const Integer& c) const;
  /// Multiply every monomial by m.
  MultiPoly shifted(const Monomial& m) const;

  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }

  /// Deterministic rendering, terms in increasing graded-lex order,
  /// e.g. "1 - 22*x11 - 12*x2^2*x3".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  TermMap terms_;
};

/// f / g when g divides f exactly over Z, otherwise nullopt.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

/// Greatest common divisor, normalized so the leading coefficient is positive.
/// gcd(f, 0) is the normalized f; gcd(0, 0) is 0.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

/// f with sign flipped if needed so that its leading coefficient is positive.
MultiPoly normalize_sign(const MultiPoly& f);

/// g with g^k == f, if one exists (k >= 1).
std::optional<MultiPoly> kth_root(const MultiPoly& f, unsigned k);

struct PowerDecomposition {
  MultiPoly root;
  unsigned exponent;
};

/// Finds f = g^k with k >= 2 prime, if such g exists. Constants +1 and -1
/// count as powers (1 = 1^2, -1 = (-1)^3). f must be nonzero.
std::optional<PowerDecomposition> is_perfect_power(const MultiPoly& f);

struct BinomialForm {
  MultiPoly a;
  std::uint32_t m;
};

/// Present iff f = 1 - a * x_r^m with a free of x_r and m >= 1.
std::optional<BinomialForm> binomial_form(const MultiPoly& f, std::uint64_t r);

enum class FactorVerdict { irreducible, reducible, inapplicable };
std::string to_string(FactorVerdict v);

/// Result of splitting f = A + B * x_v^m in one variable.
struct VariableSplit {
  FactorVerdict verdict = FactorVerdict::inapplicable;
  std::uint64_t variable = 0;
  std::uint32_t degree = 0;
  MultiPoly a;             // part free of x_v
  MultiPoly b;             // coefficient of x_v^m
  MultiPoly common;        // gcd(A, B)
  std::optional<MultiPoly> power_witness;  // root certifying reducibility
  std::string reason;
};

/// f = A + B * x_r with A, B free of x_r: irreducible iff gcd(A, B) is a unit.
/// Inapplicable when the x_r-degree of f is not 1.
VariableSplit linear_variable_irreducible(const MultiPoly& f, std::uint64_t r);

/// f = A + B * x_v^m with A, B free of x_v (m >= 1). Decides irreducibility
/// over Z by Gauss's lemma plus Capelli's criterion for x^m - c over the
/// fraction field of Z[other variables]. Reduces to the linear case for m = 1.
VariableSplit binomial_in_variable(const MultiPoly& f, std::uint64_t v);

struct BruteForceBounds {
  std::size_t max_terms = 3;
  long max_coefficient = 200;
  std::size_t max_candidates = 5'000'000;
};

/// Bounded search for a non-trivial factor of f. Candidates have support in
/// the exponent box of f, at most max_terms terms, and coefficients among the
/// signed divisors (up to max_coefficient) of coefficients of f. Finding
/// nothing is not a proof of irreducibility.
std::optional<MultiPoly> brute_force_factor(const MultiPoly& f,
                                            const BruteForceBounds& bounds = {});

}  // namespace pzeta
