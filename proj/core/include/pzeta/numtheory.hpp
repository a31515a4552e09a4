#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace pzeta::numtheory {

using u64 = std::uint64_t;

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
struct PrimeFactorization {
  std::vector<std::pair<u64, unsigned>> factors;

  u64 value() const;
  std::set<u64> primes() const;
  bool operator==(const PrimeFactorization&) const = default;
};

bool is_prime(u64 n);

/// Trial-division factorization. Throws InvalidArgument for n == 0.
PrimeFactorization factorize(u64 n);

/// pi(n): the set of prime divisors of n.
std::set<u64> prime_divisors(u64 n);

/// Largest power of the prime v dividing n.
u64 v_part(u64 n, u64 v);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Smallest primitive prime divisor of a^n - 1, i.e. a prime dividing a^n - 1
/// but no a^e - 1 with 1 <= e < n. Absent exactly in the Zsigmondy
/// exceptions (n = 2 with a + 1 a power of two, and (a, n) = (2, 6)).
std::optional<u64> zsigmondy(u64 a, u64 n);

/// True iff the prime p has the form 2^s - 1.
bool is_mersenne_prime(u64 p);

/// Largest prime q with q | p - 1 and q not dividing p + 1, scanning the
/// prime divisors of p - 1 literally.
std::optional<u64> largest_t(u64 p);

/// Smallest prime l with (p + 1) / 2 < l < p - 1. Requires p > 11.
u64 bertrand_prime(u64 p);

}  // namespace pzeta::numtheory
