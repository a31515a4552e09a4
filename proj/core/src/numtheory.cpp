#include "pzeta/numtheory.hpp"

#include <gmpxx.h>

#include <string>

#include "pzeta/error.hpp"

namespace pzeta::numtheory {

namespace {

void require_prime(u64 p, const char* what) {
  if (!is_prime(p))
    throw InvalidArgument(std::string(what) + ": " + std::to_string(p) +
                          " is not prime");
}

}  // namespace

u64 PrimeFactorization::value() const {
  u64 v = 1;
  for (auto [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

std::set<u64> PrimeFactorization::primes() const {
  std::set<u64> out;
  for (auto [p, e] : factors) out.insert(p);
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeFactorization factorize(u64 n) {
  if (n == 0) throw InvalidArgument("factorize: n must be >= 1");
  PrimeFactorization f;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(d, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::set<u64> prime_divisors(u64 n) { return factorize(n).primes(); }

u64 v_part(u64 n, u64 v) {
  require_prime(v, "v_part");
  if (n == 0) throw InvalidArgument("v_part: n must be >= 1");
  u64 part = 1;
  while (n % v == 0) {
    n /= v;
    part *= v;
  }
  return part;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::optional<u64> zsigmondy(u64 a, u64 n) {
  if (a < 2 || n < 2) throw InvalidArgument("zsigmondy: need a >= 2 and n >= 2");
  if (n > 4096) throw InvalidArgument("zsigmondy: n too large");
  // Strip every prime of a^n - 1 that already divides some a^e - 1, e | n, e < n.
  // What remains is a product of primitive primes, each 1 mod n.
  auto a_pow_minus_one = [&](u64 e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), a, e);
    return mpz_class(v - 1);
  };
  mpz_class rest = a_pow_minus_one(n);
  for (u64 e = 1; e < n; ++e) {
    if (n % e != 0) continue;
    mpz_class g = gcd(rest, a_pow_minus_one(e));
    while (g > 1) {
      rest /= g;
      g = gcd(rest, g);
    }
  }
  if (rest == 1) return std::nullopt;
  for (u64 q = n + 1;; q += n) {
    const mpz_class qq(static_cast<unsigned long>(q));
    if (qq * qq > rest) break;
    if (q > (u64{1} << 40)) throw InvalidArgument("zsigmondy: primitive part too large to factor");
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q)) return q;
  }
  if (!rest.fits_ulong_p()) throw InvalidArgument("zsigmondy: primitive prime exceeds 64 bits");
  return rest.get_ui();
}

bool is_mersenne_prime(u64 p) {
  require_prime(p, "is_mersenne_prime");
  u64 q = p + 1;
  return (q & (q - 1)) == 0;
}

std::optional<u64> largest_t(u64 p) {
  require_prime(p, "largest_t");
  if (p < 5) throw InvalidArgument("largest_t: p must be >= 5");
  std::optional<u64> best;
  for (u64 q : prime_divisors(p - 1))
    if ((p + 1) % q != 0) best = q;  // set is increasing
  return best;
}

u64 bertrand_prime(u64 p) {
  if (p <= 11) throw InvalidArgument("bertrand_prime: p must exceed 11");
  // (p + 1) / 2 < l  <=>  2l > p + 1
  for (u64 l = (p + 1) / 2 + 1; l + 1 < p; ++l)
    if (2 * l > p + 1 && is_prime(l)) return l;
  throw InternalError("bertrand_prime: no prime in ((p+1)/2, p-1) for p = " +
                      std::to_string(p));
}

}  // namespace pzeta::numtheory
