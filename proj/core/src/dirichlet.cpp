#include "pzeta/dirichlet.hpp"

#include <sstream>

#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw SizeRefusal("Dirichlet index exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

}  // namespace

DirichletPoly DirichletPoly::term(std::uint64_t n, const Integer& a) {
  if (n == 0) throw InvalidArgument("Dirichlet index must be >= 1");
  DirichletPoly f;
  f.add(n, a);
  return f;
}

DirichletPoly DirichletPoly::from_map(const CoeffMap& coeffs) {
  DirichletPoly f;
  for (const auto& [n, a] : coeffs) f.add(n, a);
  return f;
}

bool DirichletPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 1 && coeffs_.begin()->second == 1;
}

Integer DirichletPoly::coefficient(std::uint64_t n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

std::vector<std::uint64_t> DirichletPoly::support() const {
  std::vector<std::uint64_t> out;
  out.reserve(coeffs_.size());
  for (const auto& [n, a] : coeffs_) out.push_back(n);
  return out;
}

void DirichletPoly::add(std::uint64_t n, const Integer& c) {
  if (n == 0) throw InvalidArgument("Dirichlet index must be >= 1");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

DirichletPoly& DirichletPoly::operator+=(const DirichletPoly& other) {
  for (const auto& [n, a] : other.coeffs_) add(n, a);
  return *this;
}

DirichletPoly& DirichletPoly::operator-=(const DirichletPoly& other) {
  for (const auto& [n, a] : other.coeffs_) add(n, -a);
  return *this;
}

DirichletPoly operator*(const DirichletPoly& a, const DirichletPoly& b) {
  DirichletPoly out;
  for (const auto& [n, x] : a.coeffs_)
    for (const auto& [m, y] : b.coeffs_) out.add(checked_mul(n, m), x * y);
  return out;
}

DirichletPoly DirichletPoly::operator-() const {
  DirichletPoly out = *this;
  for (auto& [n, a] : out.coeffs_) a = -a;
  return out;
}

std::string DirichletPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, a] : coeffs_) {
    if (first)
      os << (a < 0 ? "-" : "");
    else
      os << (a < 0 ? " - " : " + ");
    os << Integer(abs(a)).get_str();
    if (n != 1) os << '/' << n << "^s";
    first = false;
  }
  return os.str();
}

DirichletPoly project(const DirichletPoly& f, const PrimeSet& pi) {
  DirichletPoly out;
  for (const auto& [n, a] : f.coefficients()) {
    bool keep = true;
    for (auto p : pi)
      if (n % p == 0) {
        keep = false;
        break;
      }
    if (keep) out.add(n, a);
  }
  return out;
}

std::uint64_t v_part_of(const DirichletPoly& f, std::uint64_t v) {
  if (f.is_zero()) throw InvalidArgument("v_part_of: zero Dirichlet polynomial");
  std::uint64_t best = 1;
  for (const auto& [n, a] : f.coefficients()) best = std::max(best, numtheory::v_part(n, v));
  return best;
}

std::uint64_t support_lcm(const DirichletPoly& f) {
  std::uint64_t m = 1;
  for (const auto& [n, a] : f.coefficients()) {
    std::uint64_t g = numtheory::gcd(m, n);
    m = checked_mul(m / g, n);
  }
  return m;
}

DirichletPoly shift(const DirichletPoly& f, unsigned n) {
  if (n == 0) throw InvalidArgument("shift: n must be >= 1");
  DirichletPoly out;
  for (const auto& [k, a] : f.coefficients()) {
    std::uint64_t kn = 1;
    Integer scale = 1;
    for (unsigned i = 0; i < n; ++i) kn = checked_mul(kn, k);
    for (unsigned i = 1; i < n; ++i) scale *= static_cast<unsigned long>(k);
    out.add(kn, a * scale);
  }
  return out;
}

MultiPoly phi(const DirichletPoly& f) {
  MultiPoly out;
  for (const auto& [n, a] : f.coefficients()) {
    std::vector<Monomial::Entry> entries;
    for (auto [p, e] : numtheory::factorize(n).factors) entries.emplace_back(p, e);
    out += MultiPoly::term(a, Monomial::from_entries(std::move(entries)));
  }
  return out;
}

DirichletPoly phi_inverse(const MultiPoly& f) {
  DirichletPoly out;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t n = 1;
    for (auto [p, e] : m.entries()) {
      if (!numtheory::is_prime(p))
        throw InvalidArgument("phi_inverse: variable index " + std::to_string(p) +
                              " is not prime");
      for (std::uint32_t i = 0; i < e; ++i) n = checked_mul(n, p);
    }
    out.add(n, c);
  }
  return out;
}

bool in_r_prime(const DirichletPoly& f) {
  for (const auto& [n, a] : f.coefficients())
    if (!mpz_divisible_ui_p(a.get_mpz_t(), n)) return false;
  return true;
}

bool in_r_prime_pi(const DirichletPoly& f, const PrimeSet& pi) {
  if (!in_r_prime(f)) return false;
  for (const auto& [n, a] : f.coefficients())
    for (auto p : numtheory::prime_divisors(n))
      if (!pi.contains(p)) return false;
  return true;
}

Rational evaluate(const DirichletPoly& f, unsigned k) {
  Rational sum = 0;
  for (const auto& [n, a] : f.coefficients()) {
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), n, k);
    Rational term(a, denom);
    term.canonicalize();
    sum += term;
  }
  return sum;
}

std::string to_string(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::irreducible: return "irreducible";
    case LemmaVerdict::reducible: return "reducible";
    case LemmaVerdict::inconclusive: return "inconclusive";
    case LemmaVerdict::hypotheses_not_met: return "hypotheses-not-met";
  }
  return "?";
}

BinomialPowerTest binomial_power_test(const DirichletPoly& f, std::uint64_t r) {
  if (f.coefficient(1) != 1)
    throw InvalidArgument("binomial_power_test: constant term must be 1");
  BinomialPowerTest out;
  out.image = phi(f);
  out.form = binomial_form(out.image, r);
  if (!out.form) {
    out.reason = "phi(F) is not of the form 1 - a*x" + std::to_string(r) + "^m";
    return out;
  }
  out.power_of_a = is_perfect_power(out.form->a);
  out.power_of_minus_a = is_perfect_power(-out.form->a);
  if (out.power_of_a || out.power_of_minus_a) {
    out.reason = "a or -a is a non-trivial power";
    return out;
  }
  out.verdict = LemmaVerdict::irreducible;
  out.reason = "neither a nor -a is a non-trivial power";
  return out;
}

CoprimeProjectionTest coprime_projection_test(const DirichletPoly& h, const PrimeSet& pi0,
                                              const PrimeSet& pi,
                                              LemmaVerdict pi0_attestation) {
  CoprimeProjectionTest out;
  if (h.is_zero()) throw InvalidArgument("coprime_projection_test: h is zero");
  out.m = support_lcm(h);
  const auto m_primes = numtheory::prime_divisors(out.m);
  const DirichletPoly h0 = project(h, pi0);

  if (pi0_attestation != LemmaVerdict::irreducible)
    out.failures.push_back("h^(pi0) is not attested irreducible");
  if (pi.empty()) out.failures.push_back("pi is empty");
  for (auto v : pi) {
    if (!m_primes.contains(v)) {
      out.failures.push_back(std::to_string(v) + " does not divide m = " +
                             std::to_string(out.m));
      continue;
    }
    if (h0.is_zero()) {
      out.failures.push_back("h^(pi0) is zero");
      break;
    }
    out.projected_v_parts[v] = v_part_of(h0, v);
    out.m_v_parts[v] = numtheory::v_part(out.m, v);
    if (out.projected_v_parts[v] != out.m_v_parts[v])
      out.failures.push_back("|h^(pi0)|_" + std::to_string(v) + " = " +
                             std::to_string(out.projected_v_parts[v]) + " differs from |m|_" +
                             std::to_string(v) + " = " + std::to_string(out.m_v_parts[v]));
  }
  out.projected = project(h, pi);
  out.gcd = gcd(phi(h), phi(out.projected));
  if (!out.failures.empty()) {
    out.verdict = LemmaVerdict::hypotheses_not_met;
    return out;
  }
  out.verdict = out.gcd.is_unit() ? LemmaVerdict::irreducible : LemmaVerdict::reducible;
  return out;
}

}  // namespace pzeta
