#include "pzeta/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::uint64_t prime, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.entries_.emplace_back(prime, exponent);
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (auto [p, e] : entries) {
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == p)
      m.entries_.back().second += e;
    else
      m.entries_.emplace_back(p, e);
  }
  return m;
}

std::uint32_t Monomial::degree(std::uint64_t prime) const {
  for (auto [p, e] : entries_)
    if (p == prime) return e;
  return 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto [p, e] : entries_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() || j != other.entries_.end()) {
    if (j == other.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.entries_.push_back(*i++);
    } else if (i == entries_.end() || j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (auto [p, e] : entries_)
    if (other.degree(p) < e) return false;
  return true;
}

std::optional<Monomial> Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial out;
  for (auto [p, e] : other.entries_) {
    std::uint32_t r = e - degree(p);
    if (r > 0) out.entries_.emplace_back(p, r);
  }
  return out;
}

Monomial Monomial::without(std::uint64_t prime) const {
  Monomial out;
  for (auto entry : entries_)
    if (entry.first != prime) out.entries_.push_back(entry);
  return out;
}

Monomial Monomial::pow(std::uint32_t k) const {
  if (k == 0) return {};
  Monomial out = *this;
  for (auto& entry : out.entries_) entry.second *= k;
  return out;
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (auto [p, e] : entries_) {
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(p);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da < db;
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first)  // the smaller prime is the larger variable
      return ea[i].first > eb[i].first;
    if (ea[i].second != eb[i].second) return ea[i].second < eb[i].second;
  }
  return ea.size() < eb.size();
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(std::uint64_t prime) {
  return term(Integer(1), Monomial::variable(prime));
}

MultiPoly MultiPoly::term(const Integer& c, const Monomial& m) {
  MultiPoly f;
  if (c != 0) f.terms_.emplace(m, c);
  return f;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool MultiPoly::is_unit() const {
  auto c = constant_value();
  return c && (*c == 1 || *c == -1);
}

std::optional<Integer> MultiPoly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

Integer MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const Monomial, Integer>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading_term of zero polynomial");
  return *terms_.rbegin();
}

const std::pair<const Monomial, Integer>& MultiPoly::trailing_term() const {
  if (terms_.empty()) throw InvalidArgument("trailing_term of zero polynomial");
  return *terms_.begin();
}

std::uint32_t MultiPoly::degree_in(std::uint64_t prime) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(prime));
  return d;
}

std::uint32_t MultiPoly::min_degree_in(std::uint64_t prime) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree(prime));
  return d;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::set<std::uint64_t> MultiPoly::variables() const {
  std::set<std::uint64_t> vars;
  for (const auto& [m, c] : terms_)
    for (auto [p, e] : m.entries()) vars.insert(p);
  return vars;
}

Integer MultiPoly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::coefficient_in(std::uint64_t prime, std::uint32_t k) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_)
    if (m.degree(prime) == k) out.terms_.emplace(m.without(prime), c);
  return out;
}

std::vector<MultiPoly> MultiPoly::as_univariate(std::uint64_t prime) const {
  std::vector<MultiPoly> coeffs(degree_in(prime) + 1);
  for (const auto& [m, c] : terms_)
    coeffs[m.degree(prime)].terms_.emplace(m.without(prime), c);
  return coeffs;
}

MultiPoly MultiPoly::from_univariate(std::uint64_t prime,
                                     const std::vector<MultiPoly>& coeffs) {
  MultiPoly out;
  for (std::uint32_t k = 0; k < coeffs.size(); ++k)
    out += coeffs[k].shifted(Monomial::variable(prime, k));
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  MultiPoly out = *this;
  for (auto& [m, coeff] : out.terms_) coeff *= c;
  return out;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  MultiPoly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << m.to_string();
    }
    first = false;
  }
  return os.str();
}

// -------------------------------------------------------- division and gcd

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw InvalidArgument("exact_divide by zero polynomial");
  MultiPoly quotient;
  MultiPoly rest = f;
  const auto& [gm, gc] = g.leading_term();
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading_term();
    auto qm = gm.quotient_of(rm);
    if (!qm || !mpz_divisible_p(rc.get_mpz_t(), gc.get_mpz_t())) return std::nullopt;
    Integer qc = rc / gc;
    MultiPoly t = MultiPoly::term(qc, *qm);
    quotient += t;
    rest -= t * g;
  }
  return quotient;
}

MultiPoly normalize_sign(const MultiPoly& f) {
  if (f.is_zero()) return f;
  return f.leading_term().second < 0 ? -f : f;
}

namespace {

MultiPoly divide_or_throw(const MultiPoly& f, const MultiPoly& g) {
  auto q = exact_divide(f, g);
  if (!q) throw InternalError("expected exact division failed: (" + f.to_string() +
                              ") / (" + g.to_string() + ")");
  return *q;
}

// gcd of the coefficients of f viewed as a polynomial in x_v.
MultiPoly content_in(const MultiPoly& f, std::uint64_t v) {
  MultiPoly g;
  for (const auto& c : f.as_univariate(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_unit()) break;
  }
  return g;
}

std::uint32_t univariate_degree(const std::vector<MultiPoly>& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1].is_zero()) --d;
  return d == 0 ? 0 : static_cast<std::uint32_t>(d - 1);
}

bool univariate_zero(const std::vector<MultiPoly>& p) {
  return std::all_of(p.begin(), p.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

// Pseudo-remainder of a by b in x_v, coefficients in Z[other variables].
std::vector<MultiPoly> pseudo_remainder(std::vector<MultiPoly> a,
                                        const std::vector<MultiPoly>& b) {
  std::uint32_t db = univariate_degree(b);
  const MultiPoly& lb = b[db];
  while (!univariate_zero(a) && univariate_degree(a) >= db) {
    std::uint32_t da = univariate_degree(a);
    MultiPoly la = a[da];
    std::uint32_t shift = da - db;
    for (auto& c : a) c = c * lb;
    for (std::uint32_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    a.resize(da);  // leading coefficient cancelled
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  if (f.is_constant() || g.is_constant()) {
    Integer c;
    mpz_gcd(c.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
    return MultiPoly(c);
  }
  auto vf = f.variables();
  auto vg = g.variables();
  std::uint64_t v = std::min(*vf.begin(), *vg.begin());
  if (!vf.contains(v)) return gcd(f, content_in(g, v));
  if (!vg.contains(v)) return gcd(content_in(f, v), g);

  MultiPoly cf = content_in(f, v);
  MultiPoly cg = content_in(g, v);
  MultiPoly c = gcd(cf, cg);
  auto a = divide_or_throw(f, cf).as_univariate(v);
  auto b = divide_or_throw(g, cg).as_univariate(v);
  if (univariate_degree(a) < univariate_degree(b)) std::swap(a, b);
  while (!univariate_zero(b)) {
    auto r = pseudo_remainder(a, b);
    a = std::move(b);
    if (univariate_zero(r)) {
      b.clear();
      break;
    }
    MultiPoly rp = MultiPoly::from_univariate(v, r);
    b = divide_or_throw(rp, content_in(rp, v)).as_univariate(v);
  }
  MultiPoly last = MultiPoly::from_univariate(v, a);
  MultiPoly primitive = divide_or_throw(last, content_in(last, v));
  return normalize_sign(c * primitive);
}

// ------------------------------------------------------------ perfect powers

namespace {

std::optional<Integer> integer_root(const Integer& c, unsigned k) {
  if (c < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(-c, k);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), c.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<MultiPoly> kth_root(const MultiPoly& f, unsigned k) {
  if (k == 0) throw InvalidArgument("kth_root: k must be >= 1");
  if (k == 1 || f.is_zero()) return f;
  if (auto c = f.constant_value()) {
    auto r = integer_root(*c, k);
    if (!r) return std::nullopt;
    return MultiPoly(*r);
  }
  std::uint64_t v = *f.variables().begin();
  auto coeffs = f.as_univariate(v);
  std::uint32_t top_degree = static_cast<std::uint32_t>(coeffs.size() - 1);
  if (top_degree % k != 0 || f.min_degree_in(v) % k != 0) return std::nullopt;
  std::uint32_t d = top_degree / k;
  auto top = kth_root(coeffs.back(), k);
  if (!top) return std::nullopt;

  MultiPoly root = top->shifted(Monomial::variable(v, d));
  MultiPoly divisor = top->pow(k - 1).scaled(Integer(k));
  for (std::uint32_t j = d; j-- > 0;) {
    MultiPoly rest = f - root.pow(k);
    if (rest.is_zero()) break;
    MultiPoly c = rest.coefficient_in(v, (k - 1) * d + j);
    if (c.is_zero()) continue;
    auto next = exact_divide(c, divisor);
    if (!next) return std::nullopt;
    root += next->shifted(Monomial::variable(v, j));
  }
  if (root.pow(k) != f) return std::nullopt;
  return root;
}

std::optional<PowerDecomposition> is_perfect_power(const MultiPoly& f) {
  if (f.is_zero()) throw InvalidArgument("is_perfect_power: zero polynomial");
  if (auto c = f.constant_value()) {
    if (*c == 1) return PowerDecomposition{MultiPoly(1L), 2};
    if (*c == -1) return PowerDecomposition{MultiPoly(-1L), 3};
    Integer mag = abs(*c);
    // k ranges over primes dividing every exponent of |c|; bounded by log2|c|.
    std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    for (unsigned k = 2; k <= bits; ++k) {
      if (!numtheory::is_prime(k)) continue;
      if (auto r = kth_root(f, k)) return PowerDecomposition{*r, k};
    }
    return std::nullopt;
  }
  std::uint64_t g = 0;
  for (auto v : f.variables()) {
    g = numtheory::gcd(g, f.degree_in(v));
    g = numtheory::gcd(g, f.min_degree_in(v));
  }
  if (g < 2) return std::nullopt;
  for (auto k : numtheory::prime_divisors(g))
    if (auto r = kth_root(f, static_cast<unsigned>(k)))
      return PowerDecomposition{*r, static_cast<unsigned>(k)};
  return std::nullopt;
}

// ---------------------------------------------------- irreducibility tests

std::optional<BinomialForm> binomial_form(const MultiPoly& f, std::uint64_t r) {
  if (f.constant_term() != 1) return std::nullopt;
  MultiPoly rest = f - MultiPoly(1L);
  if (rest.is_zero()) return std::nullopt;
  std::uint32_t m = rest.min_degree_in(r);
  if (m == 0 || rest.degree_in(r) != m) return std::nullopt;
  MultiPoly a = -rest.coefficient_in(r, m);
  return BinomialForm{std::move(a), m};
}

std::string to_string(FactorVerdict v) {
  switch (v) {
    case FactorVerdict::irreducible: return "irreducible";
    case FactorVerdict::reducible: return "reducible";
    case FactorVerdict::inapplicable: return "inapplicable";
  }
  return "?";
}

VariableSplit linear_variable_irreducible(const MultiPoly& f, std::uint64_t r) {
  VariableSplit out;
  out.variable = r;
  out.degree = f.degree_in(r);
  if (out.degree != 1) {
    out.reason = "x" + std::to_string(r) + "-degree is " + std::to_string(out.degree);
    return out;
  }
  return binomial_in_variable(f, r);
}

VariableSplit binomial_in_variable(const MultiPoly& f, std::uint64_t v) {
  VariableSplit out;
  out.variable = v;
  out.degree = f.degree_in(v);
  const std::uint32_t m = out.degree;
  if (m == 0) {
    out.reason = "x" + std::to_string(v) + " does not occur";
    return out;
  }
  for (const auto& [mono, c] : f.terms()) {
    auto d = mono.degree(v);
    if (d != 0 && d != m) {
      out.reason = "x" + std::to_string(v) + " occurs with degrees other than 0 and " +
                   std::to_string(m);
      return out;
    }
  }
  out.a = f.coefficient_in(v, 0);
  out.b = f.coefficient_in(v, m);
  out.common = gcd(out.a, out.b);
  if (!out.common.is_unit()) {
    out.verdict = FactorVerdict::reducible;
    out.reason = "A and B share the factor " + out.common.to_string();
    return out;
  }
  if (out.a.is_zero()) {
    // f = B x^m with B a unit.
    out.verdict = m == 1 ? FactorVerdict::irreducible : FactorVerdict::reducible;
    out.reason = m == 1 ? "f is a unit times x" : "f is a unit times a power of x";
    return out;
  }
  if (m == 1) {
    out.verdict = FactorVerdict::irreducible;
    out.reason = "primitive and linear in x" + std::to_string(v);
    return out;
  }
  // Capelli: x^m - c irreducible over K iff c is not a q-th power for every
  // prime q | m and, when 4 | m, c is not -4 e^4. Here c = -A/B.
  for (auto q : numtheory::prime_divisors(m)) {
    MultiPoly probe = -(out.a * out.b.pow(static_cast<unsigned>(q - 1)));
    if (auto root = kth_root(probe, static_cast<unsigned>(q))) {
      out.verdict = FactorVerdict::reducible;
      out.power_witness = *root;
      out.reason = "-A*B^" + std::to_string(q - 1) + " is a " + std::to_string(q) +
                   "-th power";
      return out;
    }
  }
  if (m % 4 == 0) {
    MultiPoly probe = out.a * out.b.pow(3);
    if (auto quarter = exact_divide(probe, MultiPoly(4L))) {
      if (auto root = kth_root(*quarter, 4)) {
        out.verdict = FactorVerdict::reducible;
        out.power_witness = *root;
        out.reason = "A*B^3/4 is a fourth power";
        return out;
      }
    }
  }
  out.verdict = FactorVerdict::irreducible;
  out.reason = "primitive, and -A/B passes Capelli's criterion for degree " +
               std::to_string(m);
  return out;
}

// ------------------------------------------------------ brute-force oracle

namespace {

std::vector<Integer> signed_divisors(const MultiPoly& f, long max_coefficient) {
  std::set<long> mags;
  for (const auto& [m, c] : f.terms()) {
    Integer mag = abs(c);
    for (long d = 1; d <= max_coefficient; ++d)
      if (mpz_divisible_ui_p(mag.get_mpz_t(), static_cast<unsigned long>(d))) mags.insert(d);
  }
  std::vector<Integer> out;
  for (long d : mags) {
    out.emplace_back(d);
    out.emplace_back(-d);
  }
  return out;
}

std::vector<Monomial> exponent_box(const MultiPoly& f) {
  std::vector<Monomial> box{Monomial{}};
  for (auto v : f.variables()) {
    std::vector<Monomial> next;
    for (const auto& m : box)
      for (std::uint32_t e = 0; e <= f.degree_in(v); ++e)
        next.push_back(m * Monomial::variable(v, e));
    box = std::move(next);
  }
  std::sort(box.begin(), box.end(), GradedLex{});
  return box;
}

}  // namespace

std::optional<MultiPoly> brute_force_factor(const MultiPoly& f,
                                            const BruteForceBounds& bounds) {
  if (f.is_zero() || f.is_unit()) return std::nullopt;
  // A non-unit integer content is a factor whenever f is not constant.
  Integer content = f.content();
  if (content > 1 && !f.is_constant()) return MultiPoly(content);
  if (f.is_constant()) return std::nullopt;

  const auto box = exponent_box(f);
  const auto coeffs = signed_divisors(f, bounds.max_coefficient);
  const Monomial& lead = f.leading_term().first;
  const Integer constant = f.constant_term();
  std::size_t tried = 0;

  auto accept = [&](const MultiPoly& g) -> bool {
    if (g.is_unit() || g.is_zero()) return false;
    if (g.leading_term().second < 0) return false;
    if (!g.leading_term().first.divides(lead)) return false;
    if (constant != 0) {
      Integer gc = g.constant_term();
      if (gc == 0 || !mpz_divisible_p(constant.get_mpz_t(), gc.get_mpz_t())) return false;
    }
    auto q = exact_divide(f, g);
    return q && !q->is_unit();
  };

  // Depth-first choice of up to max_terms (monomial, coefficient) pairs with
  // strictly increasing monomial position.
  std::vector<std::pair<std::size_t, Integer>> chosen;
  std::optional<MultiPoly> found;
  auto search = [&](auto&& self, std::size_t start) -> void {
    if (found || tried > bounds.max_candidates) return;
    if (!chosen.empty()) {
      MultiPoly g;
      for (const auto& [idx, c] : chosen) g += MultiPoly::term(c, box[idx]);
      ++tried;
      if (accept(g)) {
        found = g;
        return;
      }
    }
    if (chosen.size() == bounds.max_terms) return;
    for (std::size_t i = start; i < box.size(); ++i) {
      // With a nonzero constant term every factor carries one too.
      if (chosen.empty() && constant != 0 && i != 0) return;
      for (const auto& c : coeffs) {
        chosen.emplace_back(i, c);
        self(self, i + 1);
        chosen.pop_back();
        if (found) return;
      }
    }
  };
  search(search, 0);
  return found;
}

}  // namespace pzeta
