#include "pzeta/verifier.hpp"

#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/numtheory.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta {

std::string to_string(Variant v) { return v == Variant::psl ? "PSL" : "PGL"; }

Variant variant_from_string(const std::string& s) {
  if (s == "psl" || s == "PSL") return Variant::psl;
  if (s == "pgl" || s == "PGL") return Variant::pgl;
  throw InvalidArgument("unknown variant '" + s + "' (expected psl or pgl)");
}

namespace {

std::vector<std::uint64_t> variables_descending(const MultiPoly& f) {
  auto vars = f.variables();
  return {vars.rbegin(), vars.rend()};
}

void record_split(IrredCertificate& cert, const VariableSplit& s) {
  cert.split_variable = s.variable;
  cert.split_degree = s.degree;
  cert.split_a = s.a;
  cert.split_b = s.b;
  cert.split_gcd = s.common;
}

}  // namespace

void decide_pi0_step(IrredCertificate& cert, const BruteForceBounds& bounds) {
  const MultiPoly f = phi(cert.h_t);
  cert.phi_h_t = f.to_string();

  if (cert.r && cert.h_t.coefficient(1) == 1) {
    auto b = binomial_power_test(cert.h_t, *cert.r);
    if (b.form) {
      cert.binomial_a = b.form->a;
      cert.binomial_m = b.form->m;
    }
    if (b.verdict == LemmaVerdict::irreducible) {
      cert.strategy = "binomial+lemma10";
      cert.pi0_verdict = LemmaVerdict::irreducible;
      return;
    }
  }
  for (auto v : variables_descending(f)) {
    if (f.degree_in(v) != 1) continue;
    auto s = linear_variable_irreducible(f, v);
    if (s.verdict == FactorVerdict::inapplicable) continue;
    cert.strategy = "linear-variable";
    record_split(cert, s);
    cert.pi0_verdict =
        s.verdict == FactorVerdict::irreducible ? LemmaVerdict::irreducible : LemmaVerdict::reducible;
    return;
  }
  for (auto v : variables_descending(f)) {
    auto s = binomial_in_variable(f, v);
    if (s.verdict == FactorVerdict::inapplicable) continue;
    cert.strategy = "binomial-in-variable";
    record_split(cert, s);
    cert.pi0_verdict =
        s.verdict == FactorVerdict::irreducible ? LemmaVerdict::irreducible : LemmaVerdict::reducible;
    return;
  }
  cert.strategy = "oracle-brute-force";
  if (auto factor = brute_force_factor(f, bounds)) {
    cert.factor_found = *factor;
    cert.pi0_verdict = LemmaVerdict::reducible;
  } else {
    cert.pi0_verdict = LemmaVerdict::inconclusive;
  }
}

IrredCertificate verify_irreducible(std::uint64_t p, unsigned n, Variant variant,
                                    const VerifyOptions& opts) {
  if (p < 5 || !numtheory::is_prime(p))
    throw InvalidArgument("verify_irreducible: p must be a prime >= 5");
  if (n == 0) throw InvalidArgument("verify_irreducible: n must be >= 1");
  IrredCertificate cert;
  cert.p = p;
  cert.n = n;
  cert.variant = variant;

  cert.r = numtheory::zsigmondy(p, 2);
  if (!cert.r) {
    cert.r_reason = numtheory::is_mersenne_prime(p)
                        ? std::to_string(p) + " is a Mersenne prime; p^2 - 1 has no primitive prime divisor"
                        : "p^2 - 1 has no primitive prime divisor";
  }
  cert.t = numtheory::largest_t(p);
  if (!cert.t) cert.t_reason = "no prime divides p - 1 without dividing p + 1";
  if (!cert.r) cert.failures.push_back("r absent: " + cert.r_reason);
  if (!cert.t) cert.failures.push_back("t absent: " + cert.t_reason);
  if (!cert.failures.empty()) {
    cert.verdict = "hypotheses-not-met";
    return cert;
  }

  const PermGroup x = variant == Variant::psl ? psl2(p) : pgl2(p);
  GroupTable xt(x);
  const Subgroup s = variant == Variant::psl ? xt.whole() : socle(xt);
  cert.base = p_gn(xt, s);
  cert.h = n == 1 ? cert.base : shift(cert.base, n);
  cert.seral_dependent = n > 1;

  cert.h_t = project(cert.h, {*cert.t});
  decide_pi0_step(cert, opts.oracle_bounds);

  cert.pi = {p, *cert.r};
  auto test = coprime_projection_test(cert.h, {*cert.t}, cert.pi, cert.pi0_verdict);
  cert.m = test.m;
  cert.projected_v_parts = test.projected_v_parts;
  cert.m_v_parts = test.m_v_parts;
  cert.h_pi = test.projected;
  cert.gcd = test.gcd;
  cert.pi_verdict = test.verdict;
  for (auto& f : test.failures) cert.failures.push_back(f);
  PrimeSet all = cert.pi;
  all.insert(*cert.t);
  cert.h_pi_t = project(cert.h, all);
  cert.h_pi_t_is_one = cert.h_pi_t.is_one();

  if (cert.pi0_verdict == LemmaVerdict::reducible) {
    cert.failures.push_back("h^(t) is reducible");
    cert.verdict = "hypotheses-not-met";
  } else if (cert.pi0_verdict == LemmaVerdict::inconclusive) {
    cert.verdict = "inconclusive";
  } else {
    cert.verdict = to_string(test.verdict);
  }
  return cert;
}

RecheckReport recheck(const IrredCertificate& cert) {
  RecheckReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  if (cert.verdict == "hypotheses-not-met" && (!cert.t || !cert.r)) {
    if (cert.r != numtheory::zsigmondy(cert.p, 2)) fail("r does not match zsigmondy(p, 2)");
    if (cert.t != numtheory::largest_t(cert.p)) fail("t does not match largest_t(p)");
    return rep;
  }
  if (!cert.t || !cert.r) {
    fail("t or r missing");
    return rep;
  }
  if (*cert.r != numtheory::zsigmondy(cert.p, 2)) fail("r does not match zsigmondy(p, 2)");
  if (cert.t != numtheory::largest_t(cert.p)) fail("t does not match largest_t(p)");
  if (cert.n == 1 && !(cert.h == cert.base)) fail("h differs from the base polynomial");
  if (cert.n > 1 && !(cert.h == shift(cert.base, cert.n))) fail("h differs from shift(base, n)");
  if (!(cert.h_t == project(cert.h, {*cert.t}))) fail("h^(t) is not the projection of h");
  if (phi(cert.h_t).to_string() != cert.phi_h_t) fail("stored phi(h^(t)) rendering differs");

  IrredCertificate redo;
  redo.r = cert.r;
  redo.h_t = cert.h_t;
  decide_pi0_step(redo);
  if (redo.strategy != cert.strategy) fail("pi0 strategy differs on recomputation");
  if (redo.pi0_verdict != cert.pi0_verdict) fail("pi0 verdict differs on recomputation");
  if (cert.strategy == "linear-variable" || cert.strategy == "binomial-in-variable") {
    const MultiPoly f = phi(cert.h_t);
    if (!cert.split_a || !cert.split_b || !cert.split_gcd) {
      fail("split witnesses missing");
    } else {
      MultiPoly rebuilt = *cert.split_a +
                          *cert.split_b * MultiPoly::term(1, Monomial::variable(cert.split_variable, cert.split_degree));
      if (!(rebuilt == f)) fail("A + B x^m does not reproduce phi(h^(t))");
      if (!(gcd(*cert.split_a, *cert.split_b) == *cert.split_gcd)) fail("gcd(A, B) witness differs");
      if (cert.pi0_verdict == LemmaVerdict::irreducible && !cert.split_gcd->is_unit())
        fail("gcd(A, B) is not a unit");
    }
  }
  if (cert.strategy == "binomial+lemma10") {
    auto form = binomial_form(phi(cert.h_t), *cert.r);
    if (!form || !cert.binomial_a || !(form->a == *cert.binomial_a) || form->m != cert.binomial_m)
      fail("binomial form witness differs");
  }

  auto test = coprime_projection_test(cert.h, {*cert.t}, cert.pi, cert.pi0_verdict);
  if (test.m != cert.m) fail("m differs from lcm of the support");
  if (test.projected_v_parts != cert.projected_v_parts) fail("stored |h^(t)|_v differ");
  if (test.m_v_parts != cert.m_v_parts) fail("stored |m|_v differ");
  for (const auto& [v, part] : cert.projected_v_parts) {
    auto it = cert.m_v_parts.find(v);
    if (cert.verdict == "irreducible" && (it == cert.m_v_parts.end() || it->second != part))
      fail("v-part equality fails at " + std::to_string(v));
  }
  if (!(test.projected == cert.h_pi)) fail("h^(pi) is not the projection of h");
  PrimeSet all = cert.pi;
  all.insert(*cert.t);
  if (!(project(cert.h, all) == cert.h_pi_t)) fail("h^(pi u {t}) is not the projection of h");
  if (cert.h_pi_t.is_one() != cert.h_pi_t_is_one) fail("h^(pi u {t}) = 1 flag differs");
  if (!cert.gcd || !(test.gcd == *cert.gcd)) fail("gcd witness differs");
  if (cert.verdict == "irreducible") {
    if (cert.pi0_verdict != LemmaVerdict::irreducible) fail("irreducible verdict without pi0 step");
    if (test.verdict != LemmaVerdict::irreducible) fail("coprime projection step does not pass");
  }
  return rep;
}

PglIdentityReport verify_pgl_identity(std::uint64_t p) {
  PglIdentityReport rep;
  rep.p = p;
  GroupTable xt(pgl2(p));
  const Subgroup s = socle(xt);
  auto lattice = enumerate_subgroups(xt, std::max<std::size_t>(kDefaultLatticeBound, xt.size()));
  rep.left = p_gn(xt, s);
  for (const auto& c : lattice.classes) {
    if (!c.representative.elements.is_subset_of(s.elements)) continue;
    rep.right.add(s.order / c.order,
                  -Integer(static_cast<long>(c.mu)) * static_cast<unsigned long>(c.class_size));
    if (c.order == s.order) rep.mu_psl = c.mu;
  }
  rep.equal = rep.left == rep.right;
  return rep;
}

}  // namespace pzeta
