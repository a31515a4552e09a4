#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/io.hpp"
#include "pzeta/numtheory.hpp"
#include "pzeta/registry.hpp"
#include "pzeta/verifier.hpp"
#include "pzeta/zeta.hpp"

namespace {

using namespace pzeta;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kHypotheses = 2, kVerification = 3, kSize = 4 };

struct Globals {
  unsigned threads = 1;
  std::size_t lattice_bound = kDefaultLatticeBound;
  std::uint64_t seed = 42;
  bool json_out = false;
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

PrimeSet parse_primes(const std::string& list) {
  PrimeSet out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto v = std::stoull(tok);
    if (!numtheory::is_prime(v)) throw InvalidArgument(tok + " is not prime");
    out.insert(v);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string certificate_summary(const IrredCertificate& c) {
  std::ostringstream os;
  os << "p = " << c.p << ", n = " << c.n << ", variant = " << to_string(c.variant) << '\n';
  os << "t = " << (c.t ? std::to_string(*c.t) : "absent (" + c.t_reason + ")") << '\n';
  os << "r = " << (c.r ? std::to_string(*c.r) : "absent (" + c.r_reason + ")") << '\n';
  if (c.t && c.r) {
    os << "h = " << c.h.to_string() << '\n';
    if (c.seral_dependent) os << "h obtained by shift from n = 1 (relies on the shifted socle identity)\n";
    os << "h^(t) = " << c.h_t.to_string() << '\n';
    os << "phi(h^(t)) = " << c.phi_h_t << '\n';
    os << "pi0 step: " << c.strategy << " -> " << to_string(c.pi0_verdict) << '\n';
    if (c.split_a)
      os << "  A = " << c.split_a->to_string() << "\n  B = " << c.split_b->to_string() << "\n  gcd(A, B) = "
         << c.split_gcd->to_string() << " (x_" << c.split_variable << "^" << c.split_degree << ")\n";
    if (c.binomial_a && c.strategy == "binomial+lemma10")
      os << "  a = " << c.binomial_a->to_string() << ", m = " << c.binomial_m << '\n';
    os << "m = " << c.m << '\n';
    for (const auto& [v, part] : c.projected_v_parts) {
      auto it = c.m_v_parts.find(v);
      os << "  |h^(t)|_" << v << " = " << part << ", |m|_" << v << " = "
         << (it == c.m_v_parts.end() ? 0 : it->second) << '\n';
    }
    os << "h^(pi u {t}) = " << c.h_pi_t.to_string() << (c.h_pi_t_is_one ? " (= 1)" : "") << '\n';
    if (c.gcd) os << "gcd(phi h, phi h^(pi)) = " << c.gcd->to_string() << '\n';
  }
  for (const auto& f : c.failures) os << "failure: " << f << '\n';
  os << "verdict: " << c.verdict;
  return os.str();
}

int verdict_exit(const std::string& verdict) {
  if (verdict == "irreducible") return kOk;
  if (verdict == "hypotheses-not-met") return kHypotheses;
  return kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic zeta functions of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for sampling")->check(CLI::PositiveNumber);
  app.add_option("--lattice-bound", g.lattice_bound, "Largest order for full lattice enumeration");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("--json", g.json_out, "Machine-readable output on stdout");

  int code = kOk;

  // pg
  std::string group_spec, group_spec2, out_path, engine = "supplements", cache_path, normal_spec = "whole";
  auto* pg = app.add_subcommand("pg", "Compute P_G");
  pg->add_option("group", group_spec, "builtin:NAME or file:PATH")->required();
  pg->add_option("--out", out_path, "Write the polynomial as JSON");
  pg->add_option("--engine", engine, "supplements or full")->check(CLI::IsMember({"supplements", "full"}));
  pg->add_option("--cache", cache_path, "Lattice cache file (full engine)");
  pg->callback([&] {
    GroupTable t(registry::parse_group(group_spec));
    DirichletPoly p;
    if (engine == "full") {
      SubgroupLattice lat;
      if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        lat = io::lattice_from_json(t, io::read_json_file(cache_path));
      } else {
        lat = enumerate_subgroups(t, g.lattice_bound);
        if (!cache_path.empty()) io::write_json_file(cache_path, io::lattice_to_json(t, lat));
      }
      p = lat.polynomial();
    } else {
      p = p_g(t);
    }
    if (!out_path.empty()) io::write_json_file(out_path, io::poly_to_json(p));
    emit(g, {{"order", t.size()}, {"poly", io::poly_to_json(p)}, {"text", p.to_string()}}, p.to_string());
  });

  auto* pgn = app.add_subcommand("pgn", "Compute P_{G,N}");
  pgn->add_option("group", group_spec)->required();
  pgn->add_option("--normal", normal_spec, "trivial|whole|socle|center|frattini|derived|chief:i|file:PATH")
      ->required();
  pgn->add_option("--out", out_path);
  pgn->callback([&] {
    GroupTable t(registry::parse_group(group_spec));
    const Subgroup n = registry::parse_normal(t, normal_spec);
    const auto p = p_gn(t, n);
    if (!out_path.empty()) io::write_json_file(out_path, io::poly_to_json(p));
    emit(g, {{"order", t.size()}, {"normal_order", n.order}, {"poly", io::poly_to_json(p)}, {"text", p.to_string()}},
         p.to_string());
  });

  bool tilde = false;
  auto* fac = app.add_subcommand("factorize", "Chief factorization of P_G");
  fac->add_option("group", group_spec)->required();
  fac->add_flag("--tilde", tilde, "Match each factor against the tilde polynomials");
  fac->add_option("--out", out_path);
  fac->callback([&] {
    GroupTable t(registry::parse_group(group_spec));
    FactorizationOptions opts;
    opts.match_tilde = tilde;
    const auto f = chief_factorization(t, opts);
    const auto j = io::factorization_to_json(f);
    if (!out_path.empty()) io::write_json_file(out_path, j);
    std::ostringstream os;
    for (const auto& c : f.factors) {
      os << c.descriptor.name << (c.frattini ? " (Frattini)" : "") << ": " << c.poly.to_string();
      if (c.tilde_checked) os << "  [tilde i = " << (c.tilde_index ? std::to_string(*c.tilde_index) : "none") << "]";
      os << '\n';
    }
    os << "P_G = " << f.direct.to_string() << '\n' << "product verified: " << yes_no(f.verified);
    emit(g, j, os.str());
    if (!f.verified) code = kVerification;
  });

  std::string poly_path, pi_list;
  unsigned shift_n = 1, s_value = 1;
  auto* proj = app.add_subcommand("project", "Delete terms with index divisible by a prime of pi");
  proj->add_option("poly", poly_path)->required()->check(CLI::ExistingFile);
  proj->add_option("--pi", pi_list, "Comma-separated primes")->required();
  proj->add_option("--out", out_path);
  proj->callback([&] {
    const auto p = project(io::poly_from_json(io::read_json_file(poly_path)), parse_primes(pi_list));
    if (!out_path.empty()) io::write_json_file(out_path, io::poly_to_json(p));
    emit(g, io::poly_to_json(p), p.to_string());
  });

  auto* sh = app.add_subcommand("shift", "Substitute s -> ns - n + 1");
  sh->add_option("poly", poly_path)->required()->check(CLI::ExistingFile);
  sh->add_option("--n", shift_n)->required()->check(CLI::PositiveNumber);
  sh->add_option("--out", out_path);
  sh->callback([&] {
    const auto p = shift(io::poly_from_json(io::read_json_file(poly_path)), shift_n);
    if (!out_path.empty()) io::write_json_file(out_path, io::poly_to_json(p));
    emit(g, io::poly_to_json(p), p.to_string());
  });

  auto* ev = app.add_subcommand("eval", "Evaluate at a non-negative integer s");
  ev->add_option("poly", poly_path)->required()->check(CLI::ExistingFile);
  ev->add_option("-s", s_value)->required();
  ev->callback([&] {
    const Rational v = evaluate(io::poly_from_json(io::read_json_file(poly_path)), s_value);
    emit(g, {{"s", s_value}, {"value", v.get_str()}, {"approx", v.get_d()}},
         v.get_str() + " (~" + std::to_string(v.get_d()) + ")");
  });

  std::uint64_t p_arg = 0;
  unsigned n_arg = 1;
  std::string variant = "psl", cert_path;
  auto* vi = app.add_subcommand("verify-irreducible", "Irreducibility certificate for P_{L,soc(L)}");
  vi->add_option("--p", p_arg)->required();
  vi->add_option("--n", n_arg)->check(CLI::PositiveNumber);
  vi->add_option("--variant", variant)->check(CLI::IsMember({"psl", "pgl", "PSL", "PGL"}));
  vi->add_option("--cert", cert_path, "Write the certificate as JSON");
  vi->callback([&] {
    const auto c = verify_irreducible(p_arg, n_arg, variant_from_string(variant));
    const auto j = io::certificate_to_json(c);
    if (!cert_path.empty()) io::write_json_file(cert_path, j);
    emit(g, j, certificate_summary(c));
    code = verdict_exit(c.verdict);
  });

  auto* rc = app.add_subcommand("recheck", "Re-validate a stored certificate");
  rc->add_option("cert", cert_path)->required()->check(CLI::ExistingFile);
  rc->callback([&] {
    const auto c = io::certificate_from_json(io::read_json_file(cert_path));
    const auto rep = recheck(c);
    std::string text = rep.ok ? "recheck passed; verdict " + c.verdict : "recheck FAILED";
    for (const auto& f : rep.failures) text += "\n  " + f;
    emit(g, {{"ok", rep.ok}, {"failures", rep.failures}, {"verdict", c.verdict}}, text);
    code = rep.ok ? kOk : kVerification;
  });

  auto* pgl = app.add_subcommand("pgl-identity", "Check P_{PGL,PSL} against the PGL Moebius sum");
  pgl->add_option("--p", p_arg)->required();
  pgl->callback([&] {
    const auto r = verify_pgl_identity(p_arg);
    emit(g, io::pgl_identity_to_json(r),
         "left  = " + r.left.to_string() + "\nright = " + r.right.to_string() + "\nmu(PSL) = " +
             std::to_string(r.mu_psl) + "\nequal: " + yes_no(r.equal));
    code = r.equal ? kOk : kVerification;
  });

  auto* se = app.add_subcommand("seral", "Projection identity for X wr C(n) against shift(P_{X,S}, n)");
  se->add_option("--p", p_arg)->required();
  se->add_option("--n", n_arg)->check(CLI::PositiveNumber);
  se->add_option("--variant", variant)->check(CLI::IsMember({"psl", "pgl", "PSL", "PGL"}));
  se->callback([&] {
    if (!numtheory::is_prime(p_arg) || p_arg < 5) throw InvalidArgument("--p must be a prime >= 5");
    const PermGroup x = variant_from_string(variant) == Variant::psl ? psl2(p_arg) : pgl2(p_arg);
    const PermGroup l = n_arg == 1 ? x : wreath_with_top(x, cyclic(n_arg));
    const auto order = l.order();
    if (order > GroupTable::kMaxOrder)
      throw SizeRefusal("|L| = " + order.get_str() + " exceeds the enumeration limit " +
                        std::to_string(GroupTable::kMaxOrder));
    const auto r = seral_check(GroupTable(l));
    std::ostringstream os;
    os << "P_{L,soc} = " << r.p_l_soc.to_string() << '\n';
    os << "P_{X,S}   = " << r.p_x_s.to_string() << '\n';
    for (const auto& sp : r.primes) os << "r = " << sp.r << ": " << (sp.equal ? "equal" : "DIFFERENT") << '\n';
    os << "holds: " << yes_no(r.holds);
    emit(g, io::seral_to_json(r), os.str());
    code = r.holds ? kOk : kVerification;
  });

  std::uint64_t samples = 1000000;
  auto* mc = app.add_subcommand("montecarlo", "Sampled generation probability against evaluate(P_G, s)");
  mc->add_option("group", group_spec)->required();
  mc->add_option("-s", s_value)->required()->check(CLI::PositiveNumber);
  mc->add_option("--samples", samples);
  mc->callback([&] {
    const PermGroup grp = registry::parse_group(group_spec);
    const auto r = generation_probability_mc(grp, s_value, samples, g.seed, g.threads);
    json j = {{"samples", r.samples}, {"successes", r.successes}, {"estimate", r.estimate}, {"stderr", r.stderr_},
              {"seed", g.seed}};
    std::ostringstream os;
    os << "estimate " << r.estimate << " +- " << r.stderr_ << " (" << r.successes << "/" << r.samples << ")";
    if (grp.order() <= GroupTable::kMaxOrder) {
      const Rational exact = evaluate(p_g(GroupTable(grp)), s_value);
      const double z = r.stderr_ > 0 ? std::abs(r.estimate - exact.get_d()) / r.stderr_ : 0.0;
      j["exact"] = exact.get_str();
      j["z"] = z;
      j["within_4_sigma"] = z <= 4.0;
      os << "\nexact " << exact.get_str() << " (~" << exact.get_d() << "), z = " << z;
      if (z > 4.0) code = kVerification;
    }
    emit(g, j, os.str());
  });

  auto* cmp = app.add_subcommand("compare", "Compare P_G and non-Frattini chief factors of two groups");
  cmp->add_option("first", group_spec)->required();
  cmp->add_option("second", group_spec2)->required();
  cmp->callback([&] {
    const auto r = compare_groups(GroupTable(registry::parse_group(group_spec)),
                                  GroupTable(registry::parse_group(group_spec2)));
    std::string text = std::string(r.polynomials_equal ? "P equal" : "P differ") + "; chief factors " +
                       (r.factors_equal ? "equal: " + factor_multiset_string(r.factors_first)
                                        : "differ: " + factor_multiset_string(r.factors_first) + " vs " +
                                              factor_multiset_string(r.factors_second) +
                                              (r.factor_names_equal ? " (factor polynomials differ)" : ""));
    emit(g, io::comparison_to_json(r), text);
  });

  std::uint64_t za = 2, zn = 2;
  auto* zs = app.add_subcommand("zsigmondy", "Smallest primitive prime divisor of a^n - 1");
  zs->add_option("--a", za)->required();
  zs->add_option("--n", zn)->required();
  zs->callback([&] {
    if (za < 2 || zn < 2) throw InvalidArgument("zsigmondy requires a >= 2 and n >= 2");
    const auto r = numtheory::zsigmondy(za, zn);
    emit(g, {{"a", za}, {"n", zn}, {"prime", r ? json(*r) : json(nullptr)}},
         r ? std::to_string(*r) : "none (Zsigmondy exception)");
  });

  auto fail = [&](const char* kind, const std::exception& e, int exit_code) {
    std::cerr << json{{"error", kind}, {"message", e.what()}}.dump() << '\n';
    return exit_code;
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const SizeRefusal& e) {
    return fail("size-refusal", e, kSize);
  } catch (const InvalidArgument& e) {
    return fail("invalid-argument", e, kUsage);
  } catch (const InternalError& e) {
    return fail("internal-error", e, kVerification);
  } catch (const nlohmann::json::exception& e) {
    return fail("invalid-json", e, kUsage);
  } catch (const std::exception& e) {
    return fail("error", e, kVerification);
  }
  return code;
}
