#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pzeta/dirichlet.hpp"
#include "pzeta/multipoly.hpp"

namespace pzeta {

enum class Variant { psl, pgl };
std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Auditable record of the irreducibility pipeline for P_{L, soc(L)} where
/// soc(L) = PSL(2,p)^n and L is built from X = PSL(2,p) or PGL(2,p).
struct IrredCertificate {
  std::uint64_t p = 0;
  unsigned n = 1;
  Variant variant = Variant::psl;

  std::optional<std::uint64_t> t;
  std::string t_reason;
  std::optional<std::uint64_t> r;
  std::string r_reason;

  DirichletPoly base;  // P_{X,S}
  DirichletPoly h;     // base for n = 1, shift(base, n) otherwise
  bool seral_dependent = false;

  // Step on pi0 = {t}.
  DirichletPoly h_t;
  std::string phi_h_t;
  std::string strategy = "none";
  std::optional<MultiPoly> binomial_a;
  std::uint32_t binomial_m = 0;
  std::uint64_t split_variable = 0;
  std::uint32_t split_degree = 0;
  std::optional<MultiPoly> split_a, split_b, split_gcd;
  std::optional<MultiPoly> factor_found;
  LemmaVerdict pi0_verdict = LemmaVerdict::inconclusive;

  // Step on pi = {p, r}.
  std::uint64_t m = 0;
  PrimeSet pi;
  std::map<std::uint64_t, std::uint64_t> projected_v_parts;
  std::map<std::uint64_t, std::uint64_t> m_v_parts;
  DirichletPoly h_pi;
  DirichletPoly h_pi_t;
  bool h_pi_t_is_one = false;
  std::optional<MultiPoly> gcd;
  LemmaVerdict pi_verdict = LemmaVerdict::hypotheses_not_met;

  std::vector<std::string> failures;
  std::string verdict = "inconclusive";  // irreducible | reducible | inconclusive | hypotheses-not-met
};

struct VerifyOptions {
  BruteForceBounds oracle_bounds{};
};

/// Runs the pipeline. Throws SizeRefusal when X is too large to enumerate.
IrredCertificate verify_irreducible(std::uint64_t p, unsigned n, Variant variant,
                                    const VerifyOptions& opts = {});

/// Decides the pi0 step for a given h^(t) image and records the witnesses.
void decide_pi0_step(IrredCertificate& cert, const BruteForceBounds& bounds = {});

struct RecheckReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-validates every recorded equality from the stored polynomials alone.
RecheckReport recheck(const IrredCertificate& cert);

struct PglIdentityReport {
  std::uint64_t p = 0;
  DirichletPoly left;   // P_{PGL, PSL}
  DirichletPoly right;  // -sum_{H <= PSL} mu_PGL(H) / |PSL : H|^s
  std::int64_t mu_psl = 0;
  bool equal = false;
};

PglIdentityReport verify_pgl_identity(std::uint64_t p);

}  // namespace pzeta
