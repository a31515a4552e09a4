#include "pzeta/io.hpp"

#include <cstdio>
#include <fstream>

#include "pzeta/error.hpp"

namespace pzeta::io {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

json poly_to_json(const DirichletPoly& f) {
  json out = json::array();
  for (const auto& [n, a] : f.coefficients()) out.push_back({{"n", n}, {"a", integer_to_json(a)}});
  return out;
}

DirichletPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial: expected a JSON array of {n, a}");
  DirichletPoly f;
  for (const auto& rec : j) {
    if (!rec.contains("n") || !rec.contains("a")) throw InvalidArgument("polynomial: record needs n and a");
    const auto n = rec.at("n").get<std::int64_t>();
    if (n < 1) throw InvalidArgument("polynomial: index must be >= 1");
    f.add(static_cast<std::uint64_t>(n), integer_from_json(rec.at("a")));
  }
  return f;
}

json multipoly_to_json(const MultiPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) {
    json mono = json::array();
    for (const auto& [p, e] : m.entries()) mono.push_back({p, e});
    out.push_back({{"m", mono}, {"c", integer_to_json(c)}});
  }
  return out;
}

MultiPoly multipoly_from_json(const json& j) {
  MultiPoly f;
  for (const auto& rec : j) {
    std::vector<Monomial::Entry> entries;
    for (const auto& e : rec.at("m"))
      entries.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint32_t>());
    f += MultiPoly::term(integer_from_json(rec.at("c")), Monomial::from_entries(std::move(entries)));
  }
  return f;
}

json group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  json out = {{"degree", g.degree()}, {"generators", gens}};
  if (!g.name().empty()) out["name"] = g.name();
  return out;
}

PermGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InvalidArgument("group: expected {degree, generators}");
  const auto degree = j.at("degree").get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) {
    auto images = g.get<std::vector<Point>>();
    if (images.size() != degree) throw InvalidArgument("group: generator length differs from degree");
    std::vector<bool> seen(degree, false);
    for (Point x : images) {
      if (x >= degree || seen[x]) throw InvalidArgument("group: generator is not a permutation");
      seen[x] = true;
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens), j.value("name", std::string{}));
}

std::string group_hash(const PermGroup& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.degree());
  mix(g.generators().size());
  for (const auto& p : g.generators())
    for (Point x : p.images()) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json element_list(const GroupTable& g, const std::vector<ElemId>& ids) {
  json out = json::array();
  for (ElemId x : ids) {
    auto im = g.element(x).images();
    out.push_back(std::vector<Point>(im.begin(), im.end()));
  }
  return out;
}

}  // namespace

json lattice_to_json(const GroupTable& g, const SubgroupLattice& lattice) {
  json classes = json::array();
  for (const auto& c : lattice.classes) {
    classes.push_back({{"order", c.order},
                       {"index", c.index},
                       {"class_size", c.class_size},
                       {"mu", c.mu},
                       {"generators", element_list(g, c.representative.generators)}});
  }
  json out = {{"group_hash", group_hash(g.group())},
              {"group_order", lattice.group_order},
              {"mode", lattice.mode == LatticeMode::full ? "full" : "supplements"},
              {"classes", classes},
              {"containment", lattice.containment}};
  if (lattice.normal) {
    std::vector<ElemId> ids = lattice.normal->to_vector();
    out["normal"] = element_list(g, g.closure(ids).generators);
  }
  return out;
}

SubgroupLattice lattice_from_json(const GroupTable& g, const json& j) {
  if (j.at("group_hash").get<std::string>() != group_hash(g.group()))
    throw InvalidArgument("lattice cache: group hash mismatch");
  SubgroupLattice lat;
  lat.mode = j.at("mode").get<std::string>() == "full" ? LatticeMode::full : LatticeMode::supplements;
  lat.group_order = j.at("group_order").get<std::size_t>();
  auto ids_of = [&](const json& list) {
    std::vector<ElemId> ids;
    for (const auto& im : list) ids.push_back(g.require_id(Perm(im.get<std::vector<Point>>())));
    return ids;
  };
  for (const auto& rec : j.at("classes")) {
    SubgroupClass c;
    auto ids = ids_of(rec.at("generators"));
    c.representative = g.closure(ids);
    c.order = rec.at("order").get<std::size_t>();
    c.index = rec.at("index").get<std::size_t>();
    c.class_size = rec.at("class_size").get<std::size_t>();
    c.mu = rec.at("mu").get<std::int64_t>();
    if (c.representative.order != c.order) throw InvalidArgument("lattice cache: class order mismatch");
    auto orbit = g.conjugacy_orbit(c.representative);
    if (orbit.conjugates.size() != c.class_size) throw InvalidArgument("lattice cache: class size mismatch");
    c.conjugates = std::move(orbit.conjugates);
    c.normalizer = std::move(orbit.normalizer);
    lat.classes.push_back(std::move(c));
  }
  lat.containment = j.at("containment").get<std::vector<std::vector<std::uint32_t>>>();
  if (j.contains("normal")) {
    auto ids = ids_of(j.at("normal"));
    lat.normal = g.closure(ids).elements;
  }
  lat.rebuild_index();
  return lat;
}

json descriptor_to_json(const FactorDescriptor& d) {
  return {{"name", d.name},
          {"abelian", d.abelian},
          {"order", d.order},
          {"base_order", d.base_order},
          {"multiplicity", d.multiplicity}};
}

json factorization_to_json(const ChiefFactorization& f) {
  json factors = json::array();
  for (const auto& c : f.factors) {
    json rec = {{"factor", descriptor_to_json(c.descriptor)},
                {"frattini", c.frattini},
                {"poly", poly_to_json(c.poly)},
                {"text", c.poly.to_string()}};
    if (c.tilde_checked) rec["tilde_index"] = c.tilde_index ? json(*c.tilde_index) : json(nullptr);
    factors.push_back(std::move(rec));
  }
  return {{"factors", factors},
          {"product", poly_to_json(f.product)},
          {"direct", poly_to_json(f.direct)},
          {"text", f.direct.to_string()},
          {"verified", f.verified}};
}

json comparison_to_json(const ComparisonReport& r) {
  auto names = [](const std::vector<FactorDescriptor>& v) {
    json out = json::array();
    for (const auto& d : v) out.push_back(d.name);
    return out;
  };
  auto polys = [](const std::vector<DirichletPoly>& v) {
    json out = json::array();
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
  };
  return {{"first", {{"poly", poly_to_json(r.p_first)}, {"text", r.p_first.to_string()},
                     {"factors", names(r.factors_first)}, {"factor_polys", polys(r.factor_polys_first)}}},
          {"second", {{"poly", poly_to_json(r.p_second)}, {"text", r.p_second.to_string()},
                      {"factors", names(r.factors_second)}, {"factor_polys", polys(r.factor_polys_second)}}},
          {"polynomials_equal", r.polynomials_equal},
          {"factor_names_equal", r.factor_names_equal},
          {"factors_equal", r.factors_equal}};
}

json seral_to_json(const SeralReport& r) {
  json primes = json::array();
  for (const auto& p : r.primes)
    primes.push_back({{"r", p.r},
                      {"left", poly_to_json(p.left)},
                      {"right", poly_to_json(p.right)},
                      {"equal", p.equal}});
  return {{"n", r.n},
          {"simple_order", r.simple_order},
          {"p_l_soc", poly_to_json(r.p_l_soc)},
          {"p_x_s", poly_to_json(r.p_x_s)},
          {"shifted", poly_to_json(r.shifted)},
          {"primes", primes},
          {"holds", r.holds},
          {"unshifted_holds", r.unshifted_holds}};
}

json pgl_identity_to_json(const PglIdentityReport& r) {
  return {{"p", r.p},
          {"left", poly_to_json(r.left)},
          {"right", poly_to_json(r.right)},
          {"mu_psl", r.mu_psl},
          {"equal", r.equal}};
}

namespace {

json optional_prime(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::uint64_t> prime_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

json optional_multipoly(const std::optional<MultiPoly>& f) {
  return f ? multipoly_to_json(*f) : json(nullptr);
}

std::optional<MultiPoly> multipoly_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return multipoly_from_json(j);
}

json vparts_to_json(const std::map<std::uint64_t, std::uint64_t>& m) {
  json out = json::array();
  for (const auto& [v, part] : m) out.push_back({v, part});
  return out;
}

std::map<std::uint64_t, std::uint64_t> vparts_from_json(const json& j) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& e : j) out[e.at(0).get<std::uint64_t>()] = e.at(1).get<std::uint64_t>();
  return out;
}

LemmaVerdict verdict_from(const std::string& s) {
  for (auto v : {LemmaVerdict::irreducible, LemmaVerdict::reducible, LemmaVerdict::inconclusive,
                 LemmaVerdict::hypotheses_not_met})
    if (to_string(v) == s) return v;
  throw InvalidArgument("unknown verdict '" + s + "'");
}

}  // namespace

json certificate_to_json(const IrredCertificate& c) {
  json pi0 = {{"pi0", c.t ? json::array({*c.t}) : json::array()},
              {"h_t", poly_to_json(c.h_t)},
              {"phi_h_t", c.phi_h_t},
              {"strategy", c.strategy},
              {"verdict", to_string(c.pi0_verdict)}};
  if (c.binomial_a) pi0["binomial"] = {{"a", multipoly_to_json(*c.binomial_a)}, {"m", c.binomial_m}};
  if (c.split_a)
    pi0["split"] = {{"variable", c.split_variable},
                    {"degree", c.split_degree},
                    {"A", multipoly_to_json(*c.split_a)},
                    {"B", optional_multipoly(c.split_b)},
                    {"gcd", optional_multipoly(c.split_gcd)}};
  if (c.factor_found) pi0["factor_found"] = multipoly_to_json(*c.factor_found);

  json pi_step = {{"m", c.m},
                  {"pi", std::vector<std::uint64_t>(c.pi.begin(), c.pi.end())},
                  {"projected_v_parts", vparts_to_json(c.projected_v_parts)},
                  {"m_v_parts", vparts_to_json(c.m_v_parts)},
                  {"h_pi", poly_to_json(c.h_pi)},
                  {"h_pi_t", poly_to_json(c.h_pi_t)},
                  {"h_pi_t_is_one", c.h_pi_t_is_one},
                  {"gcd", optional_multipoly(c.gcd)},
                  {"verdict", to_string(c.pi_verdict)}};

  return {{"p", c.p},
          {"n", c.n},
          {"variant", to_string(c.variant)},
          {"t", optional_prime(c.t)},
          {"t_reason", c.t_reason},
          {"r", optional_prime(c.r)},
          {"r_reason", c.r_reason},
          {"base", poly_to_json(c.base)},
          {"h", poly_to_json(c.h)},
          {"h_text", c.h.to_string()},
          {"seral_dependent", c.seral_dependent},
          {"pi0_step", pi0},
          {"pi_step", pi_step},
          {"failures", c.failures},
          {"verdict", c.verdict}};
}

IrredCertificate certificate_from_json(const json& j) {
  IrredCertificate c;
  c.p = j.at("p").get<std::uint64_t>();
  c.n = j.at("n").get<unsigned>();
  c.variant = variant_from_string(j.at("variant").get<std::string>());
  c.t = prime_from(j.at("t"));
  c.t_reason = j.value("t_reason", std::string{});
  c.r = prime_from(j.at("r"));
  c.r_reason = j.value("r_reason", std::string{});
  c.base = poly_from_json(j.at("base"));
  c.h = poly_from_json(j.at("h"));
  c.seral_dependent = j.value("seral_dependent", false);
  const auto& pi0 = j.at("pi0_step");
  c.h_t = poly_from_json(pi0.at("h_t"));
  c.phi_h_t = pi0.at("phi_h_t").get<std::string>();
  c.strategy = pi0.at("strategy").get<std::string>();
  c.pi0_verdict = verdict_from(pi0.at("verdict").get<std::string>());
  if (pi0.contains("binomial")) {
    c.binomial_a = multipoly_from_json(pi0["binomial"].at("a"));
    c.binomial_m = pi0["binomial"].at("m").get<std::uint32_t>();
  }
  if (pi0.contains("split")) {
    const auto& s = pi0["split"];
    c.split_variable = s.at("variable").get<std::uint64_t>();
    c.split_degree = s.at("degree").get<std::uint32_t>();
    c.split_a = multipoly_from_json(s.at("A"));
    c.split_b = multipoly_from(s.at("B"));
    c.split_gcd = multipoly_from(s.at("gcd"));
  }
  if (pi0.contains("factor_found")) c.factor_found = multipoly_from_json(pi0["factor_found"]);
  const auto& ps = j.at("pi_step");
  c.m = ps.at("m").get<std::uint64_t>();
  for (auto v : ps.at("pi").get<std::vector<std::uint64_t>>()) c.pi.insert(v);
  c.projected_v_parts = vparts_from_json(ps.at("projected_v_parts"));
  c.m_v_parts = vparts_from_json(ps.at("m_v_parts"));
  c.h_pi = poly_from_json(ps.at("h_pi"));
  c.h_pi_t = poly_from_json(ps.at("h_pi_t"));
  c.h_pi_t_is_one = ps.at("h_pi_t_is_one").get<bool>();
  c.gcd = multipoly_from(ps.at("gcd"));
  c.pi_verdict = verdict_from(ps.at("verdict").get<std::string>());
  c.failures = j.value("failures", std::vector<std::string>{});
  c.verdict = j.at("verdict").get<std::string>();
  return c;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace pzeta::io
