#include <algorithm>
#include <set>

#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta {

namespace {

using Map = std::vector<ElemId>;

Map compose(const Map& f, const Map& g) {  // x -> f(g(x))
  Map out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

Map invert(const Map& f) {
  Map out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<ElemId>(x);
  return out;
}

/// A as a standalone table, plus the automorphisms of A induced by
/// conjugation with the generators of G.
struct AutomorphismData {
  std::unique_ptr<GroupTable> table;
  std::vector<Map> induced;
};

AutomorphismData induced_automorphisms(const GroupTable& g, const Subgroup& a) {
  std::vector<Perm> gens;
  for (ElemId x : a.generators) gens.push_back(g.element(x));
  AutomorphismData d;
  d.table = std::make_unique<GroupTable>(PermGroup(g.group().degree(), gens));
  const auto& at = *d.table;
  for (ElemId s : g.generator_ids()) {
    const Perm& ps = g.element(s);
    const Perm psi = ps.inverse();
    Map m(at.size());
    for (ElemId x = 0; x < at.size(); ++x) m[x] = at.require_id(psi * at.element(x) * ps);
    d.induced.push_back(std::move(m));
  }
  return d;
}

Perm conjugation_perm(const GroupTable& t, const std::vector<ElemId>& domain,
                      const std::vector<std::uint32_t>& local, ElemId s) {
  std::vector<Point> img(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) img[i] = static_cast<Point>(local[t.conj(domain[i], s)]);
  return Perm(std::move(img));
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Integer gamma_modulo_inner(const GroupTable& g, const Subgroup& a) {
  auto d = induced_automorphisms(g, a);
  const auto& at = *d.table;
  auto aut = automorphism_group(at);
  std::set<Map> inner;
  for (ElemId y = 0; y < at.size(); ++y) {
    Map m(at.size());
    for (ElemId x = 0; x < at.size(); ++x) m[x] = at.conj(x, y);
    inner.insert(std::move(m));
  }
  std::vector<Map> induced_inv;
  for (const auto& j : d.induced) induced_inv.push_back(invert(j));
  unsigned long count = 0;
  for (const auto& alpha : aut.maps) {
    const Map alpha_inv = invert(alpha);
    bool ok = true;
    for (std::size_t i = 0; i < d.induced.size() && ok; ++i) {
      Map c = compose(alpha, compose(d.induced[i], compose(alpha_inv, induced_inv[i])));
      ok = inner.contains(c);
    }
    if (ok) ++count;
  }
  return Integer(count);
}

Integer gamma_literal(const GroupTable& g, const Subgroup& a) {
  auto d = induced_automorphisms(g, a);
  auto aut = automorphism_group(*d.table);
  unsigned long count = 0;
  for (const auto& alpha : aut.maps) {
    bool ok = true;
    for (const auto& j : d.induced)
      if (compose(alpha, j) != compose(j, alpha)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return Integer(count);
}

Integer endomorphism_count(const GroupTable& g, const Subgroup& a) {
  if (!g.is_abelian(a)) throw InvalidArgument("endomorphism_count: A is not abelian");
  if (a.order == 1) return 1;
  auto f = numtheory::factorize(a.order);
  if (f.factors.size() != 1) throw InvalidArgument("endomorphism_count: A is not a p-group");
  const std::uint64_t p = f.factors[0].first;
  const unsigned d = f.factors[0].second;
  const auto av = a.elements.to_vector();
  for (ElemId x : av)
    if (x != GroupTable::identity() && g.element_order(x) != p)
      throw InvalidArgument("endomorphism_count: A is not elementary abelian");

  std::vector<ElemId> basis;
  Subgroup span = g.trivial();
  for (ElemId x : av)
    if (!span.contains(x)) {
      basis.push_back(x);
      span = *g.join(span, x);
    }
  // Coordinates of every element of A.
  std::vector<std::vector<std::int64_t>> coords(g.size());
  std::vector<std::int64_t> c(d, 0);
  while (true) {
    ElemId e = GroupTable::identity();
    for (unsigned i = 0; i < d; ++i) e = g.mul(e, g.pow(basis[i], static_cast<std::uint64_t>(c[i])));
    coords[e] = c;
    unsigned i = 0;
    while (i < d && ++c[i] == static_cast<std::int64_t>(p)) c[i++] = 0;
    if (i == d) break;
  }
  // X M_s = M_s X for every generator s; unknowns X_{ij} at index i*d+j.
  const std::int64_t P = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> rows;
  for (ElemId s : g.generator_ids()) {
    std::vector<std::vector<std::int64_t>> m(d);
    for (unsigned i = 0; i < d; ++i) m[i] = coords[g.conj(basis[i], s)];
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        std::vector<std::int64_t> row(d * d, 0);
        for (unsigned k = 0; k < d; ++k) {
          row[i * d + k] = (row[i * d + k] + m[k][j]) % P;
          row[k * d + j] = ((row[k * d + j] - m[i][k]) % P + P) % P;
        }
        rows.push_back(std::move(row));
      }
  }
  std::size_t rank = 0;
  const std::size_t cols = static_cast<std::size_t>(d) * d;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = mod_inverse(rows[rank][col], P);
    for (auto& v : rows[rank]) v = v * inv % P;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::int64_t factor = rows[r][col];
      for (std::size_t k = 0; k < cols; ++k)
        rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % P + P) % P;
    }
    ++rank;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, cols - rank);
  return q;
}

MonolithicData monolithic(const GroupTable& g, const Subgroup& a) {
  if (a.order == 1) throw InvalidArgument("monolithic: A is trivial");
  if (!g.is_normal(a)) throw InvalidArgument("monolithic: A is not normal");
  for (const auto& cls : g.conjugacy_classes()) {
    ElemId x = cls.front();
    if (x == GroupTable::identity() || !a.contains(x)) continue;
    if (g.normal_closure(std::span<const ElemId>(&x, 1)).order != a.order)
      throw InvalidArgument("monolithic: A is not minimal normal");
  }
  MonolithicData md;
  md.abelian = g.is_abelian(a);
  md.descriptor = describe_factor(g, a, g.trivial());

  if (md.abelian) {
    auto lt = std::make_shared<GroupTable>(affine_extension(g, a));
    std::vector<ElemId> translations(lt->generator_ids().begin(),
                                     lt->generator_ids().begin() + static_cast<long>(a.generators.size()));
    md.a = lt->closure(translations);
    md.complements = complements_count(*lt, md.a);
    md.q = endomorphism_count(g, a);
    md.l = std::move(lt);
  } else {
    std::shared_ptr<GroupTable> lt;
    if (g.centralizer(a.generators).order == 1) {
      lt = std::make_shared<GroupTable>(g);
      md.a = a;
    } else {
      lt = std::make_shared<GroupTable>(conjugation_action(g, a));
      auto hom = g.homomorphism_to(*lt, lt->generator_ids());
      std::vector<ElemId> gens;
      for (ElemId x : a.generators) gens.push_back(hom[x]);
      md.a = lt->closure(gens);
    }
    // A component: least normal closure in A of a class representative of L inside A.
    std::optional<Subgroup> comp;
    for (const auto& cls : lt->conjugacy_classes()) {
      ElemId x = cls.front();
      if (x == GroupTable::identity() || !md.a.contains(x)) continue;
      Subgroup c = lt->normal_closure(std::span<const ElemId>(&x, 1), md.a.generators);
      if (!comp || c.order < comp->order) comp = std::move(c);
    }
    const Subgroup nrm = lt->normalizer(*comp);
    const auto domain = comp->elements.to_vector();
    std::vector<std::uint32_t> local(lt->size(), UINT32_MAX);
    for (std::size_t i = 0; i < domain.size(); ++i) local[domain[i]] = static_cast<std::uint32_t>(i);
    std::vector<Perm> xgens, sgens;
    for (ElemId s : nrm.generators) xgens.push_back(conjugation_perm(*lt, domain, local, s));
    for (ElemId s : comp->generators) sgens.push_back(conjugation_perm(*lt, domain, local, s));
    auto xt = std::make_shared<GroupTable>(PermGroup(domain.size(), xgens));
    std::vector<ElemId> sids;
    for (const auto& p : sgens) sids.push_back(xt->require_id(p));
    md.s = xt->closure(sids);
    md.x = std::move(xt);
    md.l = std::move(lt);
  }

  if (a.order <= kAutomorphismBound) {
    md.gamma = gamma_modulo_inner(g, a);
  } else {
    md.gamma_reason = "|A| = " + std::to_string(a.order) + " exceeds the automorphism bound " +
                      std::to_string(kAutomorphismBound);
  }
  return md;
}

DirichletPoly p_la(const MonolithicData& m) { return p_gn(*m.l, m.a); }

DirichletPoly tilde_p(const MonolithicData& m, unsigned i) {
  if (i == 0) throw InvalidArgument("tilde_p: i must be >= 1");
  DirichletPoly base = p_la(m);
  if (i == 1) return base;
  if (!m.gamma) throw SizeRefusal("tilde_p: gamma unavailable: " + m.gamma_reason);
  Integer geometric = 0, power = 1;
  for (unsigned k = 0; k + 2 <= i; ++k) {
    geometric += power;
    power *= m.q;
  }
  base.add(m.a.order, -(geometric * *m.gamma));
  return base;
}

SeralReport seral_check(const GroupTable& l) {
  const auto mins = minimal_normal_subgroups(l);
  if (mins.size() != 1) throw InvalidArgument("seral_check: L is not monolithic");
  const Subgroup& soc = mins.front();
  if (l.is_abelian(soc)) throw InvalidArgument("seral_check: socle is abelian");
  MonolithicData md = monolithic(l, soc);
  SeralReport r;
  r.n = md.descriptor.multiplicity;
  r.simple_order = md.s->order;
  r.p_l_soc = p_gn(l, soc);
  r.p_x_s = p_gn(*md.x, *md.s);
  r.shifted = shift(r.p_x_s, r.n);
  r.holds = true;
  r.unshifted_holds = true;
  for (auto prime : numtheory::prime_divisors(r.simple_order)) {
    SeralPrime sp;
    sp.r = prime;
    sp.left = project(r.p_l_soc, {prime});
    sp.right = project(r.shifted, {prime});
    sp.equal = sp.left == sp.right;
    r.holds = r.holds && sp.equal;
    r.unshifted_holds = r.unshifted_holds && (sp.left == project(r.p_x_s, {prime}));
    r.primes.push_back(std::move(sp));
  }
  return r;
}

}  // namespace pzeta
