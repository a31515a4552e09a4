#include <algorithm>
#include <random>
#include <unordered_set>

#include "detail/lattice_detail.hpp"
#include "pzeta/error.hpp"
#include "pzeta/lattice.hpp"

namespace pzeta {

namespace {

bool is_proper_supplement(const GroupTable& g, const Subgroup& m, const Subgroup& n) {
  return m.order < g.size() && g.product_size(m, n) == g.size();
}

/// Maximal subgroups M >= K with M not containing N, where N/K is a chief
/// factor of G. Returned with duplicates up to conjugacy removed.
std::vector<Subgroup> maximal_supplements_over(const GroupTable& g, const Subgroup& k,
                                               const Subgroup& n) {
  std::vector<Subgroup> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  auto keep = [&](const Subgroup& m, bool check) {
    if (seen.contains(m.elements)) return;
    for (auto& c : detail::bitset_orbit(g, m.elements)) seen.insert(std::move(c));
    if (!check || is_maximal(g, m)) out.push_back(m);
  };

  const bool abelian = is_abelian_section(g, n, k);
  // Complements: automatically maximal when the factor is abelian.
  for (const auto& m : complements_over(g, k, n)) keep(m, !abelian);
  if (abelian) return out;

  for (auto& c : subgroup_classes_between(g, k, n)) {
    if (c.order == k.order || c.order == n.order) continue;
    const Subgroup& d = c.representative;
    const Subgroup& m = *c.normalizer;
    if (!is_proper_supplement(g, m, n)) continue;
    if (!((m.elements & n.elements) == d.elements)) continue;
    keep(m, true);
  }
  return out;
}

}  // namespace

std::vector<ElemId> generators_modulo(const GroupTable& g, const Subgroup& n) {
  if (n.order == g.size()) return {};
  for (const auto& cls : g.conjugacy_classes()) {
    if (n.contains(cls.front())) continue;
    if (g.join(n, cls.front())->order == g.size()) return {cls.front()};
  }
  std::mt19937_64 rng(0x9d2c5680u);
  std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.size() - 1));
  for (int attempt = 0; attempt < 400; ++attempt) {
    ElemId pair[2] = {pick(rng), pick(rng)};
    auto j = detail::join_limited(g, n, pair, g.size());
    if (j->order == g.size()) return {pair[0], pair[1]};
  }
  std::vector<ElemId> out;
  Subgroup cur = n;
  for (ElemId s : g.generator_ids())
    if (!cur.contains(s)) {
      cur = *g.join(cur, s);
      out.push_back(s);
    }
  return out;
}

std::vector<Subgroup> complements_over(const GroupTable& g, const Subgroup& k, const Subgroup& n,
                                       std::size_t max_candidates) {
  const auto xs = generators_modulo(g, n);
  const std::size_t target = g.size() / n.order * k.order;

  // Right coset representatives of K in N.
  std::vector<ElemId> reps;
  Bitset covered(g.size());
  const auto kv = k.elements.to_vector();
  n.elements.for_each([&](ElemId x) {
    if (covered.test(x)) return;
    reps.push_back(x);
    for (ElemId y : kv) covered.set(g.mul(y, x));
  });

  double total = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) total *= static_cast<double>(reps.size());
  if (total > static_cast<double>(max_candidates))
    throw SizeRefusal("complement search needs " + std::to_string(static_cast<long double>(total)) +
                      " candidates");

  std::vector<Subgroup> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<std::size_t> odometer(xs.size(), 0);
  std::vector<ElemId> gens(xs.size());
  while (true) {
    for (std::size_t i = 0; i < xs.size(); ++i) gens[i] = g.mul(xs[i], reps[odometer[i]]);
    auto m = detail::join_limited(g, k, gens, target);
    if (m && m->order == target && (m->elements & n.elements) == k.elements &&
        seen.insert(m->elements).second)
      out.push_back(std::move(*m));
    std::size_t i = 0;
    while (i < xs.size() && ++odometer[i] == reps.size()) odometer[i++] = 0;
    if (i == xs.size()) break;
  }
  return out;
}

std::size_t complements_count(const GroupTable& g, const Subgroup& a) {
  if (!g.is_normal(a)) throw InvalidArgument("complements_count: subgroup is not normal");
  if (!g.is_abelian(a)) throw InvalidArgument("complements_count: subgroup is not abelian");
  return complements_over(g, g.trivial(), a).size();
}

bool is_maximal(const GroupTable& g, const Subgroup& m) {
  if (m.order >= g.size()) return false;
  Bitset covered = m.elements;
  const auto mv = m.elements.to_vector();
  for (ElemId x = 0; x < g.size(); ++x) {
    if (covered.test(x)) continue;
    // Anything above |G|/2 is the whole group.
    if (g.join(m, x, g.size() / 2)) return false;
    for (ElemId h : mv) covered.set(g.mul(h, x));
  }
  return true;
}

bool is_abelian_section(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      ElemId a = h.generators[i], b = h.generators[j];
      ElemId comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!k.contains(comm)) return false;
    }
  return true;
}

Subgroup minimal_normal_over(const GroupTable& g, const Subgroup& k) {
  std::optional<Subgroup> best;
  std::vector<ElemId> gens = k.generators;
  gens.push_back(0);
  for (const auto& cls : g.conjugacy_classes()) {
    if (k.contains(cls.front())) continue;
    gens.back() = cls.front();
    Subgroup c = g.normal_closure(gens);
    if (!best || c.order < best->order) best = std::move(c);
  }
  if (!best) throw InvalidArgument("minimal_normal_over: K is the whole group");
  return *best;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g) {
  std::vector<Subgroup> cands;
  for (const auto& cls : g.conjugacy_classes()) {
    if (cls.front() == GroupTable::identity()) continue;
    ElemId x = cls.front();
    Subgroup c = g.normal_closure(std::span<const ElemId>(&x, 1));
    bool dup = false;
    for (const auto& d : cands)
      if (d.elements == c.elements) dup = true;
    if (!dup) cands.push_back(std::move(c));
  }
  std::vector<Subgroup> out;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& d : cands)
      if (d.order < c.order && d.elements.is_subset_of(c.elements)) minimal = false;
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order != b.order ? a.order < b.order : a.elements < b.elements;
  });
  return out;
}

Subgroup socle(const GroupTable& g) {
  Subgroup s = g.trivial();
  for (const auto& m : minimal_normal_subgroups(g)) s = g.join_all(s, m.generators);
  return s;
}

std::vector<Subgroup> chief_series_over(const GroupTable& g, const Subgroup& k) {
  if (!g.is_normal(k)) throw InvalidArgument("chief_series_over: subgroup is not normal");
  std::vector<Subgroup> series{k};
  while (series.back().order < g.size()) series.push_back(minimal_normal_over(g, series.back()));
  return series;
}

std::vector<Subgroup> chief_series(const GroupTable& g) {
  auto s = chief_series_over(g, g.trivial());
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<SubgroupClass> maximal_subgroups(const GroupTable& g) {
  return maximal_subgroups(g, g.trivial());
}

std::vector<SubgroupClass> maximal_subgroups(const GroupTable& g, const Subgroup& k) {
  const auto series = chief_series_over(g, k);
  std::vector<SubgroupClass> classes;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    for (const auto& m : maximal_supplements_over(g, series[i], series[i + 1])) {
      SubgroupClass c;
      c.representative = m;
      c.order = m.order;
      c.conjugates = detail::bitset_orbit(g, m.elements);
      classes.push_back(std::move(c));
    }
  }
  detail::finalize_classes(classes, g.size());
  return classes;
}

Subgroup frattini(const GroupTable& g) {
  Bitset meet = g.whole().elements;
  for (const auto& c : maximal_subgroups(g))
    for (const auto& m : c.conjugates) meet &= m;
  return g.from_elements(meet);
}

bool is_frattini_factor(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
  for (const auto& c : maximal_subgroups(g, k))
    for (const auto& m : c.conjugates)
      if (!h.elements.is_subset_of(m)) return false;
  return true;
}

}  // namespace pzeta
