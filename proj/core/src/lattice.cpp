#include "pzeta/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "detail/lattice_detail.hpp"
#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta {

namespace detail {

std::vector<Bitset> bitset_orbit(const GroupTable& g, const Bitset& h) {
  std::vector<Bitset> orbit{h};
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  seen.emplace(h, 0);
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (std::size_t i = 0; i < g.generator_ids().size(); ++i) {
      Bitset c = g.conjugate_by_gen(orbit[k], i);
      if (seen.emplace(c, orbit.size()).second) orbit.push_back(std::move(c));
    }
  return orbit;
}

void finalize_classes(std::vector<SubgroupClass>& classes, std::size_t group_order) {
  std::stable_sort(classes.begin(), classes.end(),
                   [](const SubgroupClass& a, const SubgroupClass& b) { return a.order < b.order; });
  for (auto& c : classes) {
    c.index = group_order / c.order;
    c.class_size = c.conjugates.size();
  }
}

void mobius_topdown(std::vector<SubgroupClass>& classes,
                    std::vector<std::vector<std::uint32_t>>* containment) {
  const std::size_t nc = classes.size();
  if (containment) containment->assign(nc, std::vector<std::uint32_t>(nc, 0));
  for (std::size_t a = nc; a-- > 0;) {
    auto& ca = classes[a];
    if (a == nc - 1) {
      ca.mu = 1;
      if (containment) (*containment)[a][a] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t b = a + 1; b < nc; ++b) {
      const auto& cb = classes[b];
      if (cb.order == ca.order || cb.order % ca.order != 0) continue;
      if (!containment && cb.mu == 0) continue;
      std::uint32_t count = 0;
      for (const auto& member : cb.conjugates)
        if (ca.representative.elements.is_subset_of(member)) ++count;
      if (containment) (*containment)[a][b] = count;
      sum += cb.mu * static_cast<std::int64_t>(count);
    }
    if (containment) (*containment)[a][a] = 1;
    ca.mu = -sum;
  }
}

std::optional<Subgroup> join_limited(const GroupTable& g, Subgroup h,
                                     std::span<const ElemId> gens, std::size_t limit) {
  for (ElemId x : gens) {
    if (h.contains(x)) continue;
    auto next = g.join(h, x, limit);
    if (!next) return std::nullopt;
    h = std::move(*next);
  }
  return h;
}

}  // namespace detail

std::optional<std::size_t> SubgroupLattice::find_class(const Bitset& elements) const {
  auto it = index_.find(elements);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void SubgroupLattice::rebuild_index() {
  index_.clear();
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& m : classes[c].conjugates) index_.emplace(m, c);
}

std::size_t SubgroupLattice::subgroup_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.class_size;
  return n;
}

DirichletPoly SubgroupLattice::polynomial() const {
  DirichletPoly f;
  for (const auto& c : classes)
    if (c.mu != 0)
      f.add(c.index, Integer(static_cast<long>(c.mu)) * static_cast<unsigned long>(c.class_size));
  return f;
}

std::vector<SubgroupClass> subgroup_classes_between(const GroupTable& g, const Subgroup& k,
                                                    const Subgroup& n) {
  std::vector<SubgroupClass> classes;
  std::unordered_map<Bitset, std::size_t, BitsetHash> where;

  auto add_class = [&](const Subgroup& h) {
    auto orbit = g.conjugacy_orbit(h, true);
    SubgroupClass c;
    c.representative = h;
    c.order = h.order;
    c.normalizer = std::move(orbit.normalizer);
    c.conjugates = std::move(orbit.conjugates);
    for (const auto& m : c.conjugates) where.emplace(m, classes.size());
    classes.push_back(std::move(c));
  };
  add_class(k);

  const auto n_elems = n.elements.to_vector();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Subgroup h = classes[ci].representative;
    const Subgroup norm = *classes[ci].normalizer;
    if (h.order == n.order) continue;
    Bitset done = h.elements;
    for (ElemId x : n_elems) {
      if (done.test(x)) continue;
      bool candidate = false;
      for (auto p : numtheory::prime_divisors(g.element_order(x)))
        if (h.contains(g.pow(x, p))) {
          candidate = true;
          break;
        }
      if (!candidate) continue;
      // <H, x> is unchanged by H x H and moves to a conjugate under N_G(H).
      std::vector<ElemId> stack{x};
      done.set(x);
      while (!stack.empty()) {
        ElemId y = stack.back();
        stack.pop_back();
        auto push = [&](ElemId z) {
          if (!done.test(z)) {
            done.set(z);
            stack.push_back(z);
          }
        };
        for (ElemId s : h.generators) {
          push(g.mul(s, y));
          push(g.mul(y, s));
        }
        for (ElemId s : norm.generators) push(g.conj(y, s));
      }
      Subgroup j = *g.join(h, x);
      if (!where.contains(j.elements)) add_class(j);
    }
  }
  detail::finalize_classes(classes, g.size());
  return classes;
}

SubgroupLattice enumerate_subgroups(const GroupTable& g, std::size_t bound) {
  if (g.size() > bound)
    throw SizeRefusal("full lattice refused for |G| = " + std::to_string(g.size()) +
                      " above bound " + std::to_string(bound) + "; use supplements mode");
  SubgroupLattice lattice;
  lattice.mode = LatticeMode::full;
  lattice.group_order = g.size();
  lattice.classes = subgroup_classes_between(g, g.trivial(), g.whole());
  mobius_full(lattice);
  lattice.rebuild_index();
  return lattice;
}

void mobius_full(SubgroupLattice& lattice) {
  if (lattice.mode != LatticeMode::full) throw InvalidArgument("mobius_full needs a full lattice");
  detail::mobius_topdown(lattice.classes, &lattice.containment);
}

bool is_intersection_of_maximals(const GroupTable& g, const Bitset& h,
                                 const std::vector<SubgroupClass>& maximals) {
  Bitset meet = g.whole().elements;
  for (const auto& c : maximals)
    for (const auto& m : c.conjugates)
      if (h.is_subset_of(m)) meet &= m;
  return meet == h;
}

}  // namespace pzeta
