#include <unordered_map>

#include "detail/lattice_detail.hpp"
#include "pzeta/error.hpp"
#include "pzeta/lattice.hpp"

namespace pzeta {

SubgroupLattice mobius_supplements(const GroupTable& g, const Subgroup& n) {
  return mobius_supplements(g, n, g.trivial());
}

SubgroupLattice mobius_supplements(const GroupTable& g, const Subgroup& n, const Subgroup& k) {
  if (!g.is_normal(n)) throw InvalidArgument("mobius_supplements: N is not normal");
  if (!g.is_normal(k)) throw InvalidArgument("mobius_supplements: K is not normal");
  const std::size_t order = g.size();
  auto supplements = [&](const Bitset& h, std::size_t h_order) {
    return h_order * n.order == order * h.intersection_count(n.elements);
  };

  std::vector<SubgroupClass> classes;
  std::unordered_map<Bitset, std::size_t, BitsetHash> where;
  {
    SubgroupClass top;
    top.representative = g.whole();
    top.order = order;
    top.conjugates = {top.representative.elements};
    where.emplace(top.representative.elements, 0);
    classes.push_back(std::move(top));
  }
  std::vector<Bitset> maximal;
  for (auto& c : maximal_subgroups(g, k)) {
    if (!supplements(c.representative.elements, c.order)) continue;
    for (const auto& m : c.conjugates) {
      maximal.push_back(m);
      where.emplace(m, classes.size());
    }
    classes.push_back(std::move(c));
  }

  // Intersection closure through class representatives: the family is
  // closed under conjugation, so X^g n M = (X n M^(g^-1))^g.
  for (std::size_t ci = 1; ci < classes.size(); ++ci) {
    const Bitset x = classes[ci].representative.elements;
    for (const auto& m : maximal) {
      Bitset y = x & m;
      if (y == x || where.contains(y)) continue;
      const std::size_t y_order = y.count();
      if (!supplements(y, y_order)) continue;
      SubgroupClass c;
      c.representative = g.from_elements(y);
      c.order = y_order;
      c.conjugates = detail::bitset_orbit(g, y);
      for (const auto& member : c.conjugates) where.emplace(member, classes.size());
      classes.push_back(std::move(c));
    }
  }

  SubgroupLattice lattice;
  lattice.mode = LatticeMode::supplements;
  lattice.group_order = order;
  lattice.normal = n.elements;
  detail::finalize_classes(classes, order);
  detail::mobius_topdown(classes, nullptr);
  lattice.classes = std::move(classes);
  lattice.rebuild_index();
  return lattice;
}

}  // namespace pzeta
