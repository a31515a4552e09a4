#include <algorithm>

#include "pzeta/error.hpp"
#include "pzeta/lattice.hpp"

namespace pzeta {

namespace {

std::vector<ElemId> small_generating_set(const GroupTable& a) {
  for (ElemId x = 0; x < a.size(); ++x)
    if (a.element_order(x) == a.size()) return {x};
  std::vector<ElemId> reps;
  for (const auto& cls : a.conjugacy_classes()) reps.push_back(cls.front());
  std::stable_sort(reps.begin(), reps.end(), [&](ElemId x, ElemId y) {
    return a.element_order(x) > a.element_order(y);
  });
  for (ElemId x : reps) {
    const Subgroup hx = a.closure(std::span<const ElemId>(&x, 1));
    for (ElemId y = 0; y < a.size(); ++y)
      if (!hx.contains(y) && a.join(hx, y)->order == a.size()) return {x, y};
  }
  std::vector<ElemId> out;
  Subgroup cur = a.trivial();
  for (ElemId s : a.generator_ids())
    if (!cur.contains(s)) {
      cur = *a.join(cur, s);
      out.push_back(s);
    }
  return out;
}

/// Extends gens[i] -> images[i] along a breadth-first spanning tree and
/// checks it is a bijective homomorphism.
std::optional<std::vector<ElemId>> extend(const GroupTable& a, const std::vector<ElemId>& gens,
                                          const std::vector<ElemId>& images) {
  constexpr ElemId unset = UINT32_MAX;
  std::vector<ElemId> phi(a.size(), unset);
  std::vector<bool> used(a.size(), false);
  std::vector<ElemId> queue{GroupTable::identity()};
  phi[0] = GroupTable::identity();
  used[0] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const ElemId x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const ElemId y = a.mul(x, gens[i]);
      const ElemId fy = a.mul(phi[x], images[i]);
      if (phi[y] == unset) {
        if (used[fy]) return std::nullopt;
        phi[y] = fy;
        used[fy] = true;
        queue.push_back(y);
      } else if (phi[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

}  // namespace

AutomorphismGroup automorphism_group(const GroupTable& a, std::size_t bound) {
  if (a.size() > bound)
    throw SizeRefusal("automorphism search refused for |A| = " + std::to_string(a.size()) +
                      " above bound " + std::to_string(bound));
  AutomorphismGroup out;
  if (a.size() == 1) {
    out.maps.push_back({GroupTable::identity()});
    return out;
  }
  const auto gens = small_generating_set(a);
  std::vector<std::size_t> class_size(a.size());
  for (const auto& cls : a.conjugacy_classes())
    for (ElemId x : cls) class_size[x] = cls.size();
  std::vector<std::vector<ElemId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (ElemId y = 0; y < a.size(); ++y)
      if (a.element_order(y) == a.element_order(gens[i]) && class_size[y] == class_size[gens[i]])
        candidates[i].push_back(y);

  std::vector<std::size_t> odometer(gens.size(), 0);
  std::vector<ElemId> images(gens.size());
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][odometer[i]];
    if (auto phi = extend(a, gens, images)) out.maps.push_back(std::move(*phi));
    std::size_t i = 0;
    while (i < gens.size() && ++odometer[i] == candidates[i].size()) odometer[i++] = 0;
    if (i == gens.size()) break;
  }
  std::sort(out.maps.begin(), out.maps.end());
  return out;
}

PermGroup AutomorphismGroup::as_perm_group() const {
  const std::size_t d = maps.empty() ? 1 : maps.front().size();
  std::vector<Perm> gens;
  PermGroup cur(d, {});
  for (const auto& m : maps) {
    Perm p(std::vector<Point>(m.begin(), m.end()));
    if (cur.contains(p)) continue;
    gens.push_back(std::move(p));
    cur = PermGroup(d, gens);
  }
  return cur;
}

}  // namespace pzeta
