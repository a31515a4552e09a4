#pragma once

#include <vector>

#include "pzeta/lattice.hpp"

namespace pzeta::detail {

/// Members of the G-conjugacy class of a subgroup given by its elements.
std::vector<Bitset> bitset_orbit(const GroupTable& g, const Bitset& h);

/// Sorts by increasing order (stable), fills index and class_size.
void finalize_classes(std::vector<SubgroupClass>& classes, std::size_t group_order);

/// Top-down Moebius recursion on a conjugation-closed family whose largest
/// class is the top element. Containment counts are recorded when requested.
void mobius_topdown(std::vector<SubgroupClass>& classes,
                    std::vector<std::vector<std::uint32_t>>* containment);

/// <H, gens...>, or nullopt once the order would exceed `limit`.
std::optional<Subgroup> join_limited(const GroupTable& g, Subgroup h,
                                     std::span<const ElemId> gens, std::size_t limit);

}  // namespace pzeta::detail
