#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pzeta/bitset.hpp"
#include "pzeta/perm.hpp"

namespace pzeta {

using ElemId = std::uint32_t;

/// A subgroup of an enumerated group: its element bitset plus generators.
struct Subgroup {
  Bitset elements;
  std::vector<ElemId> generators;
  std::size_t order = 0;

  bool contains(ElemId x) const { return elements.test(x); }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

/// Dense enumeration of a permutation group of order at most kMaxOrder.
/// Elements are interned in breadth-first order from the generators, so
/// id 0 is the identity and ids are reproducible.
class GroupTable {
 public:
  static constexpr std::size_t kMaxOrder = 20000;
  static constexpr std::size_t kMaxCayleyOrder = 8192;

  explicit GroupTable(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  static constexpr ElemId identity() { return 0; }
  const Perm& element(ElemId x) const { return elements_[x]; }
  std::optional<ElemId> id_of(const Perm& p) const;
  ElemId require_id(const Perm& p) const;
  const std::vector<ElemId>& generator_ids() const { return generator_ids_; }

  ElemId mul(ElemId a, ElemId b) const {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * size() + b];
    return mul_slow(a, b);
  }
  /// a * (generator i)
  ElemId mul_gen(ElemId a, std::size_t i) const { return right_gen_[a * generator_ids_.size() + i]; }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  std::uint64_t element_order(ElemId a) const { return orders_[a]; }
  ElemId pow(ElemId a, std::uint64_t k) const;
  /// g^-1 x g
  ElemId conj(ElemId x, ElemId g) const { return mul(inv(g), mul(x, g)); }
  ElemId conj_gen(ElemId x, std::size_t i) const { return conj_gen_[i][x]; }
  bool commute(ElemId a, ElemId b) const { return mul(a, b) == mul(b, a); }

  /// Breadth-first tree: x = parent(x) * generator(parent_generator(x)).
  ElemId parent(ElemId x) const { return parent_[x]; }
  std::uint32_t parent_generator(ElemId x) const { return parent_gen_[x]; }

  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup closure(std::span<const ElemId> gens) const;
  /// <H, g>, or nullopt once the order would exceed `limit`.
  std::optional<Subgroup> join(const Subgroup& h, ElemId g,
                               std::size_t limit = SIZE_MAX) const;
  Subgroup join_all(const Subgroup& h, std::span<const ElemId> gens) const;
  /// Subgroup with the given element set, which must be closed.
  Subgroup from_elements(const Bitset& elements) const;
  Subgroup intersection(const Subgroup& a, const Subgroup& b) const;

  Bitset conjugate(const Bitset& h, ElemId g) const;
  Bitset conjugate_by_gen(const Bitset& h, std::size_t i) const;
  Subgroup conjugate(const Subgroup& h, ElemId g) const;

  struct ConjugacyOrbit {
    std::vector<Bitset> conjugates;  // conjugates[0] is H itself
    std::vector<ElemId> transversal;  // H^transversal[k] = conjugates[k]
    std::optional<Subgroup> normalizer;
  };
  /// Orbit of H under conjugation by the whole group, with the normalizer
  /// from Schreier generators when requested.
  ConjugacyOrbit conjugacy_orbit(const Subgroup& h, bool with_normalizer = true) const;
  Subgroup normalizer(const Subgroup& h) const;
  bool is_normal(const Subgroup& h) const;
  /// Smallest subgroup containing `elems` and closed under conjugation by
  /// `conjugators` (default: the generators of the group).
  Subgroup normal_closure(std::span<const ElemId> elems) const;
  Subgroup normal_closure(std::span<const ElemId> elems,
                          std::span<const ElemId> conjugators) const;
  Subgroup centralizer(std::span<const ElemId> elems) const;
  Subgroup core(const Subgroup& h) const;
  /// |HK| = |H||K| / |H n K|
  std::size_t product_size(const Subgroup& h, const Subgroup& k) const;
  bool is_abelian(const Subgroup& h) const;

  /// Conjugacy classes of elements, each sorted, listed by smallest member.
  const std::vector<std::vector<ElemId>>& conjugacy_classes() const;

  /// Images of all ids under the homomorphism determined by generator images
  /// in `target`. Throws InvalidArgument if the map is not a homomorphism.
  std::vector<ElemId> homomorphism_to(const GroupTable& target,
                                      std::span<const ElemId> generator_images) const;
  std::optional<std::vector<ElemId>> try_homomorphism_to(
      const GroupTable& target, std::span<const ElemId> generator_images) const;

 private:
  ElemId mul_slow(ElemId a, ElemId b) const;

  PermGroup group_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, ElemId, PermHash> index_;
  std::vector<ElemId> generator_ids_;
  std::vector<ElemId> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<ElemId> right_gen_;
  std::vector<std::uint16_t> cayley_;
  std::vector<ElemId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::vector<ElemId>> conj_gen_;
  std::vector<std::vector<ElemId>> classes_;
};

}  // namespace pzeta
