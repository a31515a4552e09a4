#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pzeta/dirichlet.hpp"
#include "pzeta/group_table.hpp"

namespace pzeta {

/// A conjugacy class of subgroups with all of its members.
struct SubgroupClass {
  Subgroup representative;
  std::size_t order = 0;
  std::size_t index = 0;
  std::size_t class_size = 0;
  std::int64_t mu = 0;
  std::vector<Bitset> conjugates;
  std::optional<Subgroup> normalizer;
};

enum class LatticeMode { full, supplements };

struct SubgroupLattice {
  LatticeMode mode = LatticeMode::full;
  std::size_t group_order = 0;
  /// Classes sorted by increasing order; the whole group is last.
  std::vector<SubgroupClass> classes;
  /// containment[a][b]: number of members of class b containing the
  /// representative of class a (full mode only).
  std::vector<std::vector<std::uint32_t>> containment;
  /// In supplements mode, the normal subgroup N being supplemented.
  std::optional<Bitset> normal;

  /// Class holding exactly this subgroup, if any.
  std::optional<std::size_t> find_class(const Bitset& elements) const;
  std::size_t subgroup_count() const;
  /// a_n = sum of class_size * mu over classes of index n.
  DirichletPoly polynomial() const;

  void rebuild_index();

 private:
  std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

inline constexpr std::size_t kDefaultLatticeBound = 2500;

/// Subgroups D with K <= D <= N up to G-conjugacy, by cyclic extension.
/// K and N must be normal in G. Classes come with conjugates and normalizers.
std::vector<SubgroupClass> subgroup_classes_between(const GroupTable& g, const Subgroup& k,
                                                    const Subgroup& n);

/// Full lattice of conjugacy classes of subgroups, with containment counts
/// and Moebius values. Refuses |G| > bound.
SubgroupLattice enumerate_subgroups(const GroupTable& g,
                                    std::size_t bound = kDefaultLatticeBound);

/// Fills containment and mu of a full-mode lattice.
void mobius_full(SubgroupLattice& lattice);

/// Moebius values on the subgroups H >= K with HN = G that are intersections
/// of maximal subgroups supplementing N. K must be normal (default trivial);
/// the result describes P_{G/K, N/K}.
SubgroupLattice mobius_supplements(const GroupTable& g, const Subgroup& n);
SubgroupLattice mobius_supplements(const GroupTable& g, const Subgroup& n, const Subgroup& k);

/// Conjugacy classes of maximal subgroups of G containing the normal subgroup K.
std::vector<SubgroupClass> maximal_subgroups(const GroupTable& g);
std::vector<SubgroupClass> maximal_subgroups(const GroupTable& g, const Subgroup& k);

bool is_maximal(const GroupTable& g, const Subgroup& m);

Subgroup frattini(const GroupTable& g);

/// A minimal normal subgroup of G properly containing the normal subgroup K
/// modulo K: least order among normal closures of K and one element.
Subgroup minimal_normal_over(const GroupTable& g, const Subgroup& k);
std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g);
Subgroup socle(const GroupTable& g);

/// Chief series G = G_0 > G_1 > ... > G_r = 1, built bottom-up.
std::vector<Subgroup> chief_series(const GroupTable& g);
/// Chief series from the normal subgroup K up to G, increasing: K = N_0 < ... < G.
std::vector<Subgroup> chief_series_over(const GroupTable& g, const Subgroup& k);

/// H/K <= Frat(G/K): every maximal subgroup containing K contains H.
bool is_frattini_factor(const GroupTable& g, const Subgroup& h, const Subgroup& k);

/// True when H/K is abelian, i.e. all commutators of generators of H lie in K.
bool is_abelian_section(const GroupTable& g, const Subgroup& h, const Subgroup& k);

/// Elements x_1..x_k with <N, x_1, ..., x_k> = G, few where possible.
std::vector<ElemId> generators_modulo(const GroupTable& g, const Subgroup& n);

/// Subgroups M >= K with MN = G and M n N = K (complements of N/K in G/K),
/// found by transversal search. Throws SizeRefusal above `max_candidates`.
std::vector<Subgroup> complements_over(const GroupTable& g, const Subgroup& k, const Subgroup& n,
                                       std::size_t max_candidates = 20'000'000);

/// Number of subgroups H with HA = G and H n A = 1, for an abelian normal A.
std::size_t complements_count(const GroupTable& g, const Subgroup& a);

/// Checks that a class with nonzero mu is an intersection of maximal subgroups.
bool is_intersection_of_maximals(const GroupTable& g, const Bitset& h,
                                 const std::vector<SubgroupClass>& maximals);

/// Automorphisms of an enumerated group, each as a map on element ids.
struct AutomorphismGroup {
  std::vector<std::vector<ElemId>> maps;
  std::size_t order() const { return maps.size(); }
  /// The automorphisms as permutations of the element ids.
  PermGroup as_perm_group() const;
};

inline constexpr std::size_t kAutomorphismBound = 1000;

/// Brute-force search over generator images with order pruning.
AutomorphismGroup automorphism_group(const GroupTable& a, std::size_t bound = kAutomorphismBound);

}  // namespace pzeta
