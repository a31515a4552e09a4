#pragma once

#include <cstdint>
#include <vector>

#include "pzeta/group_table.hpp"
#include "pzeta/perm.hpp"

namespace pzeta {

/// PSL(2,p) on the projective line {0, ..., p-1, inf = p}. p prime >= 5.
PermGroup psl2(std::uint64_t p);
/// PGL(2,p) on the projective line. p prime >= 5.
PermGroup pgl2(std::uint64_t p);
/// SL(2,p) acting on the nonzero row vectors of F_p^2. p prime >= 2.
PermGroup sl2(std::uint64_t p);
PermGroup alternating(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n on n points (n >= 3); n = 2 gives C2 x C2 on 4 points.
PermGroup dihedral(std::size_t n);
/// Quaternion group of order 8 in its regular representation.
PermGroup quaternion8();

/// A x B on degree(A) + degree(B) points.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// S wr T in the imprimitive action on degree(S) * degree(T) points.
PermGroup wreath_with_top(const PermGroup& s, const PermGroup& top);

/// Result of realizing G/N as a permutation group.
struct Quotient {
  PermGroup group;
  /// Image in `group` of each generator of G, in order.
  std::vector<Perm> generator_images;
};

/// G/N acting faithfully on the union of coset spaces of subgroups U >= N
/// chosen greedily (largest first) until the intersection of their cores
/// is N. Rejects non-normal N.
Quotient quotient_by_normal(const GroupTable& g, const Subgroup& n);

/// Action of G by conjugation on the elements of a normal subgroup A,
/// on |A| points indexed by the increasing ids of A. Kernel is C_G(A).
PermGroup conjugation_action(const GroupTable& g, const Subgroup& a);

/// Affine group A x| G/C_G(A) for an abelian normal subgroup A: translations
/// and conjugations acting on the |A| elements of A.
PermGroup affine_extension(const GroupTable& g, const Subgroup& a);

}  // namespace pzeta
