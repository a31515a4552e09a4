#pragma once

#include <string>

#include "pzeta/group_table.hpp"
#include "pzeta/perm.hpp"

namespace pzeta::registry {

/// Resolves a group spec:
///   builtin:EXPR   EXPR := TERM (" x " TERM)*,  TERM := ATOM (" wr " ATOM)*,
///                  ATOM := "(" EXPR ")" | PSL(2,p) | PGL(2,p) | SL(2,p) | Alt(n) |
///                          Sym(n) | C(n) | Dih(n) | Q8 | V4
///   file:PATH      group JSON
/// A bare path ending in ".json" is read as a file.
PermGroup parse_group(const std::string& spec);

/// Parses only the builtin expression (without the "builtin:" prefix).
PermGroup builtin_group(const std::string& expr);

/// Resolves a normal-subgroup spec inside an enumerated group:
///   trivial | whole | socle | center | frattini | derived |
///   chief:i (i-th term of the top-down chief series) |
///   file:PATH (JSON array of generator images, or a group JSON)
/// Throws InvalidArgument when the result is not normal.
Subgroup parse_normal(const GroupTable& g, const std::string& spec);

Subgroup derived_subgroup(const GroupTable& g);
Subgroup center(const GroupTable& g);

}  // namespace pzeta::registry
