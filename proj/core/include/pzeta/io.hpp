#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "pzeta/dirichlet.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/multipoly.hpp"
#include "pzeta/perm.hpp"
#include "pzeta/verifier.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta::io {

using nlohmann::json;

/// Integers that fit in int64 are plain numbers; larger ones are strings.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

/// [{"n": 1, "a": 1}, {"n": 11, "a": -22}, ...], sorted by n.
json poly_to_json(const DirichletPoly& f);
DirichletPoly poly_from_json(const json& j);

/// [{"m": [[p, e], ...], "c": coeff}, ...] in graded-lex order.
json multipoly_to_json(const MultiPoly& f);
MultiPoly multipoly_from_json(const json& j);

/// {"degree": d, "generators": [[images...], ...], "name": "..."}.
json group_to_json(const PermGroup& g);
PermGroup group_from_json(const json& j);

/// FNV-1a over degree and generator images, as 16 hex digits.
std::string group_hash(const PermGroup& g);

json lattice_to_json(const GroupTable& g, const SubgroupLattice& lattice);
/// Rebuilds a lattice from a cache file. Throws InvalidArgument when the
/// stored hash does not match g.
SubgroupLattice lattice_from_json(const GroupTable& g, const json& j);

json descriptor_to_json(const FactorDescriptor& d);
json factorization_to_json(const ChiefFactorization& f);
json comparison_to_json(const ComparisonReport& r);
json seral_to_json(const SeralReport& r);
json pgl_identity_to_json(const PglIdentityReport& r);

json certificate_to_json(const IrredCertificate& c);
IrredCertificate certificate_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace pzeta::io
