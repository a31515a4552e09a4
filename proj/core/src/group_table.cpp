#include "pzeta/group_table.hpp"

#include <algorithm>
#include <unordered_map>

#include "pzeta/error.hpp"

namespace pzeta {

GroupTable::GroupTable(const PermGroup& group) : group_(group) {
  if (group.order() > kMaxOrder)
    throw SizeRefusal("group of order " + group.order().get_str() +
                      " exceeds the enumeration bound " + std::to_string(kMaxOrder));
  const std::size_t n = group.order_u64();
  const auto& gens = group.generators();
  const std::size_t ng = gens.size();
  elements_.reserve(n);
  index_.reserve(n * 2);
  elements_.emplace_back(group.degree());
  index_.emplace(elements_[0], 0);
  parent_.push_back(0);
  parent_gen_.push_back(0);
  right_gen_.reserve(n * ng);

  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (std::size_t i = 0; i < ng; ++i) {
      Perm y = elements_[k] * gens[i];
      auto [it, inserted] = index_.try_emplace(y, static_cast<ElemId>(elements_.size()));
      if (inserted) {
        elements_.push_back(std::move(y));
        parent_.push_back(static_cast<ElemId>(k));
        parent_gen_.push_back(static_cast<std::uint32_t>(i));
      }
      right_gen_.push_back(it->second);
    }
  }
  if (elements_.size() != n) throw InternalError("enumeration disagrees with chain order");

  for (const auto& g : gens) generator_ids_.push_back(index_.at(g));

  if (n <= kMaxCayleyOrder) {
    cayley_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint16_t* row = &cayley_[x * n];
      row[0] = static_cast<std::uint16_t>(x);
      for (std::size_t y = 1; y < n; ++y)
        row[y] = static_cast<std::uint16_t>(right_gen_[row[parent_[y]] * ng + parent_gen_[y]]);
    }
  }

  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    inverse_[x] = index_.at(elements_[x].inverse());
    orders_[x] = elements_[x].order();
  }

  conj_gen_.resize(ng);
  for (std::size_t i = 0; i < ng; ++i) {
    conj_gen_[i].resize(n);
    ElemId s = generator_ids_[i];
    for (std::size_t x = 0; x < n; ++x)
      conj_gen_[i][x] = mul(inverse_[s], mul_gen(static_cast<ElemId>(x), i));
  }

  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<ElemId> cls{static_cast<ElemId>(x)};
    seen[x] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (std::size_t i = 0; i < ng; ++i) {
        ElemId y = conj_gen_[i][cls[k]];
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

std::optional<ElemId> GroupTable::id_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId GroupTable::require_id(const Perm& p) const {
  auto id = id_of(p);
  if (!id) throw InvalidArgument("permutation " + p.to_cycle_string() + " is not in the group");
  return *id;
}

ElemId GroupTable::mul_slow(ElemId a, ElemId b) const {
  return index_.at(elements_[a] * elements_[b]);
}

ElemId GroupTable::pow(ElemId a, std::uint64_t k) const {
  ElemId result = identity();
  ElemId base = a;
  k %= orders_[a];
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup GroupTable::whole() const {
  Subgroup s;
  s.elements = Bitset(size());
  for (std::size_t i = 0; i < size(); ++i) s.elements.set(i);
  s.generators = generator_ids_;
  s.generators.erase(std::remove(s.generators.begin(), s.generators.end(), identity()),
                     s.generators.end());
  s.order = size();
  return s;
}

Subgroup GroupTable::trivial() const {
  Subgroup s;
  s.elements = Bitset(size());
  s.elements.set(identity());
  s.order = 1;
  return s;
}

std::optional<Subgroup> GroupTable::join(const Subgroup& h, ElemId g, std::size_t limit) const {
  if (h.contains(g)) return h;
  Subgroup k;
  k.generators = h.generators;
  k.generators.push_back(g);
  k.elements = h.elements;
  const auto hv = h.elements.to_vector();
  std::vector<ElemId> reps{identity()};
  std::size_t total = h.order;
  // Right cosets H r; closure under right multiplication by every generator.
  for (std::size_t idx = 0; idx < reps.size(); ++idx) {
    const ElemId r = reps[idx];
    for (ElemId s : k.generators) {
      const ElemId y = mul(r, s);
      if (k.elements.test(y)) continue;
      if (total + h.order > limit) return std::nullopt;
      for (ElemId x : hv) k.elements.set(mul(x, y));
      total += h.order;
      reps.push_back(y);
    }
  }
  k.order = total;
  return k;
}

Subgroup GroupTable::join_all(const Subgroup& h, std::span<const ElemId> gens) const {
  Subgroup k = h;
  for (ElemId g : gens)
    if (!k.contains(g)) k = *join(k, g);
  return k;
}

Subgroup GroupTable::closure(std::span<const ElemId> gens) const {
  return join_all(trivial(), gens);
}

Subgroup GroupTable::from_elements(const Bitset& elements) const {
  Subgroup k = trivial();
  const std::size_t target = elements.count();
  elements.for_each([&](ElemId x) {
    if (k.order < target && !k.contains(x)) k = *join(k, x);
  });
  if (!(k.elements == elements)) throw InvalidArgument("element set is not a subgroup");
  return k;
}

Subgroup GroupTable::intersection(const Subgroup& a, const Subgroup& b) const {
  return from_elements(a.elements & b.elements);
}

Bitset GroupTable::conjugate(const Bitset& h, ElemId g) const {
  Bitset out(size());
  const ElemId gi = inv(g);
  h.for_each([&](ElemId x) { out.set(mul(gi, mul(x, g))); });
  return out;
}

Bitset GroupTable::conjugate_by_gen(const Bitset& h, std::size_t i) const {
  Bitset out(size());
  const auto& table = conj_gen_[i];
  h.for_each([&](ElemId x) { out.set(table[x]); });
  return out;
}

Subgroup GroupTable::conjugate(const Subgroup& h, ElemId g) const {
  Subgroup out;
  out.elements = conjugate(h.elements, g);
  for (ElemId x : h.generators) out.generators.push_back(conj(x, g));
  out.order = h.order;
  return out;
}

GroupTable::ConjugacyOrbit GroupTable::conjugacy_orbit(const Subgroup& h,
                                                       bool with_normalizer) const {
  ConjugacyOrbit orbit;
  std::unordered_map<Bitset, std::size_t, BitsetHash> where;
  orbit.conjugates.push_back(h.elements);
  orbit.transversal.push_back(identity());
  where.emplace(h.elements, 0);
  Subgroup norm = h;
  const std::size_t ng = generator_ids_.size();
  for (std::size_t k = 0; k < orbit.conjugates.size(); ++k) {
    for (std::size_t i = 0; i < ng; ++i) {
      Bitset c = conjugate_by_gen(orbit.conjugates[k], i);
      auto it = where.find(c);
      if (it == where.end()) {
        where.emplace(c, orbit.conjugates.size());
        orbit.conjugates.push_back(std::move(c));
        orbit.transversal.push_back(mul_gen(orbit.transversal[k], i));
      } else if (with_normalizer) {
        // t_k * s * t_j^-1 stabilizes H.
        ElemId schreier = mul(mul_gen(orbit.transversal[k], i), inv(orbit.transversal[it->second]));
        if (!norm.contains(schreier)) norm = *join(norm, schreier);
      }
    }
  }
  if (with_normalizer) {
    if (norm.order * orbit.conjugates.size() != size())
      throw InternalError("orbit-stabilizer mismatch in normalizer");
    orbit.normalizer = std::move(norm);
  }
  return orbit;
}

Subgroup GroupTable::normalizer(const Subgroup& h) const {
  return *conjugacy_orbit(h, true).normalizer;
}

bool GroupTable::is_normal(const Subgroup& h) const {
  for (std::size_t i = 0; i < generator_ids_.size(); ++i)
    for (ElemId x : h.generators)
      if (!h.contains(conj_gen_[i][x])) return false;
  return true;
}

Subgroup GroupTable::normal_closure(std::span<const ElemId> elems) const {
  return normal_closure(elems, generator_ids_);
}

Subgroup GroupTable::normal_closure(std::span<const ElemId> elems,
                                    std::span<const ElemId> conjugators) const {
  Subgroup k = closure(elems);
  for (std::size_t idx = 0; idx < k.generators.size(); ++idx) {
    for (ElemId c : conjugators) {
      ElemId y = conj(k.generators[idx], c);
      if (!k.contains(y)) k = *join(k, y);
    }
  }
  return k;
}

Subgroup GroupTable::centralizer(std::span<const ElemId> elems) const {
  Bitset c(size());
  for (std::size_t x = 0; x < size(); ++x) {
    bool ok = true;
    for (ElemId a : elems)
      if (!commute(static_cast<ElemId>(x), a)) {
        ok = false;
        break;
      }
    if (ok) c.set(x);
  }
  return from_elements(c);
}

Subgroup GroupTable::core(const Subgroup& h) const {
  auto orbit = conjugacy_orbit(h, false);
  Bitset c = orbit.conjugates[0];
  for (const auto& b : orbit.conjugates) c &= b;
  return from_elements(c);
}

std::size_t GroupTable::product_size(const Subgroup& h, const Subgroup& k) const {
  return h.order * k.order / h.elements.intersection_count(k.elements);
}

bool GroupTable::is_abelian(const Subgroup& h) const {
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      if (!commute(h.generators[i], h.generators[j])) return false;
  return true;
}

const std::vector<std::vector<ElemId>>& GroupTable::conjugacy_classes() const { return classes_; }

std::vector<ElemId> GroupTable::homomorphism_to(const GroupTable& target,
                                                std::span<const ElemId> generator_images) const {
  auto img = try_homomorphism_to(target, generator_images);
  if (!img) throw InvalidArgument("generator images do not define a homomorphism");
  return std::move(*img);
}

std::optional<std::vector<ElemId>> GroupTable::try_homomorphism_to(
    const GroupTable& target, std::span<const ElemId> generator_images) const {
  const std::size_t ng = generator_ids_.size();
  if (generator_images.size() != ng)
    throw InvalidArgument("homomorphism needs one image per generator");
  std::vector<ElemId> img(size());
  img[0] = target.identity();
  for (std::size_t y = 1; y < size(); ++y)
    img[y] = target.mul(img[parent_[y]], generator_images[parent_gen_[y]]);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t i = 0; i < ng; ++i)
      if (img[mul_gen(static_cast<ElemId>(x), i)] != target.mul(img[x], generator_images[i]))
        return std::nullopt;
  return img;
}

}  // namespace pzeta
