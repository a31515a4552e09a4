#include "pzeta/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta {

// -------------------------------------------------------------------- Perm

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidArgument("image array is not a permutation");
    seen[p] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree || used[a]) throw InvalidArgument("cycles are not disjoint");
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::operator*(const Perm& other) const {
  if (other.degree() != degree()) throw InvalidArgument("degree mismatch in product");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = other.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Perm result(degree());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::optional<Point> Perm::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = numtheory::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (first ? "" : ",") << j;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// --------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InvalidArgument("generator degree mismatch");
  build_chain();
}

std::uint64_t PermGroup::order_u64() const {
  if (!order_.fits_ulong_p()) throw SizeRefusal("group order exceeds 64 bits");
  return order_.get_ui();
}

std::vector<const Perm*> PermGroup::level_generators(std::size_t i) const {
  std::vector<const Perm*> out;
  for (std::size_t j = i; j < levels_.size(); ++j)
    for (const auto& g : levels_[j].generators) out.push_back(&g);
  return out;
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.transversal.assign(degree_, std::nullopt);
  lv.orbit.clear();
  lv.transversal[lv.base] = Perm(degree_);
  lv.orbit.push_back(lv.base);
  auto gens = level_generators(i);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point pt = lv.orbit[k];
    for (const Perm* s : gens) {
      Point img = (*s)[pt];
      if (!lv.transversal[img]) {
        lv.transversal[img] = *lv.transversal[pt] * *s;
        lv.orbit.push_back(img);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    Point img = g[levels_[i].base];
    const auto& u = levels_[i].transversal[img];
    if (!u) return {std::move(g), i};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build_chain() {
  levels_.clear();
  auto add_strong = [&](Perm g, std::size_t level) {
    if (level == levels_.size()) {
      Level lv;
      lv.base = *g.first_moved();
      levels_.push_back(std::move(lv));
    }
    levels_[level].generators.push_back(std::move(g));
  };

  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (levels_.empty()) {
      add_strong(g, 0);
      continue;
    }
    // Place the generator at the deepest level whose base prefix it fixes.
    std::size_t level = 0;
    while (level < levels_.size() && g[levels_[level].base] == levels_[level].base) ++level;
    add_strong(g, level);
  }

  // Every Schreier generator must sift to the identity through the deeper
  // levels; restart from the bottom whenever a new strong generator appears.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      rebuild_level(i);
      auto gens = level_generators(i);
      const Level& lv = levels_[i];
      for (std::size_t k = 0; k < lv.orbit.size() && !changed; ++k) {
        Point pt = lv.orbit[k];
        for (const Perm* s : gens) {
          Point img = (*s)[pt];
          Perm schreier = *lv.transversal[pt] * *s * lv.transversal[img]->inverse();
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift(std::move(schreier), i + 1);
          if (residue.is_identity()) continue;
          // The residue fixes the bases of levels i..stop-1.
          add_strong(std::move(residue), stop);
          changed = true;
          break;
        }
      }
    }
  }
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& lv : levels_)
    for (const auto& g : lv.generators) out.push_back(g);
  return out;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  // g = u_k * ... * u_0 with u_i uniform in the level-i transversal.
  Perm g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level& lv = levels_[i];
    std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
    g = g * *lv.transversal[lv.orbit[pick(rng)]];
  }
  return g;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<Point> out{p};
  std::vector<bool> seen(degree_, false);
  seen[p] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : generators_) {
      Point img = s[out[k]];
      if (!seen[img]) {
        seen[img] = true;
        out.push_back(img);
      }
    }
  return out;
}

}  // namespace pzeta
