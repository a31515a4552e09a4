#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pzeta {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Products act on the right: (a * b)(i) = b(a(i)).
class Perm {
 public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Perm(std::vector<Point> images);
  /// Builds from disjoint cycles over {0..degree-1}.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm pow(long k) const;
  bool is_identity() const;
  /// Smallest point moved, or nullopt for the identity.
  std::optional<Point> first_moved() const;
  std::uint64_t order() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Permutation group given by generators, with a deterministic Schreier-Sims
/// stabilizer chain (base = smallest moved point at each level).
class PermGroup {
 public:
  PermGroup() = default;
  /// All generators must share one degree. Identity generators are kept in
  /// the generating list but ignored by the chain.
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Group order as the product of the transversal lengths.
  const mpz_class& order() const { return order_; }
  std::uint64_t order_u64() const;

  bool contains(const Perm& g) const;
  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  std::vector<Perm> strong_generators() const;

  /// Uniform element: independent uniform transversal picks, one per level.
  Perm random_element(std::mt19937_64& rng) const;

  /// Orbit of a point under the generators, in discovery order.
  std::vector<Point> orbit(Point p) const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Perm> generators;                // strong generators of this level only
    std::vector<std::optional<Perm>> transversal;  // transversal[pt] maps base to pt
    std::vector<Point> orbit;
  };

  void build_chain();
  void rebuild_level(std::size_t i);
  std::vector<const Perm*> level_generators(std::size_t i) const;
  /// Sifts g from level `from`; returns residue and the level where it stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::string name_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
};

}  // namespace pzeta
