#include "pzeta/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta {

namespace {

std::uint64_t primitive_root(std::uint64_t p) {
  const auto primes = numtheory::prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : primes) {
      std::uint64_t e = (p - 1) / q, r = 1, b = g;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

void require_prime_ge5(std::uint64_t p, const char* what) {
  if (p < 5 || !numtheory::is_prime(p))
    throw InvalidArgument(std::string(what) + ": p must be a prime >= 5, got " + std::to_string(p));
}

PermGroup projective(std::uint64_t p, std::uint64_t multiplier, std::string name) {
  const std::size_t d = p + 1;
  const Point inf = static_cast<Point>(p);
  std::vector<Point> tr(d), mul(d), inv(d);
  for (std::uint64_t z = 0; z < p; ++z) {
    tr[z] = static_cast<Point>((z + 1) % p);
    mul[z] = static_cast<Point>(z * multiplier % p);
    inv[z] = z == 0 ? inf : static_cast<Point>((p - inverse_mod(z, p)) % p);
  }
  tr[inf] = inf;
  mul[inf] = inf;
  inv[inf] = 0;
  return PermGroup(d, {Perm(tr), Perm(mul), Perm(inv)}, std::move(name));
}

}  // namespace

PermGroup psl2(std::uint64_t p) {
  require_prime_ge5(p, "psl2");
  const std::uint64_t g = primitive_root(p);
  return projective(p, g * g % p, "PSL(2," + std::to_string(p) + ")");
}

PermGroup pgl2(std::uint64_t p) {
  require_prime_ge5(p, "pgl2");
  return projective(p, primitive_root(p), "PGL(2," + std::to_string(p) + ")");
}

PermGroup sl2(std::uint64_t p) {
  if (!numtheory::is_prime(p)) throw InvalidArgument("sl2: p must be prime");
  // Point index of (x, y) != (0, 0) is x * p + y - 1.
  const std::size_t d = p * p - 1;
  auto act = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t e) {
    std::vector<Point> img(d);
    for (std::uint64_t x = 0; x < p; ++x)
      for (std::uint64_t y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        // (x, y) [[a, b], [c, e]]
        std::uint64_t nx = (x * a + y * c) % p, ny = (x * b + y * e) % p;
        img[x * p + y - 1] = static_cast<Point>(nx * p + ny - 1);
      }
    return Perm(std::move(img));
  };
  return PermGroup(d, {act(1, 1, 0, 1), act(0, p - 1, 1, 0)},
                   "SL(2," + std::to_string(p) + ")");
}

PermGroup alternating(std::size_t n) {
  if (n < 1) throw InvalidArgument("alternating: n must be >= 1");
  std::string name = "Alt(" + std::to_string(n) + ")";
  if (n < 3) return PermGroup(n, {}, name);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<Point> cyc;
    for (std::size_t i = (n % 2 ? 0 : 1); i < n; ++i) cyc.push_back(static_cast<Point>(i));
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens), name);
}

PermGroup symmetric(std::size_t n) {
  if (n < 1) throw InvalidArgument("symmetric: n must be >= 1");
  std::string name = "Sym(" + std::to_string(n) + ")";
  if (n < 2) return PermGroup(n, {}, name);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(Perm::from_cycles(n, {cyc}));
  return PermGroup(n, std::move(gens), name);
}

PermGroup cyclic(std::size_t n) {
  if (n < 1) throw InvalidArgument("cyclic: n must be >= 1");
  std::string name = "C(" + std::to_string(n) + ")";
  if (n == 1) return PermGroup(1, {}, name);
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  return PermGroup(n, {Perm::from_cycles(n, {cyc})}, name);
}

PermGroup dihedral(std::size_t n) {
  std::string name = "Dih(" + std::to_string(n) + ")";
  if (n == 2)
    return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                     name);
  if (n < 3) throw InvalidArgument("dihedral: n must be >= 2");
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(rot), Perm(refl)}, name);
}

PermGroup quaternion8() {
  // Elements 1, i, j, k, -1, -i, -j, -k as 0..7; right multiplication by i and j.
  // Unit products as (sign, index) over {1, i, j, k}.
  static const int table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto right = [&](int u) {
    std::vector<Point> img(8);
    for (int x = 0; x < 8; ++x) {
      int sx = x < 4 ? 1 : -1, ix = x % 4;
      int s = sx * table[ix][u][0], idx = table[ix][u][1];
      img[x] = static_cast<Point>(s > 0 ? idx : idx + 4);
    }
    return Perm(std::move(img));
  };
  return PermGroup(8, {right(1), right(2)}, "Q8");
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g[static_cast<Point>(i)];
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + " x " + b.name();
  return PermGroup(da + db, std::move(gens), name);
}

PermGroup wreath_with_top(const PermGroup& s, const PermGroup& top) {
  const std::size_t d = s.degree(), n = top.degree();
  std::vector<Perm> gens;
  for (std::size_t block = 0; block < n; ++block)
    for (const auto& g : s.generators()) {
      std::vector<Point> img(d * n);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < d; ++i)
        img[block * d + i] = static_cast<Point>(block * d + g[static_cast<Point>(i)]);
      gens.emplace_back(std::move(img));
    }
  for (const auto& t : top.generators()) {
    std::vector<Point> img(d * n);
    for (std::size_t block = 0; block < n; ++block)
      for (std::size_t i = 0; i < d; ++i)
        img[block * d + i] = static_cast<Point>(t[static_cast<Point>(block)] * d + i);
    gens.emplace_back(std::move(img));
  }
  std::string name;
  if (!s.name().empty() && !top.name().empty()) name = s.name() + " wr " + top.name();
  return PermGroup(d * n, std::move(gens), name);
}

Quotient quotient_by_normal(const GroupTable& g, const Subgroup& n) {
  if (!g.is_normal(n)) throw InvalidArgument("quotient_by_normal: subgroup is not normal");
  // Candidates <N, x> over one x per conjugacy class, largest first.
  std::vector<Subgroup> candidates;
  for (const auto& cls : g.conjugacy_classes()) {
    auto u = g.join(n, cls.front());
    if (u->order < g.size()) candidates.push_back(std::move(*u));
  }
  candidates.push_back(n);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order > b.order; });

  std::vector<Subgroup> chosen;
  Bitset kernel = g.whole().elements;
  const std::size_t target = n.order;
  for (const auto& u : candidates) {
    if (kernel.count() == target) break;
    Bitset next = kernel & g.core(u).elements;
    if (next.count() < kernel.count()) {
      kernel = std::move(next);
      chosen.push_back(u);
    }
  }
  if (!(kernel == n.elements)) throw InternalError("quotient: cores do not intersect to N");

  // Right cosets U x; G acts by right multiplication.
  std::vector<std::vector<std::uint32_t>> coset_of;  // per chosen U: element -> local coset
  std::vector<std::size_t> offsets;
  std::size_t degree = 0;
  for (const auto& u : chosen) {
    std::vector<std::uint32_t> label(g.size(), UINT32_MAX);
    std::uint32_t next = 0;
    const auto uv = u.elements.to_vector();
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (label[x] != UINT32_MAX) continue;
      for (ElemId h : uv) label[g.mul(h, static_cast<ElemId>(x))] = next;
      ++next;
    }
    offsets.push_back(degree);
    degree += next;
    coset_of.push_back(std::move(label));
  }
  Quotient q;
  std::vector<Perm> gens;
  for (ElemId s : g.generator_ids()) {
    std::vector<Point> img(degree);
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      // Representative of each coset is the smallest element carrying its label.
      std::vector<bool> done(g.size() / chosen[c].order, false);
      for (std::size_t x = 0; x < g.size(); ++x) {
        std::uint32_t lab = coset_of[c][x];
        if (done[lab]) continue;
        done[lab] = true;
        img[offsets[c] + lab] =
            static_cast<Point>(offsets[c] + coset_of[c][g.mul(static_cast<ElemId>(x), s)]);
      }
    }
    gens.emplace_back(std::move(img));
  }
  if (degree == 0) {
    for (auto& x : gens) x = Perm(1);
    degree = 1;
  }
  q.generator_images = gens;
  std::string name;
  if (!g.group().name().empty()) name = g.group().name() + "/N";
  q.group = PermGroup(degree, std::move(gens), name);
  return q;
}

PermGroup conjugation_action(const GroupTable& g, const Subgroup& a) {
  const auto av = a.elements.to_vector();
  std::vector<std::uint32_t> local(g.size(), UINT32_MAX);
  for (std::size_t i = 0; i < av.size(); ++i) local[av[i]] = static_cast<std::uint32_t>(i);
  std::vector<Perm> gens;
  for (ElemId s : g.generator_ids()) {
    std::vector<Point> img(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) {
      auto j = local[g.conj(av[i], s)];
      if (j == UINT32_MAX) throw InvalidArgument("conjugation_action: subgroup is not normal");
      img[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(av.size(), std::move(gens));
}

PermGroup affine_extension(const GroupTable& g, const Subgroup& a) {
  if (!g.is_abelian(a)) throw InvalidArgument("affine_extension: subgroup is not abelian");
  const auto av = a.elements.to_vector();
  std::vector<std::uint32_t> local(g.size(), UINT32_MAX);
  for (std::size_t i = 0; i < av.size(); ++i) local[av[i]] = static_cast<std::uint32_t>(i);
  std::vector<Perm> gens;
  for (ElemId t : a.generators) {
    std::vector<Point> img(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) img[i] = static_cast<Point>(local[g.mul(av[i], t)]);
    gens.emplace_back(std::move(img));
  }
  for (ElemId s : g.generator_ids()) {
    std::vector<Point> img(av.size());
    for (std::size_t i = 0; i < av.size(); ++i) {
      auto j = local[g.conj(av[i], s)];
      if (j == UINT32_MAX) throw InvalidArgument("affine_extension: subgroup is not normal");
      img[i] = static_cast<Point>(j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(av.size(), std::move(gens));
}

}  // namespace pzeta
