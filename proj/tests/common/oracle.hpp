#pragma once

// Brute-force oracles that only use Perm arithmetic and std containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "pzeta/perm.hpp"

namespace oracle {

using pzeta::Perm;
using ElemSet = std::set<Perm>;

inline ElemSet closure(std::size_t degree, const std::vector<Perm>& gens) {
  ElemSet out{Perm(degree)};
  std::vector<Perm> frontier{Perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = x * g;
        if (out.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return out;
}

inline std::vector<Perm> elements(std::size_t degree, const std::vector<Perm>& gens) {
  auto s = closure(degree, gens);
  return {s.begin(), s.end()};
}

/// Every subgroup, found by adjoining one element at a time from the trivial group.
inline std::vector<ElemSet> all_subgroups(std::size_t degree, const std::vector<Perm>& group) {
  std::set<ElemSet> seen;
  std::vector<ElemSet> out;
  ElemSet triv{Perm(degree)};
  seen.insert(triv);
  out.push_back(triv);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const ElemSet h = out[i];
    std::vector<Perm> gens(h.begin(), h.end());
    for (const auto& x : group) {
      if (h.contains(x)) continue;
      gens.push_back(x);
      ElemSet k = closure(degree, gens);
      gens.pop_back();
      if (seen.insert(k).second) out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) { return a.size() > b.size(); });
  return out;
}

inline bool subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// mu over the subgroup list sorted by decreasing order (the whole group first).
inline std::vector<long> mobius(const std::vector<ElemSet>& subs) {
  std::vector<long> mu(subs.size(), 0);
  mu[0] = 1;
  for (std::size_t i = 1; i < subs.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (subs[j].size() > subs[i].size() && subset(subs[i], subs[j])) s += mu[j];
    mu[i] = -s;
  }
  return mu;
}

/// Coefficients of P_G as index -> a_n.
inline std::map<std::uint64_t, mpz_class> p_g(std::size_t degree, const std::vector<Perm>& gens) {
  auto group = elements(degree, gens);
  auto subs = all_subgroups(degree, group);
  auto mu = mobius(subs);
  std::map<std::uint64_t, mpz_class> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (mu[i] == 0) continue;
    out[group.size() / subs[i].size()] += mu[i];
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Supplement coefficients b_n(G, N) straight from the definition.
inline std::map<std::uint64_t, mpz_class> p_gn(std::size_t degree, const std::vector<Perm>& gens,
                                               const ElemSet& n) {
  auto group = elements(degree, gens);
  auto subs = all_subgroups(degree, group);
  auto mu = mobius(subs);
  std::map<std::uint64_t, mpz_class> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (mu[i] == 0) continue;
    std::set<Perm> prod;
    for (const auto& h : subs[i])
      for (const auto& x : n) prod.insert(h * x);
    if (prod.size() != group.size()) continue;
    out[group.size() / subs[i].size()] += mu[i];
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Number of k-tuples of elements generating the group.
inline std::uint64_t generating_tuples(std::size_t degree, const std::vector<Perm>& group, unsigned k) {
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Perm> gens(k);
  while (true) {
    for (unsigned i = 0; i < k; ++i) gens[i] = group[idx[i]];
    if (closure(degree, gens).size() == group.size()) ++count;
    unsigned i = 0;
    while (i < k && ++idx[i] == group.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return count;
}

}  // namespace oracle
