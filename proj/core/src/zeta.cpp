#include "pzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_map>

#include "detail/lattice_detail.hpp"
#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta {

DirichletPoly p_g(const GroupTable& g) { return mobius_supplements(g, g.whole()).polynomial(); }

DirichletPoly p_g_full(const GroupTable& g, std::size_t bound) {
  return enumerate_subgroups(g, bound).polynomial();
}

DirichletPoly p_gn(const GroupTable& g, const Subgroup& n) {
  return mobius_supplements(g, n).polynomial();
}

std::optional<std::string> simple_group_name(std::uint64_t order) {
  static const std::map<std::uint64_t, std::string> table = {
      {60, "Alt(5)"},        {168, "PSL(2,7)"},     {360, "Alt(6)"},      {504, "PSL(2,8)"},
      {660, "PSL(2,11)"},    {1092, "PSL(2,13)"},   {2448, "PSL(2,17)"},  {2520, "Alt(7)"},
      {3420, "PSL(2,19)"},   {4080, "PSL(2,16)"},   {5616, "PSL(3,3)"},   {6048, "PSU(3,3)"},
      {6072, "PSL(2,23)"},   {7800, "PSL(2,25)"},   {7920, "M11"},        {9828, "PSL(2,27)"},
      {12180, "PSL(2,29)"},  {14880, "PSL(2,31)"},
  };
  auto it = table.find(order);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FactorDescriptor describe_factor(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
  FactorDescriptor d;
  d.order = h.order / k.order;
  d.abelian = is_abelian_section(g, h, k);
  if (d.order == 1) {
    d.name = "1";
    return d;
  }
  if (d.abelian) {
    auto f = numtheory::factorize(d.order);
    if (f.factors.size() != 1) throw InternalError("abelian chief factor is not a p-group");
    d.base_order = f.factors[0].first;
    d.multiplicity = f.factors[0].second;
    d.name = "C" + std::to_string(d.base_order);
    if (d.multiplicity > 1) d.name += "^" + std::to_string(d.multiplicity);
    return d;
  }
  for (unsigned n = 8; n >= 1; --n) {
    auto s = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(d.order), 1.0 / n)));
    for (std::uint64_t c : {s - 1, s, s + 1}) {
      std::uint64_t pw = 1;
      for (unsigned i = 0; i < n; ++i) pw *= c;
      if (pw != d.order) continue;
      if (auto name = simple_group_name(c)) {
        d.base_order = c;
        d.multiplicity = n;
        d.name = *name + (n > 1 ? "^" + std::to_string(n) : "");
        return d;
      }
    }
  }
  d.base_order = d.order;
  d.name = "simple(" + std::to_string(d.order) + ")";
  return d;
}

ChiefFactorization chief_factorization(const GroupTable& g, const FactorizationOptions& opts) {
  ChiefFactorization out;
  const auto series = chief_series(g);
  out.product = DirichletPoly::one();
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    ChiefFactor f;
    f.upper = series[i];
    f.lower = series[i + 1];
    f.descriptor = describe_factor(g, f.upper, f.lower);
    auto lattice = mobius_supplements(g, f.upper, f.lower);
    f.frattini = lattice.classes.size() == 1;
    f.poly = lattice.polynomial();
    out.product = out.product * f.poly;

    if (opts.match_tilde && !f.frattini) {
      std::optional<MonolithicData> md;
      if (f.lower.order == 1) {
        md = monolithic(g, f.upper);
      } else {
        auto q = quotient_by_normal(g, f.lower);
        GroupTable qt(q.group);
        std::vector<ElemId> images;
        for (const auto& p : q.generator_images) images.push_back(qt.require_id(p));
        auto hom = g.homomorphism_to(qt, images);
        std::vector<ElemId> a_gens;
        for (ElemId x : f.upper.generators) a_gens.push_back(hom[x]);
        md = monolithic(qt, qt.closure(a_gens));
      }
      if (md->gamma) {
        f.tilde_checked = true;
        for (unsigned t = 1; t <= opts.max_tilde_index; ++t)
          if (tilde_p(*md, t) == f.poly) {
            f.tilde_index = t;
            break;
          }
      }
    }
    out.factors.push_back(std::move(f));
  }
  out.direct = p_g(g);
  out.verified = out.product == out.direct;
  return out;
}

Rational generation_probability_exact(const GroupTable& g, unsigned k) {
  if (k == 0) throw InvalidArgument("generation_probability_exact: k must be >= 1");
  const double work = std::pow(static_cast<double>(g.size()), static_cast<double>(k));
  if (work > kExactEnumerationLimit)
    throw SizeRefusal("exhaustive enumeration of |G|^k = " + std::to_string(work) + " tuples refused");
  const std::size_t order = g.size();
  std::vector<std::unordered_map<Bitset, std::uint64_t, BitsetHash>> memo(k);

  auto count = [&](auto&& self, const Subgroup& h, unsigned depth) -> std::uint64_t {
    if (auto it = memo[depth].find(h.elements); it != memo[depth].end()) return it->second;
    std::uint64_t total = 0;
    for (ElemId x = 0; x < order; ++x) {
      if (depth + 1 == k) {
        auto j = g.join(h, x, order / 2);
        if (!j || j->order == order) ++total;
      } else {
        total += self(self, *g.join(h, x), depth + 1);
      }
    }
    memo[depth].emplace(h.elements, total);
    return total;
  };
  const std::uint64_t hits = count(count, g.trivial(), 0);
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), order, k);
  Rational r(Integer(static_cast<unsigned long>(hits)), denom);
  r.canonicalize();
  return r;
}

MonteCarloResult generation_probability_mc(const PermGroup& g, unsigned k, std::uint64_t samples,
                                           std::uint64_t seed, unsigned threads) {
  if (k == 0) throw InvalidArgument("generation_probability_mc: k must be >= 1");
  constexpr std::uint64_t chunk = 4096;
  const std::uint64_t nchunks = (samples + chunk - 1) / chunk;
  std::unique_ptr<GroupTable> table;
  if (g.order() <= GroupTable::kMaxOrder) table = std::make_unique<GroupTable>(g);
  std::vector<std::uint64_t> hits(nchunks, 0);
  threads = std::max(1u, threads);

  auto worker = [&](unsigned t) {
    std::vector<Perm> elems(k);
    for (std::uint64_t c = t; c < nchunks; c += threads) {
      std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
      std::mt19937_64 rng(sq);
      const std::uint64_t n = std::min(chunk, samples - c * chunk);
      std::uint64_t local = 0;
      for (std::uint64_t s = 0; s < n; ++s) {
        for (auto& e : elems) e = g.random_element(rng);
        bool generates;
        if (table) {
          const std::size_t order = table->size();
          Subgroup h = table->trivial();
          generates = order == 1;
          for (const auto& e : elems) {
            auto j = table->join(h, table->require_id(e), order / 2);
            if (!j) {
              generates = true;
              break;
            }
            h = std::move(*j);
            if (h.order == order) generates = true;
          }
        } else {
          generates = PermGroup(g.degree(), elems).order() == g.order();
        }
        if (generates) ++local;
      }
      hits[c] = local;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  MonteCarloResult r;
  r.samples = samples;
  for (auto h : hits) r.successes += h;
  if (samples > 0) {
    r.estimate = static_cast<double>(r.successes) / static_cast<double>(samples);
    r.stderr_ = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(samples));
  }
  return r;
}

std::optional<std::size_t> min_supplement_index(const GroupTable& x, const Subgroup& s) {
  if (!x.is_normal(s)) throw InvalidArgument("min_supplement_index: S is not normal");
  std::optional<std::size_t> best;
  for (const auto& c : maximal_subgroups(x)) {
    if (x.product_size(c.representative, s) != x.size()) continue;
    if (!best || c.index < *best) best = c.index;
  }
  return best;
}

namespace {

using FactorList = std::vector<std::pair<FactorDescriptor, DirichletPoly>>;

FactorList non_frattini_factors(const ChiefFactorization& f) {
  FactorList out;
  for (const auto& c : f.factors)
    if (!c.frattini) out.emplace_back(c.descriptor, c.poly);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second.to_string() < b.second.to_string();
  });
  return out;
}

}  // namespace

ComparisonReport compare_groups(const GroupTable& g, const GroupTable& h) {
  ComparisonReport r;
  auto fg = chief_factorization(g);
  auto fh = chief_factorization(h);
  r.p_first = fg.direct;
  r.p_second = fh.direct;
  r.polynomials_equal = r.p_first == r.p_second;
  for (auto& [d, p] : non_frattini_factors(fg)) {
    r.factors_first.push_back(d);
    r.factor_polys_first.push_back(p);
  }
  for (auto& [d, p] : non_frattini_factors(fh)) {
    r.factors_second.push_back(d);
    r.factor_polys_second.push_back(p);
  }
  r.factor_names_equal = r.factors_first == r.factors_second;
  r.factors_equal = r.factor_names_equal && r.factor_polys_first == r.factor_polys_second;
  return r;
}

std::string factor_multiset_string(const std::vector<FactorDescriptor>& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].name;
  return s + "}";
}

}  // namespace pzeta
