#include "pzeta/registry.hpp"

#include <cctype>

#include "pzeta/constructions.hpp"
#include "pzeta/error.hpp"
#include "pzeta/io.hpp"
#include "pzeta/lattice.hpp"
#include "pzeta/numtheory.hpp"

namespace pzeta::registry {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  PermGroup parse() {
    PermGroup g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("group spec '" + s_ + "': " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool keyword(const std::string& kw) {
    skip_ws();
    if (s_.compare(pos_, kw.size(), kw) != 0) return false;
    const std::size_t end = pos_ + kw.size();
    if (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])) && s_[end] != '(') return false;
    pos_ = end;
    return true;
  }

  PermGroup expr() {
    PermGroup g = term();
    while (keyword("x")) g = direct_product(g, term());
    return g;
  }

  PermGroup term() {
    PermGroup g = atom();
    while (keyword("wr")) g = wreath_with_top(g, atom());
    return g;
  }

  std::vector<std::uint64_t> args() {
    std::vector<std::uint64_t> out;
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
    ++pos_;
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a number");
      out.push_back(std::stoull(s_.substr(start, pos_ - start)));
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return out;
      }
      fail("expected ',' or ')'");
    }
  }

  PermGroup atom() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      PermGroup g = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return g;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a group name");
    if (name == "Q8") return quaternion8();
    if (name == "V4") return dihedral(2);
    auto one = [&](const std::vector<std::uint64_t>& a) {
      if (a.size() != 1) fail(name + " takes one argument");
      return a[0];
    };
    auto field = [&](const std::vector<std::uint64_t>& a) {
      if (a.size() != 2 || a[0] != 2) fail(name + " expects (2,p)");
      if (!numtheory::is_prime(a[1])) fail(name + ": " + std::to_string(a[1]) + " is not prime");
      return a[1];
    };
    if (name == "PSL" || name == "PGL" || name == "SL") {
      const auto p = field(args());
      if (name == "SL") return sl2(p);
      if (p < 5) fail(name + " requires p >= 5");
      return name == "PSL" ? psl2(p) : pgl2(p);
    }
    if (name == "Alt" || name == "Sym" || name == "C" || name == "Dih") {
      const auto n = one(args());
      if (n == 0) fail(name + " requires n >= 1");
      if (name == "Alt") return alternating(n);
      if (name == "Sym") return symmetric(n);
      if (name == "C") return cyclic(n);
      if (n < 2) fail("Dih requires n >= 2");
      return dihedral(n);
    }
    fail("unknown group '" + name + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

PermGroup builtin_group(const std::string& expr) {
  PermGroup g = Parser(expr).parse();
  return g;
}

PermGroup parse_group(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_group(spec.substr(8));
  if (spec.rfind("file:", 0) == 0) return io::group_from_json(io::read_json_file(spec.substr(5)));
  if (ends_with(spec, ".json")) return io::group_from_json(io::read_json_file(spec));
  throw InvalidArgument("group spec '" + spec + "': expected builtin:NAME or file:PATH");
}

Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<ElemId> comms;
  const auto& gens = g.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ElemId a = gens[i], b = gens[j];
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  if (comms.empty()) return g.trivial();
  return g.normal_closure(comms);
}

Subgroup center(const GroupTable& g) { return g.centralizer(g.generator_ids()); }

Subgroup parse_normal(const GroupTable& g, const std::string& spec) {
  Subgroup n;
  if (spec == "trivial") {
    n = g.trivial();
  } else if (spec == "whole") {
    n = g.whole();
  } else if (spec == "socle") {
    n = socle(g);
  } else if (spec == "center") {
    n = center(g);
  } else if (spec == "frattini") {
    n = frattini(g);
  } else if (spec == "derived") {
    n = derived_subgroup(g);
  } else if (spec.rfind("chief:", 0) == 0) {
    const auto series = chief_series(g);
    std::size_t i = 0;
    try {
      i = std::stoul(spec.substr(6));
    } catch (const std::exception&) {
      throw InvalidArgument("normal spec '" + spec + "': bad index");
    }
    if (i >= series.size())
      throw InvalidArgument("normal spec '" + spec + "': chief series has " + std::to_string(series.size()) +
                            " terms");
    n = series[i];
  } else if (spec.rfind("file:", 0) == 0) {
    auto j = io::read_json_file(spec.substr(5));
    const auto& list = j.is_object() ? j.at("generators") : j;
    std::vector<ElemId> ids;
    for (const auto& im : list) {
      auto id = g.id_of(Perm(im.get<std::vector<Point>>()));
      if (!id) throw InvalidArgument("normal spec '" + spec + "': generator not in G");
      ids.push_back(*id);
    }
    n = g.closure(ids);
  } else {
    throw InvalidArgument("unknown normal spec '" + spec + "'");
  }
  if (!g.is_normal(n)) throw InvalidArgument("normal spec '" + spec + "' is not normal in G");
  return n;
}

}  // namespace pzeta::registry
