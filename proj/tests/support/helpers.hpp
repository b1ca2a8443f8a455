#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcgx/engine.hpp"
#include "dcgx/grammar.hpp"
#include "dcgx/opcheck.hpp"

namespace testsupport {

inline dcgx::Grammar must_read(std::string_view text,
                               bool allow_reserved = false) {
  auto res = dcgx::read_grammar(text, dcgx::ReadOptions{allow_reserved});
  if (!res.ok()) {
    std::string msg = "fixture failed to parse:";
    for (const auto& d : res.diagnostics) msg += " " + dcgx::to_string(d);
    throw std::runtime_error(msg);
  }
  return std::move(*res.grammar);
}

inline dcgx::Term must_term(std::string_view text) {
  auto res = dcgx::read_term(text);
  if (!res.ok()) throw std::runtime_error("bad term fixture");
  return std::move(*res.term);
}

/// Canonical text of a term: variables renamed ?0, ?1, ... in order of
/// first occurrence, so two terms are variants iff their canonical
/// texts are equal.
inline std::string canon(const dcgx::Term& t) {
  std::vector<dcgx::Term> vars;
  dcgx::collect_vars(t, vars);
  dcgx::Substitution s;
  int k = 0;
  for (const dcgx::Term& v : vars)
    s.bind(v, dcgx::Term::atom("?" + std::to_string(k++)));
  return dcgx::to_string(s.apply(t));
}

/// Sorted canonical texts of the solution bindings.  With unwrap_g the
/// binding's single argument is reported instead (for goals wrapped as
/// g(...)).
inline std::vector<std::string> canon_solutions(
    const std::vector<dcgx::Solution>& sols, bool unwrap_g = false) {
  std::vector<std::string> out;
  out.reserve(sols.size());
  for (const dcgx::Solution& sol : sols)
    out.push_back(canon(unwrap_g ? sol.binding.args()[0] : sol.binding));
  std::sort(out.begin(), out.end());
  return out;
}

/// Multiset equality of rules up to variance.
inline bool rules_variant_multiset(const dcgx::Grammar& a,
                                   const dcgx::Grammar& b) {
  if (a.rules.size() != b.rules.size()) return false;
  std::vector<bool> used(b.rules.size(), false);
  for (const dcgx::Rule& ra : a.rules) {
    bool found = false;
    for (std::size_t i = 0; i < b.rules.size(); ++i) {
      if (!used[i] && dcgx::is_variant(ra, b.rules[i])) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline bool rules_variant_sequence(const dcgx::Grammar& a,
                                   const dcgx::Grammar& b) {
  if (a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    if (!dcgx::is_variant(a.rules[i], b.rules[i])) return false;
  }
  return true;
}

// ---- brute-force nullability oracle --------------------------------------

/// Depth-bounded search for an empty derivation, independent of the
/// fixpoint in nullable_set.
inline bool derives_empty_bf(const dcgx::SkeletonCFG& cfg,
                             const dcgx::Symbol& sym, int depth,
                             std::map<std::pair<std::string, int>, bool>* memo =
                                 nullptr) {
  if (depth <= 0) return false;
  std::map<std::pair<std::string, int>, bool> local;
  if (!memo) memo = &local;
  auto key = std::make_pair(dcgx::to_string(sym), depth);
  auto it = memo->find(key);
  if (it != memo->end()) return it->second;
  bool result = false;
  for (const dcgx::SkeletonProduction& p : cfg.productions) {
    if (!(p.lhs == sym)) continue;
    bool all = true;
    for (const dcgx::SkeletonItem& item : p.rhs) {
      if (item.terminal || !derives_empty_bf(cfg, item.symbol, depth - 1, memo)) {
        all = false;
        break;
      }
    }
    if (all) {
      result = true;
      break;
    }
  }
  memo->emplace(key, result);
  return result;
}

inline std::set<dcgx::Symbol> nullable_bf(const dcgx::SkeletonCFG& cfg,
                                          int depth) {
  std::set<dcgx::Symbol> out;
  std::map<std::pair<std::string, int>, bool> memo;
  for (const dcgx::Symbol& s : cfg.symbols) {
    if (derives_empty_bf(cfg, s, depth, &memo)) out.insert(s);
  }
  return out;
}

// ---- random generators ----------------------------------------------------

inline dcgx::Term random_term(std::mt19937& rng, int depth,
                              const std::vector<dcgx::Term>& vars) {
  static const char* kAtoms[] = {"a", "b", "c"};
  static const char* kFunctors[] = {"f", "h", "m"};
  std::uniform_int_distribution<int> d100(0, 99);
  int r = d100(rng);
  if (depth <= 0 || r < 55) {
    if (r % 2 == 0 && !vars.empty())
      return vars[rng() % vars.size()];
    return dcgx::Term::atom(kAtoms[rng() % 3]);
  }
  std::vector<dcgx::Term> args;
  int n = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < n; ++i) args.push_back(random_term(rng, depth - 1, vars));
  return dcgx::Term::compound(kFunctors[rng() % 3], std::move(args));
}

/// Random small grammar over at most 8 nonterminals and 15 rules.
/// Bodies of length zero are frequent so empty-production elimination
/// has real work to do.
inline dcgx::Grammar random_grammar(std::mt19937& rng) {
  struct Nt {
    const char* name;
    int arity;
  };
  static const Nt kPool[] = {{"p", 1}, {"q", 1}, {"r", 2}, {"u", 0},
                             {"v", 1}, {"w", 2}, {"y", 0}, {"z", 1}};
  static const char* kTokens[] = {"ka", "mo"};
  const int nts = 3 + static_cast<int>(rng() % 6);
  const int nrules = 3 + static_cast<int>(rng() % 13);
  int next_var = 0;
  dcgx::Grammar g;
  for (int i = 0; i < nrules; ++i) {
    std::vector<dcgx::Term> vars;
    for (const char* name : {"X", "Y", "Z"})
      vars.push_back(dcgx::Term::variable(name, next_var++));
    auto make_call = [&]() {
      const Nt& nt = kPool[rng() % nts];
      if (nt.arity == 0) return dcgx::Term::atom(nt.name);
      std::vector<dcgx::Term> args;
      for (int k = 0; k < nt.arity; ++k)
        args.push_back(random_term(rng, 1, vars));
      return dcgx::Term::compound(nt.name, std::move(args));
    };
    dcgx::Rule rule{make_call(), {}};
    int len = static_cast<int>(rng() % 4);
    for (int k = 0; k < len; ++k) {
      if (rng() % 10 < 6) {
        rule.body.push_back(dcgx::BodyItem::call(make_call()));
      } else {
        rule.body.push_back(dcgx::BodyItem::token(kTokens[rng() % 2]));
      }
    }
    g.rules.push_back(std::move(rule));
  }
  return g;
}

/// Every token string over the alphabet with length in [1, max_len].
inline std::vector<dcgx::TokenString> all_strings(
    const std::vector<std::string>& alphabet, int max_len) {
  std::vector<dcgx::TokenString> out;
  std::vector<dcgx::TokenString> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<dcgx::TokenString> next;
    for (const dcgx::TokenString& prefix : frontier) {
      for (const std::string& tok : alphabet) {
        dcgx::TokenString s = prefix;
        s.push_back(tok);
        next.push_back(std::move(s));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace testsupport
