#include "dcgx/opcheck.hpp"

#include <algorithm>
#include <map>

namespace dcgx {

std::set<Symbol> nullable_set(const SkeletonCFG& cfg) {
  std::set<Symbol> nullable;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const SkeletonProduction& p : cfg.productions) {
      if (nullable.contains(p.lhs)) continue;
      bool all = std::all_of(p.rhs.begin(), p.rhs.end(),
                             [&](const SkeletonItem& it) {
                               return !it.terminal && nullable.contains(it.symbol);
                             });
      if (all) {
        nullable.insert(p.lhs);
        changed = true;
      }
    }
  }
  return nullable;
}

std::set<Symbol> useful_set(const SkeletonCFG& cfg,
                            std::optional<std::set<Symbol>> start) {
  std::set<Symbol> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const SkeletonProduction& p : cfg.productions) {
      if (productive.contains(p.lhs)) continue;
      bool all = std::all_of(p.rhs.begin(), p.rhs.end(),
                             [&](const SkeletonItem& it) {
                               return it.terminal || productive.contains(it.symbol);
                             });
      if (all) {
        productive.insert(p.lhs);
        changed = true;
      }
    }
  }

  std::set<Symbol> reachable;
  if (start) {
    reachable = *start;
  } else {
    reachable.insert(cfg.symbols.begin(), cfg.symbols.end());
  }
  changed = true;
  while (changed) {
    changed = false;
    for (const SkeletonProduction& p : cfg.productions) {
      if (!reachable.contains(p.lhs)) continue;
      for (const SkeletonItem& it : p.rhs) {
        if (!it.terminal && reachable.insert(it.symbol).second) changed = true;
      }
    }
  }

  std::set<Symbol> useful;
  for (const Symbol& s : productive) {
    if (reachable.contains(s)) useful.insert(s);
  }
  return useful;
}

namespace {

// Cycle search over the chain graph.  States: 0 unvisited, 1 on the
// current path, 2 done.
struct CycleFinder {
  const std::map<Symbol, std::vector<Symbol>>& adj;
  std::map<Symbol, int> state;
  std::vector<Symbol> path;
  std::vector<Symbol> cycle;

  bool dfs(const Symbol& s) {
    state[s] = 1;
    path.push_back(s);
    auto it = adj.find(s);
    if (it != adj.end()) {
      for (const Symbol& next : it->second) {
        int st = state.count(next) ? state[next] : 0;
        if (st == 1) {
          auto pos = std::find(path.begin(), path.end(), next);
          cycle.assign(pos, path.end());
          cycle.push_back(next);
          return true;
        }
        if (st == 0 && dfs(next)) return true;
      }
    }
    state[s] = 2;
    path.pop_back();
    return false;
  }
};

}  // namespace

OPVerdict is_offline_parsable(const Grammar& g, std::optional<Symbol> start) {
  SkeletonCFG cfg = skeleton(g);
  OPVerdict verdict;
  verdict.nullable = nullable_set(cfg);
  verdict.useful = useful_set(
      cfg, start ? std::optional<std::set<Symbol>>({*start}) : std::nullopt);

  // Chain edge A -> B for each production A ::= alpha B beta whose other
  // items are all nullable nonterminals, both endpoints useful.
  std::map<Symbol, std::vector<Symbol>> adj;
  for (const SkeletonProduction& p : cfg.productions) {
    if (!verdict.useful.contains(p.lhs)) continue;
    for (std::size_t i = 0; i < p.rhs.size(); ++i) {
      const SkeletonItem& item = p.rhs[i];
      if (item.terminal || !verdict.useful.contains(item.symbol)) continue;
      bool rest_nullable = true;
      for (std::size_t j = 0; j < p.rhs.size(); ++j) {
        if (j == i) continue;
        const SkeletonItem& other = p.rhs[j];
        if (other.terminal || !verdict.nullable.contains(other.symbol)) {
          rest_nullable = false;
          break;
        }
      }
      if (!rest_nullable) continue;
      auto& edges = adj[p.lhs];
      if (std::find(edges.begin(), edges.end(), item.symbol) == edges.end())
        edges.push_back(item.symbol);
    }
  }

  CycleFinder finder{adj, {}, {}, {}};
  for (const Symbol& s : cfg.symbols) {
    if (!verdict.useful.contains(s)) continue;
    int st = finder.state.count(s) ? finder.state[s] : 0;
    if (st == 0 && finder.dfs(s)) {
      verdict.offline_parsable = false;
      verdict.witness = finder.cycle;
      return verdict;
    }
  }
  return verdict;
}

std::string chain_to_string(const std::vector<Symbol>& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += " -> ";
    out += to_string(chain[i]);
  }
  return out;
}

}  // namespace dcgx
