#include "dcgx/engine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

namespace dcgx {

UnknownNonterminalError::UnknownNonterminalError(const Symbol& sym)
    : Error("unknown nonterminal: " + to_string(sym)) {}

namespace {

// Mutable binding store with a trail, so backtracking undoes bindings
// instead of copying substitutions.  Bindings are resolved lazily;
// idempotent substitutions are only materialized when a solution is
// emitted, via resolve().
class BindingStore {
 public:
  using Mark = std::size_t;

  Mark mark() const { return trail_.size(); }

  void undo(Mark m) {
    while (trail_.size() > m) {
      map_.erase(trail_.back());
      trail_.pop_back();
    }
  }

  bool unify(const Term& a, const Term& b, bool occurs_check) {
    Term x = walk(a);
    Term y = walk(b);
    if (x.is_variable()) {
      if (y.is_variable() && x.id() == y.id()) return true;
      if (occurs_check && occurs_in(x.id(), y)) return false;
      bind(x.id(), std::move(y));
      return true;
    }
    if (y.is_variable()) {
      if (occurs_check && occurs_in(y.id(), x)) return false;
      bind(y.id(), std::move(x));
      return true;
    }
    if (x.kind() != y.kind() || x.name() != y.name()) return false;
    if (x.is_atom()) return true;
    if (x.args().size() != y.args().size()) return false;
    for (std::size_t i = 0; i < x.args().size(); ++i) {
      if (!unify(x.args()[i], y.args()[i], occurs_check)) return false;
    }
    return true;
  }

  /// Fully resolves t under the current bindings.  A variable met
  /// twice on one resolution path (possible only with the occurs check
  /// off) is left as is.
  Term resolve(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        auto it = map_.find(t.id());
        if (it == map_.end()) return t;
        if (std::find(path_.begin(), path_.end(), t.id()) != path_.end())
          return t;
        path_.push_back(t.id());
        Term out = resolve(it->second);
        path_.pop_back();
        return out;
      }
      case Term::Kind::Atom:
        return t;
      case Term::Kind::Compound: {
        std::vector<Term> args;
        args.reserve(t.args().size());
        bool changed = false;
        for (const Term& a : t.args()) {
          args.push_back(resolve(a));
          changed = changed || !(args.back() == a);
        }
        if (!changed) return t;
        return Term::compound(t.name(), std::move(args));
      }
    }
    return t;
  }

  /// Dereferences variable chains one binding at a time.
  Term walk(const Term& t) const {
    const Term* cur = &t;
    while (cur->is_variable()) {
      auto it = map_.find(cur->id());
      if (it == map_.end()) break;
      cur = &it->second;
    }
    return *cur;
  }

 private:
  void bind(int id, Term value) {
    map_.emplace(id, std::move(value));
    trail_.push_back(id);
  }

  bool occurs_in(int id, const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        Term w = walk(t);
        if (w.is_variable()) return w.id() == id;
        return occurs_in(id, w);
      }
      case Term::Kind::Atom:
        return false;
      case Term::Kind::Compound:
        return std::any_of(t.args().begin(), t.args().end(),
                           [&](const Term& a) { return occurs_in(id, a); });
    }
    return false;
  }

  std::unordered_map<int, Term> map_;
  std::vector<int> trail_;
  std::vector<int> path_;
};

// Non-owning continuation; the wrapped callable outlives the call by
// construction (it lives in the caller's frame).
struct Cont {
  void* ctx;
  bool (*fn)(void*, int);
  bool operator()(int pos) const { return fn(ctx, pos); }
};

template <class F>
Cont cont_of(F& f) {
  return Cont{&f,
              [](void* ctx, int pos) { return (*static_cast<F*>(ctx))(pos); }};
}

std::size_t count_calls(const std::vector<BodyItem>& body) {
  return static_cast<std::size_t>(
      std::count_if(body.begin(), body.end(),
                    [](const BodyItem& it) { return it.is_nonterminal(); }));
}

// Backtracking search in continuation style.  Every continuation
// returns false to abort the whole enumeration (solution cap hit).
struct Searcher {
  const Grammar& g;
  const TokenString& input;
  const ParseOptions& opts;
  FreshVars fresh;
  BindingStore store;
  std::map<Symbol, std::vector<int>> rules_for;
  long long applications = 0;

  Searcher(const Grammar& grammar, const TokenString& toks,
           const ParseOptions& options, int first_fresh_id)
      : g(grammar), input(toks), opts(options), fresh(first_fresh_id) {
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
      rules_for[symbol_of(g.rules[i].head)].push_back(static_cast<int>(i));
    }
  }

  bool solve_call(const Term& call, int pos, int depth, DerivationTree& node,
                  const Cont& k) {
    if (opts.max_depth && depth >= *opts.max_depth) return true;
    Term goal = store.walk(call);
    if (goal.is_variable()) return true;
    auto it = rules_for.find(symbol_of(goal));
    if (it == rules_for.end()) return true;
    for (int ri : it->second) {
      BindingStore::Mark m = store.mark();
      Rule inst = rename_apart(g.rules[ri], fresh);
      if (store.unify(goal, inst.head, opts.occurs_check)) {
        ++applications;
        node.rule_index = ri;
        node.span_begin = pos;
        node.children.clear();
        node.children.reserve(count_calls(inst.body));
        auto finish = [&](int end) {
          node.span_end = end;
          return k(end);
        };
        if (!solve_body(inst.body, 0, pos, depth + 1, node, cont_of(finish))) {
          store.undo(m);
          return false;
        }
      }
      store.undo(m);
    }
    return true;
  }

  bool solve_body(const std::vector<BodyItem>& items, std::size_t idx, int pos,
                  int depth, DerivationTree& parent, const Cont& k) {
    if (idx == items.size()) return k(pos);
    const BodyItem& item = items[idx];
    if (item.is_terminal()) {
      if (pos < static_cast<int>(input.size()) && input[pos] == item.token())
        return solve_body(items, idx + 1, pos + 1, depth, parent, k);
      return true;
    }
    // The reserve in solve_call keeps this reference stable while
    // later items append their own children.
    parent.children.emplace_back();
    DerivationTree& child = parent.children.back();
    auto rest = [&](int end) {
      return solve_body(items, idx + 1, end, depth, parent, k);
    };
    bool keep = solve_call(item.term(), pos, depth, child, cont_of(rest));
    parent.children.pop_back();
    return keep;
  }
};

}  // namespace

std::vector<Solution> parse(const Grammar& g, const Term& goal,
                            const TokenString& input, const ParseOptions& opts,
                            ParseStats* stats) {
  if (goal.is_variable() || !nonterminals(g).contains(symbol_of(goal)))
    throw UnknownNonterminalError(
        goal.is_variable() ? Symbol{goal.name(), 0} : symbol_of(goal));

  Searcher searcher(g, input, opts,
                    std::max(max_var_id(g), max_var_id(goal)) + 1);
  std::vector<Solution> out;
  DerivationTree root;
  auto emit = [&](int end) {
    if (end != static_cast<int>(input.size())) return true;
    out.push_back(Solution{searcher.store.resolve(goal), root});
    return !opts.max_solutions ||
           static_cast<int>(out.size()) < *opts.max_solutions;
  };
  searcher.solve_call(goal, 0, 0, root, cont_of(emit));
  if (stats) stats->rule_applications = searcher.applications;
  return out;
}

std::vector<Solution> parse_bounded(const Grammar& g, const Term& goal,
                                    const TokenString& input, int depth,
                                    const ParseOptions& opts,
                                    ParseStats* stats) {
  ParseOptions bounded = opts;
  bounded.max_depth = depth;
  return parse(g, goal, input, bounded, stats);
}

namespace {

struct Replayer {
  const Grammar& g;
  const TokenString& input;
  FreshVars fresh;

  // Rebuilds the instantiated head of the rule at this node, or
  // nullopt when the recorded evidence does not replay.
  std::optional<Term> replay(const DerivationTree& node) {
    if (node.rule_index < 0 ||
        node.rule_index >= static_cast<int>(g.rules.size()))
      return std::nullopt;
    if (node.span_begin < 0 || node.span_end > static_cast<int>(input.size()) ||
        node.span_begin > node.span_end)
      return std::nullopt;
    Rule rule = rename_apart(g.rules[node.rule_index], fresh);
    Substitution s;
    int pos = node.span_begin;
    std::size_t child = 0;
    for (const BodyItem& item : rule.body) {
      if (item.is_terminal()) {
        if (pos >= static_cast<int>(input.size()) || input[pos] != item.token())
          return std::nullopt;
        ++pos;
      } else {
        if (child >= node.children.size()) return std::nullopt;
        const DerivationTree& c = node.children[child++];
        if (c.span_begin != pos) return std::nullopt;
        auto head = replay(c);
        if (!head) return std::nullopt;
        auto s2 = unify(item.term(), *head, s);
        if (!s2) return std::nullopt;
        s = std::move(*s2);
        pos = c.span_end;
      }
    }
    if (child != node.children.size()) return std::nullopt;
    if (pos != node.span_end) return std::nullopt;
    return s.apply(rule.head);
  }
};

}  // namespace

bool derivation_check(const Grammar& g, const Solution& sol,
                      const TokenString& input) {
  const DerivationTree& root = sol.derivation;
  if (root.span_begin != 0 || root.span_end != static_cast<int>(input.size()))
    return false;
  Replayer replayer{
      g, input, FreshVars(std::max(max_var_id(g), max_var_id(sol.binding)) + 1)};
  auto head = replayer.replay(root);
  if (!head) return false;
  // The replayed head must subsume the reported binding.
  auto s = unify(*head, sol.binding);
  if (!s) return false;
  return is_variant(s->apply(sol.binding), sol.binding);
}

}  // namespace dcgx
