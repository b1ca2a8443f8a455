#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcgx/error.hpp"
#include "dcgx/grammar.hpp"

namespace dcgx {

using TokenString = std::vector<std::string>;

/// Evidence for one solution: which rule was applied at each node,
/// which token interval it consumed, and one child per nonterminal
/// body item, in body order.
struct DerivationTree {
  int rule_index = -1;
  int span_begin = 0;
  int span_end = 0;
  std::vector<DerivationTree> children;
};

struct Solution {
  Term binding;  // the goal with the answer substitution applied
  DerivationTree derivation;
};

struct ParseStats {
  long long rule_applications = 0;  // successful head unifications
};

struct ParseOptions {
  std::optional<int> max_solutions;
  std::optional<int> max_depth;  // rule applications along one branch
  bool occurs_check = true;
};

class UnknownNonterminalError : public Error {
 public:
  explicit UnknownNonterminalError(const Symbol& sym);
};

/// Top-down, leftmost, depth-first enumeration of every way the goal
/// derives the entire input, with rules tried in grammar order.
/// Solutions appear in depth-first order.  Termination is guaranteed
/// for grammars produced by transform() from an offline-parsable
/// grammar; on raw left-recursive or empty-production grammars the
/// search may diverge, so use parse_bounded there.
std::vector<Solution> parse(const Grammar& g, const Term& goal,
                            const TokenString& input,
                            const ParseOptions& opts = {},
                            ParseStats* stats = nullptr);

/// As parse, but abandons any branch that stacks more than depth rule
/// applications.  Terminates on every input; complete for solutions
/// whose derivations fit within the bound.
std::vector<Solution> parse_bounded(const Grammar& g, const Term& goal,
                                    const TokenString& input, int depth,
                                    const ParseOptions& opts = {},
                                    ParseStats* stats = nullptr);

/// Replays sol's derivation tree against g, re-unifying each recorded
/// rule.  True iff the replay consumes exactly the input and
/// reproduces the binding.
bool derivation_check(const Grammar& g, const Solution& sol,
                      const TokenString& input);

}  // namespace dcgx
