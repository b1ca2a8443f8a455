#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcgx/grammar.hpp"

namespace dcgx {

/// Outcome of the offline-parsability test.  A grammar is offline
/// parsable when its context-free skeleton is not infinitely
/// ambiguous, which holds exactly when the chain graph restricted to
/// useful symbols is acyclic.  The witness, present only on failure,
/// is one such chain cycle A1 -> A2 -> ... -> A1.
struct OPVerdict {
  bool offline_parsable = true;
  std::optional<std::vector<Symbol>> witness;
  std::set<Symbol> nullable;
  std::set<Symbol> useful;
};

/// Least set of symbols deriving the empty string.
std::set<Symbol> nullable_set(const SkeletonCFG& cfg);

/// Symbols that are productive and reachable from the start set.
/// Without a start set every symbol counts as a start, so usefulness
/// reduces to productivity and the verdict is goal independent.
std::set<Symbol> useful_set(const SkeletonCFG& cfg,
                            std::optional<std::set<Symbol>> start = std::nullopt);

OPVerdict is_offline_parsable(const Grammar& g,
                              std::optional<Symbol> start = std::nullopt);

/// Renders a witness cycle as "a/1 -> a/1".
std::string chain_to_string(const std::vector<Symbol>& chain);

}  // namespace dcgx
