#pragma once

#include "dcgx/error.hpp"
#include "dcgx/grammar.hpp"
#include "dcgx/transform_empty.hpp"

namespace dcgx {

class EmptyRulePresentError : public Error {
 public:
  explicit EmptyRulePresentError(const Rule& rule);
};

class SeedRulesMissingError : public Error {
 public:
  SeedRulesMissingError();
};

/// Encodes an empty-production-free grammar into the generic form
/// built on g/1, t/1 and d/2.  The output starts with the two seed
/// rules
///
///     g(X) --> g(Y), d(Y,X).
///     g(X) --> t(X).
///
/// followed by one rule per input rule, in input order: a rule whose
/// body starts with a nonterminal B becomes a d(B,Head) rule, one
/// whose body starts with a terminal becomes a t(Head) rule, and every
/// nonterminal call in the remaining body is wrapped as g(...).
Grammar encode(const Grammar& g);

/// Replaces the two seed rules by the non-left-recursive group
///
///     g(X) --> t(Y), d_tc(Y,X).
///     d_tc(X,X) --> [].
///     d_tc(X,Z) --> d(X,Y), d_tc(Y,Z).
///
/// leaving every other rule unchanged and in order.
Grammar eliminate_left_recursion(const Grammar& dcg_prime);

/// Full pipeline: empty-production elimination, encoding, left
/// recursion elimination.  The result is top-down parsable with
/// guaranteed termination for offline-parsable inputs.
Grammar transform(const Grammar& g, int limit = kDefaultRuleLimit);

}  // namespace dcgx
