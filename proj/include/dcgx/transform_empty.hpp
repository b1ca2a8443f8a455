#pragma once

#include "dcgx/error.hpp"
#include "dcgx/grammar.hpp"
#include "dcgx/opcheck.hpp"

namespace dcgx {

/// Cap on rules generated by one elimination run.  Exceeding it means
/// a grammar that is not offline parsable slipped past the gate.
inline constexpr int kDefaultRuleLimit = 10000;

class NotOfflineParsableError : public Error {
 public:
  explicit NotOfflineParsableError(OPVerdict verdict);
  const OPVerdict& verdict() const { return verdict_; }

 private:
  OPVerdict verdict_;
};

class LimitExceededError : public Error {
 public:
  explicit LimitExceededError(int limit);
  int limit() const { return limit_; }

 private:
  int limit_;
};

/// Removes every empty production by repeated partial evaluation.  The
/// result derives the same non-empty token strings with the same goal
/// bindings as g.  Surviving rules keep their source order; generated
/// rules follow in generation order.
///
/// The grammar is gated on offline parsability first
/// (NotOfflineParsableError); the generation cap is kept as a second
/// line of defence (LimitExceededError).
Grammar eliminate_empty(const Grammar& g, int limit = kDefaultRuleLimit);

}  // namespace dcgx
