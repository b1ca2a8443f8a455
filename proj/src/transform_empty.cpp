#include "dcgx/transform_empty.hpp"

#include <algorithm>
#include <utility>

namespace dcgx {

namespace {

std::string not_op_message(const OPVerdict& v) {
  std::string msg = "grammar is not offline-parsable";
  if (v.witness) msg += ": chain cycle " + chain_to_string(*v.witness);
  return msg;
}

bool variant_of_any(const Rule& r, const std::vector<Rule>& rules) {
  return std::any_of(rules.begin(), rules.end(),
                     [&](const Rule& other) { return is_variant(r, other); });
}

}  // namespace

NotOfflineParsableError::NotOfflineParsableError(OPVerdict verdict)
    : Error(not_op_message(verdict)), verdict_(std::move(verdict)) {}

LimitExceededError::LimitExceededError(int limit)
    : Error("empty-production elimination generated more than " +
            std::to_string(limit) +
            " rules; the grammar is most likely not offline-parsable"),
      limit_(limit) {}

Grammar eliminate_empty(const Grammar& g, int limit) {
  OPVerdict verdict = is_offline_parsable(g);
  if (!verdict.offline_parsable) throw NotOfflineParsableError(std::move(verdict));

  std::vector<Rule> list1 = g.rules;   // working grammar
  std::vector<Rule> list2;             // eliminated empty rules
  FreshVars fresh(max_var_id(g) + 1);
  int generated = 0;

  for (;;) {
    auto er_it = std::find_if(list1.begin(), list1.end(),
                              [](const Rule& r) { return r.is_empty(); });
    if (er_it == list1.end()) break;
    Rule er = std::move(*er_it);
    list1.erase(er_it);
    const Symbol er_sym = symbol_of(er.head);
    list2.push_back(er);

    // One pass over the working list, including rules appended during
    // the scan.  For every unifiable instance of the eliminated
    // nonterminal, emit a copy of the rule with that instance removed
    // and the unifier applied throughout.
    for (std::size_t i = 0; i < list1.size(); ++i) {
      const Rule r = list1[i];  // copy; appends invalidate references
      for (std::size_t j = 0; j < r.body.size(); ++j) {
        const BodyItem& item = r.body[j];
        if (!item.is_nonterminal() || symbol_of(item.term()) != er_sym) continue;
        Rule er_inst = rename_apart(er, fresh);
        auto s = unify(er_inst.head, item.term());
        if (!s) continue;
        Rule derived{s->apply(r.head), {}};
        for (std::size_t k = 0; k < r.body.size(); ++k) {
          if (k == j) continue;
          const BodyItem& other = r.body[k];
          if (other.is_nonterminal()) {
            derived.body.push_back(BodyItem::call(s->apply(other.term())));
          } else {
            derived.body.push_back(other);
          }
        }
        if (variant_of_any(derived, list1) || variant_of_any(derived, list2))
          continue;
        if (++generated > limit) throw LimitExceededError(limit);
        list1.push_back(std::move(derived));
      }
    }
  }
  return Grammar{std::move(list1)};
}

}  // namespace dcgx
