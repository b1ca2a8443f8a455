#include "dcgx/transform_leftcorner.hpp"

#include <optional>
#include <utility>

namespace dcgx {

namespace {

// The seed rules are literal; ids are rule-scoped so fixed ones do.
Rule seed_recursive() {
  Term x = Term::variable("X", 0);
  Term y = Term::variable("Y", 1);
  return Rule{Term::compound("g", {x}),
              {BodyItem::call(Term::compound("g", {y})),
               BodyItem::call(Term::compound("d", {y, x}))}};
}

Rule seed_base() {
  Term x = Term::variable("X", 0);
  return Rule{Term::compound("g", {x}),
              {BodyItem::call(Term::compound("t", {x}))}};
}

std::vector<Rule> replacement_rules() {
  Term x = Term::variable("X", 0);
  Term y = Term::variable("Y", 1);
  Term z = Term::variable("Z", 2);
  std::vector<Rule> out;
  out.push_back(Rule{Term::compound("g", {x}),
                     {BodyItem::call(Term::compound("t", {y})),
                      BodyItem::call(Term::compound("d_tc", {y, x}))}});
  out.push_back(Rule{Term::compound("d_tc", {x, x}), {}});
  out.push_back(Rule{Term::compound("d_tc", {x, z}),
                     {BodyItem::call(Term::compound("d", {x, y})),
                      BodyItem::call(Term::compound("d_tc", {y, z}))}});
  return out;
}

std::vector<BodyItem> wrap_calls(const Rule& r, std::size_t from) {
  std::vector<BodyItem> out;
  for (std::size_t i = from; i < r.body.size(); ++i) {
    const BodyItem& item = r.body[i];
    if (item.is_nonterminal()) {
      out.push_back(BodyItem::call(Term::compound("g", {item.term()})));
    } else {
      out.push_back(item);
    }
  }
  return out;
}

}  // namespace

EmptyRulePresentError::EmptyRulePresentError(const Rule& rule)
    : Error("grammar contains an empty production: " + to_string(rule)) {}

SeedRulesMissingError::SeedRulesMissingError()
    : Error("input is not an encoded grammar: seed rules "
            "g(X) --> g(Y), d(Y,X). and g(X) --> t(X). not found") {}

Grammar encode(const Grammar& g) {
  for (const Rule& r : g.rules) {
    if (r.is_empty()) throw EmptyRulePresentError(r);
  }
  Grammar out;
  out.rules.push_back(seed_recursive());
  out.rules.push_back(seed_base());
  for (const Rule& r : g.rules) {
    const BodyItem& first = r.body.front();
    if (first.is_nonterminal()) {
      out.rules.push_back(Rule{Term::compound("d", {first.term(), r.head}),
                               wrap_calls(r, 1)});
    } else {
      std::vector<BodyItem> body = wrap_calls(r, 1);
      body.insert(body.begin(), first);
      out.rules.push_back(
          Rule{Term::compound("t", {r.head}), std::move(body)});
    }
  }
  return out;
}

Grammar eliminate_left_recursion(const Grammar& dcg_prime) {
  const Rule s1 = seed_recursive();
  const Rule s2 = seed_base();
  std::optional<std::size_t> i1, i2;
  for (std::size_t i = 0; i < dcg_prime.rules.size(); ++i) {
    if (!i1 && is_variant(dcg_prime.rules[i], s1)) {
      i1 = i;
    } else if (!i2 && is_variant(dcg_prime.rules[i], s2)) {
      i2 = i;
    }
  }
  if (!i1 || !i2) throw SeedRulesMissingError();

  Grammar out;
  const std::size_t at = std::min(*i1, *i2);
  for (std::size_t i = 0; i < dcg_prime.rules.size(); ++i) {
    if (i == at) {
      for (Rule& r : replacement_rules()) out.rules.push_back(std::move(r));
    }
    if (i == *i1 || i == *i2) continue;
    out.rules.push_back(dcg_prime.rules[i]);
  }
  return out;
}

Grammar transform(const Grammar& g, int limit) {
  return eliminate_left_recursion(encode(eliminate_empty(g, limit)));
}

}  // namespace dcgx
