#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcgx/term.hpp"

namespace dcgx {

/// Symbol of the context-free skeleton: functor plus arity.
struct Symbol {
  std::string name;
  int arity = 0;

  auto operator<=>(const Symbol&) const = default;
};

/// Renders a symbol as "name/arity".
std::string to_string(const Symbol& sym);

/// Skeleton symbol of a nonterminal call term (atom or compound).
Symbol symbol_of(const Term& call);

/// One element of a rule body: a nonterminal call or a terminal token.
class BodyItem {
 public:
  static BodyItem call(Term nonterminal);
  static BodyItem token(std::string terminal);

  bool is_nonterminal() const { return v_.index() == 0; }
  bool is_terminal() const { return v_.index() == 1; }
  const Term& term() const { return std::get<0>(v_); }
  const std::string& token() const { return std::get<1>(v_); }

  bool operator==(const BodyItem&) const = default;

 private:
  explicit BodyItem(std::variant<Term, std::string> v) : v_(std::move(v)) {}
  std::variant<Term, std::string> v_;
};

/// A DCG rule.  An empty body is the empty production, written [].
struct Rule {
  Term head;
  std::vector<BodyItem> body;

  bool is_empty() const { return body.empty(); }
  bool operator==(const Rule&) const = default;
};

struct Grammar {
  std::vector<Rule> rules;
};

/// Functor/arity pairs occurring as rule heads or body calls.
std::set<Symbol> nonterminals(const Grammar& g);
/// Tokens occurring in rule bodies.
std::set<std::string> terminals(const Grammar& g);
/// Largest variable id in any rule, or -1 for a ground grammar.
int max_var_id(const Grammar& g);

/// Alphabetic variant of r whose variables are all freshly issued.
Rule rename_apart(const Rule& r, FreshVars& fresh);

/// True iff one variable bijection maps r1 onto r2 (heads and bodies).
bool is_variant(const Rule& r1, const Rule& r2);

// --------------------------------------------------------------------------
// Textual format.  One rule per line:
//
//     s(s(NP,VP)) --> np(NP), vp(VP).
//     n(n(you)) --> [].
//
// Variables start with an upper case letter or _; atoms, functors and
// tokens start with a lower case letter and continue with alphanumerics
// or underscore.  Terminal lists [tok1, tok2] expand to consecutive
// terminal items; [] as the entire body is the empty production.
// Comments run from % to end of line.

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ReadOptions {
  // Accept g, t, d and d_tc as nonterminals.  They are reserved in user
  // grammars because the left-corner encoding introduces them; reading
  // back already-transformed output needs them enabled.
  bool allow_reserved = false;
};

struct ReadResult {
  std::optional<Grammar> grammar;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return grammar.has_value(); }
};

ReadResult read_grammar(std::string_view text, const ReadOptions& opts = {});

struct ReadTermResult {
  std::optional<Term> term;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return term.has_value(); }
};

/// Parses a single term, e.g. a parse goal such as "s(S)".
ReadTermResult read_term(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Rule& r);

/// Canonical text of the whole grammar, one rule per line, LF endings.
/// Reading it back yields a grammar variant-equal rule by rule.
std::string write_grammar(const Grammar& g);

// --------------------------------------------------------------------------
// Context-free skeleton: every rule with its argument terms erased.

struct SkeletonItem {
  bool terminal = false;
  Symbol symbol;      // nonterminal items
  std::string token;  // terminal items
};

struct SkeletonProduction {
  Symbol lhs;
  std::vector<SkeletonItem> rhs;
};

struct SkeletonCFG {
  std::vector<SkeletonProduction> productions;  // one per rule, in order
  std::vector<Symbol> symbols;                  // first-occurrence order
};

SkeletonCFG skeleton(const Grammar& g);

}  // namespace dcgx
