#include "dcgx/grammar.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace dcgx {

std::string to_string(const Symbol& sym) {
  return sym.name + "/" + std::to_string(sym.arity);
}

Symbol symbol_of(const Term& call) {
  assert(!call.is_variable());
  return Symbol{call.name(), call.arity()};
}

BodyItem BodyItem::call(Term nonterminal) {
  return BodyItem(std::variant<Term, std::string>(std::in_place_index<0>,
                                                  std::move(nonterminal)));
}

BodyItem BodyItem::token(std::string terminal) {
  return BodyItem(std::variant<Term, std::string>(std::in_place_index<1>,
                                                  std::move(terminal)));
}

std::set<Symbol> nonterminals(const Grammar& g) {
  std::set<Symbol> out;
  for (const Rule& r : g.rules) {
    out.insert(symbol_of(r.head));
    for (const BodyItem& item : r.body) {
      if (item.is_nonterminal()) out.insert(symbol_of(item.term()));
    }
  }
  return out;
}

std::set<std::string> terminals(const Grammar& g) {
  std::set<std::string> out;
  for (const Rule& r : g.rules) {
    for (const BodyItem& item : r.body) {
      if (item.is_terminal()) out.insert(item.token());
    }
  }
  return out;
}

int max_var_id(const Grammar& g) {
  int m = -1;
  for (const Rule& r : g.rules) {
    m = std::max(m, max_var_id(r.head));
    for (const BodyItem& item : r.body) {
      if (item.is_nonterminal()) m = std::max(m, max_var_id(item.term()));
    }
  }
  return m;
}

namespace {

// Renames variables to fresh ones, sharing ground subtrees.  Returns
// nullopt when t contains no variables.
std::optional<Term> rename_changed(const Term& t, std::map<int, Term>& seen,
                                   FreshVars& fresh) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = seen.find(t.id());
      if (it != seen.end()) return it->second;
      Term v = fresh.fresh();
      seen.emplace(t.id(), v);
      return v;
    }
    case Term::Kind::Atom:
      return std::nullopt;
    case Term::Kind::Compound: {
      const std::vector<Term>& args = t.args();
      std::optional<std::vector<Term>> rebuilt;
      for (std::size_t i = 0; i < args.size(); ++i) {
        auto changed = rename_changed(args[i], seen, fresh);
        if (changed && !rebuilt) rebuilt.emplace(args.begin(), args.begin() + i);
        if (rebuilt) rebuilt->push_back(changed ? std::move(*changed) : args[i]);
      }
      if (!rebuilt) return std::nullopt;
      return Term::compound(t.name(), std::move(*rebuilt));
    }
  }
  return std::nullopt;
}

}  // namespace

Rule rename_apart(const Rule& r, FreshVars& fresh) {
  std::map<int, Term> seen;
  auto rename = [&](const Term& t) {
    auto changed = rename_changed(t, seen, fresh);
    return changed ? std::move(*changed) : t;
  };
  Rule out{rename(r.head), {}};
  out.body.reserve(r.body.size());
  for (const BodyItem& item : r.body) {
    if (item.is_nonterminal()) {
      out.body.push_back(BodyItem::call(rename(item.term())));
    } else {
      out.body.push_back(item);
    }
  }
  return out;
}

bool is_variant(const Rule& r1, const Rule& r2) {
  if (r1.body.size() != r2.body.size()) return false;
  VariantMatcher m;
  if (!m.match(r1.head, r2.head)) return false;
  for (std::size_t i = 0; i < r1.body.size(); ++i) {
    const BodyItem& a = r1.body[i];
    const BodyItem& b = r2.body[i];
    if (a.is_terminal() != b.is_terminal()) return false;
    if (a.is_terminal()) {
      if (a.token() != b.token()) return false;
    } else if (!m.match(a.term(), b.term())) {
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Reader.

namespace {

enum class Tok {
  Atom,
  Var,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Arrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text, std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int tl = line;
    int tc = col;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", tl, tc}); advance(1); continue;
      case ')': out.push_back({Tok::RParen, ")", tl, tc}); advance(1); continue;
      case '[': out.push_back({Tok::LBracket, "[", tl, tc}); advance(1); continue;
      case ']': out.push_back({Tok::RBracket, "]", tl, tc}); advance(1); continue;
      case ',': out.push_back({Tok::Comma, ",", tl, tc}); advance(1); continue;
      case '.': out.push_back({Tok::Dot, ".", tl, tc}); advance(1); continue;
      default: break;
    }
    if (c == '-') {
      if (text.substr(i, 3) == "-->") {
        out.push_back({Tok::Arrow, "-->", tl, tc});
        advance(3);
      } else {
        diags.push_back({tl, tc, "expected '-->'"});
        advance(1);
      }
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      bool var = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      out.push_back({var ? Tok::Var : Tok::Atom, std::move(name), tl, tc});
      advance(j - i);
      continue;
    }
    diags.push_back({tl, tc, std::string("unexpected character '") + c + "'"});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_reserved(const std::string& name) {
  return name == "g" || name == "t" || name == "d" || name == "d_tc";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const ReadOptions& opts)
      : toks_(std::move(toks)), opts_(opts) {}

  ReadResult parse_grammar() {
    std::vector<Rule> rules;
    while (!at(Tok::End)) {
      scope_.clear();
      try {
        if (auto r = parse_rule()) rules.push_back(std::move(*r));
      } catch (const Recover&) {
        while (!at(Tok::Dot) && !at(Tok::End)) ++i_;
        if (at(Tok::Dot)) ++i_;
      }
    }
    ReadResult res;
    res.diagnostics = std::move(diags_);
    if (res.diagnostics.empty()) res.grammar = Grammar{std::move(rules)};
    return res;
  }

  ReadTermResult parse_single_term() {
    ReadTermResult res;
    try {
      Term t = parse_term();
      if (!at(Tok::End)) fail(cur(), "unexpected input after term");
      res.term = std::move(t);
    } catch (const Recover&) {
    }
    res.diagnostics = std::move(diags_);
    if (!res.diagnostics.empty()) res.term.reset();
    return res;
  }

 private:
  struct Recover {};

  const Token& cur() const { return toks_[i_]; }
  bool at(Tok k) const { return cur().kind == k; }

  [[noreturn]] void fail(const Token& t, std::string msg) {
    diags_.push_back({t.line, t.col, std::move(msg)});
    throw Recover{};
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(cur(), std::string("expected ") + what);
    return toks_[i_++];
  }

  Term parse_term() {
    if (at(Tok::Var)) {
      Token tok = toks_[i_++];
      if (tok.text == "_") return Term::variable("_", next_var_++);
      auto it = scope_.find(tok.text);
      if (it != scope_.end()) return it->second;
      Term v = Term::variable(tok.text, next_var_++);
      scope_.emplace(tok.text, v);
      return v;
    }
    if (at(Tok::Atom)) {
      Token tok = toks_[i_++];
      if (!at(Tok::LParen)) return Term::atom(tok.text);
      ++i_;
      std::vector<Term> args;
      args.push_back(parse_term());
      while (at(Tok::Comma)) {
        ++i_;
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "')'");
      return Term::compound(tok.text, std::move(args));
    }
    fail(cur(), "expected a term");
  }

  std::optional<Rule> parse_rule() {
    const Token head_tok = cur();
    Term head = parse_term();
    expect(Tok::Arrow, "'-->'");
    std::vector<BodyItem> items;
    int empty_lists = 0;
    Token empty_tok = cur();
    for (;;) {
      if (at(Tok::LBracket)) {
        Token open = toks_[i_++];
        if (at(Tok::RBracket)) {
          ++i_;
          ++empty_lists;
          empty_tok = open;
        } else {
          items.push_back(BodyItem::token(expect(Tok::Atom, "a token").text));
          while (at(Tok::Comma)) {
            ++i_;
            items.push_back(BodyItem::token(expect(Tok::Atom, "a token").text));
          }
          expect(Tok::RBracket, "']'");
        }
      } else {
        const Token item_tok = cur();
        Term t = parse_term();
        if (t.is_variable())
          fail(item_tok, "body item must be a nonterminal call or a terminal list");
        items.push_back(BodyItem::call(std::move(t)));
      }
      if (at(Tok::Comma)) {
        ++i_;
        continue;
      }
      break;
    }
    expect(Tok::Dot, "'.'");

    // Semantic checks; the rule is syntactically complete, so report
    // without resynchronizing.
    bool bad = false;
    if (head.is_variable()) {
      diags_.push_back({head_tok.line, head_tok.col,
                        "rule head must be a nonterminal call"});
      bad = true;
    }
    if (empty_lists > 0 && (empty_lists > 1 || !items.empty())) {
      diags_.push_back({empty_tok.line, empty_tok.col,
                        "[] is only allowed as the entire rule body"});
      bad = true;
    }
    if (!opts_.allow_reserved && !head.is_variable()) {
      auto check_reserved = [&](const Term& call, const Token& where) {
        if (is_reserved(call.name())) {
          diags_.push_back({where.line, where.col,
                            "reserved nonterminal name '" + call.name() + "'"});
          bad = true;
        }
      };
      check_reserved(head, head_tok);
      for (const BodyItem& item : items) {
        if (item.is_nonterminal()) check_reserved(item.term(), head_tok);
      }
    }
    if (bad) return std::nullopt;
    return Rule{std::move(head), std::move(items)};
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<Diagnostic> diags_;
  std::map<std::string, Term> scope_;
  int next_var_ = 0;
  ReadOptions opts_;
};

}  // namespace

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         d.message;
}

ReadResult read_grammar(std::string_view text, const ReadOptions& opts) {
  std::vector<Diagnostic> lex_diags;
  std::vector<Token> toks = lex(text, lex_diags);
  if (!lex_diags.empty()) {
    ReadResult res;
    res.diagnostics = std::move(lex_diags);
    return res;
  }
  Parser p(std::move(toks), opts);
  return p.parse_grammar();
}

ReadTermResult read_term(std::string_view text) {
  std::vector<Diagnostic> lex_diags;
  std::vector<Token> toks = lex(text, lex_diags);
  if (!lex_diags.empty()) {
    ReadTermResult res;
    res.diagnostics = std::move(lex_diags);
    return res;
  }
  Parser p(std::move(toks), ReadOptions{});
  return p.parse_single_term();
}

// --------------------------------------------------------------------------
// Writer.  Variables print under their source names when that is
// unambiguous within the printed unit; clashing or anonymous ones fall
// back to _G<k> with a per-unit counter.

namespace {

void walk_vars(const Term& t, std::vector<Term>& order,
               std::map<int, int>& occurrences) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (occurrences[t.id()]++ == 0) order.push_back(t);
      return;
    case Term::Kind::Atom:
      return;
    case Term::Kind::Compound:
      for (const Term& a : t.args()) walk_vars(a, order, occurrences);
      return;
  }
}

std::map<int, std::string> plan_names(const std::vector<Term>& order,
                                      const std::map<int, int>& occurrences) {
  std::map<std::string, int> ids_per_name;
  for (const Term& v : order) ++ids_per_name[v.name()];
  std::map<int, std::string> out;
  std::set<std::string> taken;
  for (const Term& v : order) {
    bool anonymous_shared = v.name() == "_" && occurrences.at(v.id()) > 1;
    if (ids_per_name[v.name()] == 1 && !anonymous_shared) {
      out.emplace(v.id(), v.name());
      taken.insert(v.name());
    }
  }
  int k = 0;
  for (const Term& v : order) {
    if (out.contains(v.id())) continue;
    std::string candidate;
    do {
      candidate = "_G" + std::to_string(k++);
    } while (taken.contains(candidate));
    out.emplace(v.id(), candidate);
    taken.insert(candidate);
  }
  return out;
}

void print_term(std::ostream& os, const Term& t,
                const std::map<int, std::string>& names) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      os << names.at(t.id());
      return;
    case Term::Kind::Atom:
      os << t.name();
      return;
    case Term::Kind::Compound: {
      os << t.name() << '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i > 0) os << ',';
        print_term(os, t.args()[i], names);
      }
      os << ')';
      return;
    }
  }
}

void print_rule(std::ostream& os, const Rule& r) {
  std::vector<Term> order;
  std::map<int, int> occurrences;
  walk_vars(r.head, order, occurrences);
  for (const BodyItem& item : r.body) {
    if (item.is_nonterminal()) walk_vars(item.term(), order, occurrences);
  }
  auto names = plan_names(order, occurrences);
  print_term(os, r.head, names);
  os << " --> ";
  if (r.body.empty()) {
    os << "[]";
  } else {
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i > 0) os << ", ";
      const BodyItem& item = r.body[i];
      if (item.is_terminal()) {
        os << '[' << item.token() << ']';
      } else {
        print_term(os, item.term(), names);
      }
    }
  }
  os << '.';
}

}  // namespace

std::string to_string(const Term& t) {
  std::vector<Term> order;
  std::map<int, int> occurrences;
  walk_vars(t, order, occurrences);
  auto names = plan_names(order, occurrences);
  std::ostringstream os;
  print_term(os, t, names);
  return os.str();
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  print_rule(os, r);
  return os.str();
}

std::string write_grammar(const Grammar& g) {
  std::ostringstream os;
  for (const Rule& r : g.rules) {
    print_rule(os, r);
    os << '\n';
  }
  return os.str();
}

// --------------------------------------------------------------------------
// Skeleton.

SkeletonCFG skeleton(const Grammar& g) {
  SkeletonCFG cfg;
  std::set<Symbol> seen;
  auto add_symbol = [&](const Symbol& s) {
    if (seen.insert(s).second) cfg.symbols.push_back(s);
  };
  for (const Rule& r : g.rules) {
    SkeletonProduction prod;
    prod.lhs = symbol_of(r.head);
    add_symbol(prod.lhs);
    for (const BodyItem& item : r.body) {
      SkeletonItem si;
      if (item.is_terminal()) {
        si.terminal = true;
        si.token = item.token();
      } else {
        si.symbol = symbol_of(item.term());
        add_symbol(si.symbol);
      }
      prod.rhs.push_back(std::move(si));
    }
    cfg.productions.push_back(std::move(prod));
  }
  return cfg;
}

}  // namespace dcgx
