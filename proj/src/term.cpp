#include "dcgx/term.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace dcgx {

namespace {
const std::vector<Term> kNoArgs;
}

Term::Term(Kind kind, std::string name, int id,
           std::shared_ptr<const std::vector<Term>> args)
    : kind_(kind), id_(id), name_(std::move(name)), args_(std::move(args)) {}

Term Term::variable(std::string name, int id) {
  return Term(Kind::Variable, std::move(name), id, nullptr);
}

Term Term::atom(std::string name) {
  return Term(Kind::Atom, std::move(name), 0, nullptr);
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  assert(!args.empty() && "zero-argument symbols are atoms");
  return Term(Kind::Compound, std::move(functor), 0,
              std::make_shared<const std::vector<Term>>(std::move(args)));
}

const std::vector<Term>& Term::args() const {
  return args_ ? *args_ : kNoArgs;
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Variable:
      return id_ == other.id_;
    case Kind::Atom:
      return name_ == other.name_;
    case Kind::Compound:
      if (name_ != other.name_) return false;
      if (args_ == other.args_) return true;
      return *args_ == *other.args_;
  }
  return false;
}

Term FreshVars::fresh() {
  int id = next_++;
  return Term::variable("_G" + std::to_string(id), id);
}

Term FreshVars::fresh_named(std::string name) {
  return Term::variable(std::move(name), next_++);
}

const Term* Substitution::lookup(int var_id) const {
  auto it = map_.find(var_id);
  return it == map_.end() ? nullptr : &it->second;
}

namespace {

// Applies s, returning nullopt when nothing changed so unchanged
// subtrees stay shared.
std::optional<Term> apply_changed(const Substitution& s, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const Term* bound = s.lookup(t.id());
      if (bound) return *bound;
      return std::nullopt;
    }
    case Term::Kind::Atom:
      return std::nullopt;
    case Term::Kind::Compound: {
      const std::vector<Term>& args = t.args();
      std::optional<std::vector<Term>> rebuilt;
      for (std::size_t i = 0; i < args.size(); ++i) {
        std::optional<Term> changed = apply_changed(s, args[i]);
        if (changed && !rebuilt) {
          rebuilt.emplace(args.begin(), args.begin() + i);
        }
        if (rebuilt) rebuilt->push_back(changed ? std::move(*changed) : args[i]);
      }
      if (!rebuilt) return std::nullopt;
      return Term::compound(t.name(), std::move(*rebuilt));
    }
  }
  return std::nullopt;
}

}  // namespace

Term Substitution::apply(const Term& t) const {
  if (map_.empty()) return t;
  std::optional<Term> changed = apply_changed(*this, t);
  return changed ? std::move(*changed) : t;
}

bool Substitution::bind(const Term& var, Term value, bool occurs_check) {
  assert(var.is_variable());
  assert(lookup(var.id()) == nullptr);
  value = apply(value);
  if (value.is_variable() && value.id() == var.id()) return true;
  if (occurs_check && occurs(var.id(), value)) return false;
  Substitution unit;
  unit.map_.emplace(var.id(), value);
  for (auto& [id, range] : map_) {
    std::optional<Term> changed = apply_changed(unit, range);
    if (changed) range = std::move(*changed);
  }
  map_.emplace(var.id(), std::move(value));
  return true;
}

namespace {

// One-step dereference; with an idempotent substitution the binding is
// already fully resolved.  Returns a copy so callers stay valid while
// later binds rewrite the stored ranges.
Term walk(const Term& t, const Substitution& s) {
  if (t.is_variable()) {
    if (const Term* bound = s.lookup(t.id())) return *bound;
  }
  return t;
}

bool unify_rec(const Term& a, const Term& b, Substitution& s,
               bool occurs_check) {
  Term x = walk(a, s);
  Term y = walk(b, s);
  if (x.is_variable()) {
    if (y.is_variable() && x.id() == y.id()) return true;
    return s.bind(x, std::move(y), occurs_check);
  }
  if (y.is_variable()) return s.bind(y, std::move(x), occurs_check);
  if (x.kind() != y.kind() || x.name() != y.name()) return false;
  if (x.is_atom()) return true;
  if (x.args().size() != y.args().size()) return false;
  for (std::size_t i = 0; i < x.args().size(); ++i) {
    if (!unify_rec(x.args()[i], y.args()[i], s, occurs_check)) return false;
  }
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& t1, const Term& t2,
                                  Substitution s, bool occurs_check) {
  if (unify_rec(t1, t2, s, occurs_check)) return s;
  return std::nullopt;
}

bool occurs(int var_id, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.id() == var_id;
    case Term::Kind::Atom:
      return false;
    case Term::Kind::Compound:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return occurs(var_id, a); });
  }
  return false;
}

bool VariantMatcher::match(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: {
      auto f = fwd_.find(a.id());
      auto g = bwd_.find(b.id());
      if (f == fwd_.end() && g == bwd_.end()) {
        fwd_.emplace(a.id(), b.id());
        bwd_.emplace(b.id(), a.id());
        return true;
      }
      return f != fwd_.end() && g != bwd_.end() && f->second == b.id() &&
             g->second == a.id();
    }
    case Term::Kind::Atom:
      return a.name() == b.name();
    case Term::Kind::Compound: {
      if (a.name() != b.name() || a.args().size() != b.args().size())
        return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!match(a.args()[i], b.args()[i])) return false;
      }
      return true;
    }
  }
  return false;
}

bool is_variant(const Term& t1, const Term& t2) {
  VariantMatcher m;
  return m.match(t1, t2);
}

int max_var_id(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.id();
    case Term::Kind::Atom:
      return -1;
    case Term::Kind::Compound: {
      int m = -1;
      for (const Term& a : t.args()) m = std::max(m, max_var_id(a));
      return m;
    }
  }
  return -1;
}

void collect_vars(const Term& t, std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      for (const Term& v : out) {
        if (v.id() == t.id()) return;
      }
      out.push_back(t);
      return;
    }
    case Term::Kind::Atom:
      return;
    case Term::Kind::Compound:
      for (const Term& a : t.args()) collect_vars(a, out);
      return;
  }
}

}  // namespace dcgx
