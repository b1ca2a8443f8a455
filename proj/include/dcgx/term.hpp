#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dcgx {

/// First-order term: a variable, an atom, or a compound term with a
/// functor and a non-empty argument list.  Zero-argument symbols are
/// atoms, never compounds.  A variable is identified by its id; the
/// name is only for display, and two variables with equal ids are the
/// same variable.  Terms are immutable values; argument vectors are
/// shared between copies, so copying is cheap.
class Term {
 public:
  enum class Kind { Variable, Atom, Compound };

  static Term variable(std::string name, int id);
  static Term atom(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_compound() const { return kind_ == Kind::Compound; }

  /// Variable display name, atom name, or compound functor.
  const std::string& name() const { return name_; }
  /// Variable id; meaningful only for variables.
  int id() const { return id_; }
  /// Arguments; empty unless compound.
  const std::vector<Term>& args() const;
  int arity() const { return args_ ? static_cast<int>(args_->size()) : 0; }

  /// Structural equality; variables compare by id.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  Term(Kind kind, std::string name, int id,
       std::shared_ptr<const std::vector<Term>> args);

  Kind kind_;
  int id_;
  std::string name_;
  std::shared_ptr<const std::vector<Term>> args_;
};

/// Source of fresh variables.  Issued ids start at the construction
/// value and increase; callers seed it above every id already in use,
/// so freshness is per computation and there is no global state.
class FreshVars {
 public:
  explicit FreshVars(int first_id = 0) : next_(first_id) {}

  /// A new variable displayed as _G<id>.
  Term fresh();
  /// A new variable with the given display name.
  Term fresh_named(std::string name);

  int next_id() const { return next_; }

 private:
  int next_;
};

/// Finite map from variable ids to terms, kept idempotent: no bound
/// variable occurs in any range term, so apply() resolves fully in a
/// single pass.  (With the occurs check disabled a self-referential
/// binding breaks idempotence; apply still terminates but leaves the
/// cycle unresolved.)
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const Term* lookup(int var_id) const;

  /// Replaces every bound variable in t by its binding.
  Term apply(const Term& t) const;

  /// Binds var to value after resolving value under this substitution.
  /// Returns false when the occurs check rejects the binding.
  bool bind(const Term& var, Term value, bool occurs_check = true);

  const std::map<int, Term>& bindings() const { return map_; }

 private:
  std::map<int, Term> map_;
};

/// Most general unifier of t1 and t2 extending s, or nullopt when no
/// unifier extending s exists.  Failure is a normal outcome.
std::optional<Substitution> unify(const Term& t1, const Term& t2,
                                  Substitution s = {},
                                  bool occurs_check = true);

/// True iff the variable with the given id occurs anywhere in t.
bool occurs(int var_id, const Term& t);

/// Incremental variant matcher.  Feed it term pairs; it maintains one
/// variable-to-variable bijection across all of them.
class VariantMatcher {
 public:
  bool match(const Term& t1, const Term& t2);

 private:
  std::map<int, int> fwd_;
  std::map<int, int> bwd_;
};

/// True iff a variable-to-variable bijection maps t1 onto t2.
bool is_variant(const Term& t1, const Term& t2);

/// Largest variable id occurring in t, or -1 if t is ground.
int max_var_id(const Term& t);

/// Appends the distinct variables of t to out in order of first
/// occurrence, skipping ids already present.
void collect_vars(const Term& t, std::vector<Term>& out);

}  // namespace dcgx
