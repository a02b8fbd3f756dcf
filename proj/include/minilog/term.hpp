#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace minilog {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Logic terms: the substrate shared by unification, type inference and the
// suspension engine. Terms are immutable; sharing subterms is safe.
struct Var {
  int id;
};

struct Atom {
  std::string name;
};

struct IntLit {
  long long value;
};

struct Compound {
  std::string functor;
  std::vector<TermPtr> args;
};

struct Term {
  std::variant<Var, Atom, IntLit, Compound> node;

  bool is_var() const { return std::holds_alternative<Var>(node); }
  bool is_atom() const { return std::holds_alternative<Atom>(node); }
  bool is_int() const { return std::holds_alternative<IntLit>(node); }
  bool is_compound() const { return std::holds_alternative<Compound>(node); }

  const Var& as_var() const { return std::get<Var>(node); }
  const Atom& as_atom() const { return std::get<Atom>(node); }
  const IntLit& as_int() const { return std::get<IntLit>(node); }
  const Compound& as_compound() const { return std::get<Compound>(node); }
};

TermPtr mk_var(int id);
TermPtr mk_atom(std::string name);
TermPtr mk_int(long long value);
TermPtr mk_compound(std::string functor, std::vector<TermPtr> args);

// Fresh-variable allocator. One per evaluation context; never shared between
// contexts, so ids stay unique per allocation within a run.
class VarSource {
 public:
  int fresh_id() { return next_++; }
  TermPtr fresh() { return mk_var(fresh_id()); }

 private:
  int next_ = 1;
};

// Persistent binding store. `extend` returns a new substitution and leaves
// the receiver untouched, so backtracking is just dropping the extension.
// Bindings are triangular: a bound term may itself contain bound variables;
// `resolve` chases them to a fixpoint (the occurs check keeps this finite).
class Substitution {
 public:
  Substitution() = default;

  // Pre: var_id is unbound in this substitution.
  Substitution extend(int var_id, TermPtr term) const;

  // Null when unbound.
  const TermPtr* lookup(int var_id) const;

  bool empty() const { return head_ == nullptr; }

 private:
  struct Node {
    int var_id;
    TermPtr term;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
};

// Follow variable bindings at the top level only.
TermPtr walk(TermPtr t, const Substitution& s);

// Replace every bound variable in t to fixpoint; unbound variables remain.
TermPtr resolve(TermPtr t, const Substitution& s);

bool is_ground(TermPtr t, const Substitution& s);

// True iff var_id occurs in t (after walking bindings).
bool occurs(int var_id, TermPtr t, const Substitution& s);

// Most general unifier extending s, or nullopt. Occurs check is always on:
// a variable never binds to a term containing itself.
std::optional<Substitution> unify(TermPtr a, TermPtr b, const Substitution& s);

// Structural equality, variables compared by id.
bool term_equal(const TermPtr& a, const TermPtr& b);

// Assigns display names to variables: names from the given table when
// present, otherwise canonical _1, _2, ... in first-use order.
class VarNamer {
 public:
  VarNamer() = default;
  explicit VarNamer(const std::map<int, std::string>* given) : given_(given) {}

  std::string name(int var_id);

 private:
  const std::map<int, std::string>* given_ = nullptr;
  std::map<int, std::string> assigned_;
  int counter_ = 1;
};

std::string render_term(const TermPtr& t, const Substitution& s, VarNamer& namer);
std::string render_term(const TermPtr& t, const Substitution& s);
std::string render_term(const TermPtr& t);

}  // namespace minilog
