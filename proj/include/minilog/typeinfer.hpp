#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "minilog/common.hpp"
#include "minilog/term.hpp"

namespace minilog {

// Formula language over sets and integers: operations (union, intersect,
// plus), predicates (in_set, gt, eq), conjunction, set displays and
// identifiers. Types are logic terms: `integer`, `predicate`, `set(T)`.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOpKind { Union, Intersect, Plus, InSet, Gt, And, Eq };

struct EmptySetExpr {};
struct BinExpr {
  BinOpKind kind;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct NumExpr {
  long long value;
};
struct SetLitExpr {
  std::vector<ExprPtr> elems;  // nonempty; the empty set is EmptySetExpr
};
struct IdentExpr {
  std::string name;
};

struct Expr {
  std::variant<EmptySetExpr, BinExpr, NumExpr, SetLitExpr, IdentExpr> node;
};

ExprPtr mk_empty_set();
ExprPtr mk_bin(BinOpKind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr mk_num(long long value);
ExprPtr mk_set_lit(std::vector<ExprPtr> elems);
ExprPtr mk_ident(std::string name);

std::string render_expr(const ExprPtr& e);
int expr_node_count(const ExprPtr& e);

// Functional notation, e.g. `and(eq(union([z],[x,y]),u),gt(z,v))`.
ExprPtr parse_expr_text(const std::string& text);

// Identifier typings, newest binding first.
struct TypeEnv {
  std::vector<std::pair<std::string, TermPtr>> entries;

  const TermPtr* find(const std::string& name) const;
  void add(const std::string& name, TermPtr type);  // prepends
};

struct InferOk {
  TermPtr type;  // resolves to predicate, integer, or set(T)
  TypeEnv env;
  Substitution subst;
};

struct InferError {
  ExprPtr expr;         // offending subexpression
  TermPtr expected;     // demanded type, resolved at failure time
  TypeEnv env;          // environment at that point
  Substitution subst;
};

using TypeResult = std::variant<InferOk, InferError>;

struct InferStats {
  int visits = 0;  // subexpression visits; a single pass visits each once
};

// One structurally matching rule per node, committed: a failed unification
// reports a type error, no alternative rules are retried. The environment
// and substitution thread left-to-right through subterms.
TypeResult infer(const ExprPtr& e, InferStats* stats = nullptr);

// `[id(name,type),...]` newest first; unbound type variables render as
// _1, _2, ... in first-occurrence order.
std::string render_type_env(const TypeEnv& env, const Substitution& s,
                            VarNamer& namer);
std::string render_type_env(const TypeEnv& env, const Substitution& s);

// `Type error for <expr> (expected: <type>, Env: <env>)`.
std::string render_type_error(const InferError& err);

}  // namespace minilog
