#include "minilog/typeinfer.hpp"

#include <sstream>

#include "minilog/parse.hpp"

namespace minilog {

ExprPtr mk_empty_set() { return std::make_shared<Expr>(Expr{EmptySetExpr{}}); }

ExprPtr mk_bin(BinOpKind kind, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<Expr>(Expr{BinExpr{kind, std::move(lhs), std::move(rhs)}});
}

ExprPtr mk_num(long long value) { return std::make_shared<Expr>(Expr{NumExpr{value}}); }

ExprPtr mk_set_lit(std::vector<ExprPtr> elems) {
  return std::make_shared<Expr>(Expr{SetLitExpr{std::move(elems)}});
}

ExprPtr mk_ident(std::string name) {
  return std::make_shared<Expr>(Expr{IdentExpr{std::move(name)}});
}

namespace {

const char* bin_op_name(BinOpKind kind) {
  switch (kind) {
    case BinOpKind::Union: return "union";
    case BinOpKind::Intersect: return "intersect";
    case BinOpKind::Plus: return "plus";
    case BinOpKind::InSet: return "in_set";
    case BinOpKind::Gt: return "gt";
    case BinOpKind::And: return "and";
    case BinOpKind::Eq: return "eq";
  }
  return "?";
}

void render_expr_rec(const ExprPtr& e, std::ostringstream& out) {
  struct Visitor {
    std::ostringstream& out;
    void operator()(const EmptySetExpr&) { out << "[]"; }
    void operator()(const BinExpr& b) {
      out << bin_op_name(b.kind) << '(';
      render_expr_rec(b.lhs, out);
      out << ',';
      render_expr_rec(b.rhs, out);
      out << ')';
    }
    void operator()(const NumExpr& n) { out << n.value; }
    void operator()(const SetLitExpr& s) {
      out << '[';
      for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (i) out << ',';
        render_expr_rec(s.elems[i], out);
      }
      out << ']';
    }
    void operator()(const IdentExpr& id) { out << id.name; }
  };
  std::visit(Visitor{out}, e->node);
}

}  // namespace

std::string render_expr(const ExprPtr& e) {
  std::ostringstream out;
  render_expr_rec(e, out);
  return out.str();
}

int expr_node_count(const ExprPtr& e) {
  struct Visitor {
    int operator()(const EmptySetExpr&) const { return 1; }
    int operator()(const BinExpr& b) const {
      return 1 + expr_node_count(b.lhs) + expr_node_count(b.rhs);
    }
    int operator()(const NumExpr&) const { return 1; }
    int operator()(const SetLitExpr& s) const {
      int n = 1;
      for (const ExprPtr& el : s.elems) n += expr_node_count(el);
      return n;
    }
    int operator()(const IdentExpr&) const { return 1; }
  };
  return std::visit(Visitor{}, e->node);
}

namespace {

ExprPtr parse_expr_rec(Lexer& lex) {
  if (lex.at(Token::Kind::Integer)) {
    return mk_num(lex.next().int_value);
  }
  if (lex.at_punct("[")) {
    lex.next();
    if (lex.at_punct("]")) {
      lex.next();
      return mk_empty_set();
    }
    std::vector<ExprPtr> elems;
    elems.push_back(parse_expr_rec(lex));
    while (lex.at_punct(",")) {
      lex.next();
      elems.push_back(parse_expr_rec(lex));
    }
    lex.expect_punct("]");
    return mk_set_lit(std::move(elems));
  }
  if (lex.at(Token::Kind::Ident)) {
    Token t = lex.next();
    if (!lex.at_punct("(")) {
      return mk_ident(t.text);
    }
    BinOpKind kind;
    if (t.text == "union") kind = BinOpKind::Union;
    else if (t.text == "intersect") kind = BinOpKind::Intersect;
    else if (t.text == "plus") kind = BinOpKind::Plus;
    else if (t.text == "in_set") kind = BinOpKind::InSet;
    else if (t.text == "gt") kind = BinOpKind::Gt;
    else if (t.text == "and") kind = BinOpKind::And;
    else if (t.text == "eq") kind = BinOpKind::Eq;
    else throw ParseError("unknown operator '" + t.text + "'", t.line);
    lex.next();
    ExprPtr lhs = parse_expr_rec(lex);
    lex.expect_punct(",");
    ExprPtr rhs = parse_expr_rec(lex);
    lex.expect_punct(")");
    return mk_bin(kind, std::move(lhs), std::move(rhs));
  }
  lex.fail("expected a formula, found '" + lex.peek().text + "'");
}

}  // namespace

ExprPtr parse_expr_text(const std::string& text) {
  Lexer lex(text);
  ExprPtr e = parse_expr_rec(lex);
  if (!lex.at(Token::Kind::End)) {
    lex.fail("trailing input after formula");
  }
  return e;
}

const TermPtr* TypeEnv::find(const std::string& name) const {
  for (const auto& [n, t] : entries) {
    if (n == name) return &t;
  }
  return nullptr;
}

void TypeEnv::add(const std::string& name, TermPtr type) {
  entries.insert(entries.begin(), {name, std::move(type)});
}

namespace {

TermPtr type_integer() { return mk_atom("integer"); }
TermPtr type_predicate() { return mk_atom("predicate"); }
TermPtr type_set(TermPtr elem) { return mk_compound("set", {std::move(elem)}); }

struct InferCtx {
  VarSource vars;
  TypeEnv env;
  Substitution subst;
  InferStats* stats = nullptr;
  std::optional<InferError> error;

  // Records the error with the expected type resolved at failure time.
  bool fail_at(const ExprPtr& e, const TermPtr& expected) {
    error = InferError{e, resolve(expected, subst), env, subst};
    return false;
  }

  bool require(const ExprPtr& e, const TermPtr& expected, const TermPtr& actual) {
    auto next = unify(expected, actual, subst);
    if (!next) return fail_at(e, expected);
    subst = *next;
    return true;
  }
};

bool check(const ExprPtr& e, const TermPtr& expected, InferCtx& ctx) {
  if (ctx.stats) ++ctx.stats->visits;
  struct Visitor {
    const ExprPtr& e;
    const TermPtr& expected;
    InferCtx& ctx;

    bool operator()(const EmptySetExpr&) {
      return ctx.require(e, expected, type_set(ctx.vars.fresh()));
    }
    bool operator()(const BinExpr& b) {
      switch (b.kind) {
        case BinOpKind::Union:
        case BinOpKind::Intersect: {
          TermPtr elem = ctx.vars.fresh();
          TermPtr set_type = type_set(elem);
          if (!ctx.require(e, expected, set_type)) return false;
          return check(b.lhs, set_type, ctx) && check(b.rhs, set_type, ctx);
        }
        case BinOpKind::Plus:
          if (!ctx.require(e, expected, type_integer())) return false;
          return check(b.lhs, type_integer(), ctx) &&
                 check(b.rhs, type_integer(), ctx);
        case BinOpKind::InSet: {
          if (!ctx.require(e, expected, type_predicate())) return false;
          TermPtr elem = ctx.vars.fresh();
          return check(b.lhs, elem, ctx) && check(b.rhs, type_set(elem), ctx);
        }
        case BinOpKind::Gt:
          if (!ctx.require(e, expected, type_predicate())) return false;
          return check(b.lhs, type_integer(), ctx) &&
                 check(b.rhs, type_integer(), ctx);
        case BinOpKind::And:
          if (!ctx.require(e, expected, type_predicate())) return false;
          return check(b.lhs, type_predicate(), ctx) &&
                 check(b.rhs, type_predicate(), ctx);
        case BinOpKind::Eq: {
          if (!ctx.require(e, expected, type_predicate())) return false;
          TermPtr shared = ctx.vars.fresh();
          return check(b.lhs, shared, ctx) && check(b.rhs, shared, ctx);
        }
      }
      return false;
    }
    bool operator()(const NumExpr&) {
      return ctx.require(e, expected, type_integer());
    }
    bool operator()(const SetLitExpr& s) {
      TermPtr elem = ctx.vars.fresh();
      if (!ctx.require(e, expected, type_set(elem))) return false;
      for (const ExprPtr& el : s.elems) {
        if (!check(el, elem, ctx)) return false;
      }
      return true;
    }
    bool operator()(const IdentExpr& id) {
      if (const TermPtr* recorded = ctx.env.find(id.name)) {
        return ctx.require(e, expected, *recorded);
      }
      // Henceforth defined: the identifier shares the demanded type term.
      ctx.env.add(id.name, expected);
      return true;
    }
  };
  return std::visit(Visitor{e, expected, ctx}, e->node);
}

}  // namespace

TypeResult infer(const ExprPtr& e, InferStats* stats) {
  InferCtx ctx;
  ctx.stats = stats;
  TermPtr result = ctx.vars.fresh();
  if (check(e, result, ctx)) {
    return InferOk{resolve(result, ctx.subst), std::move(ctx.env),
                   std::move(ctx.subst)};
  }
  return std::move(*ctx.error);
}

std::string render_type_env(const TypeEnv& env, const Substitution& s,
                            VarNamer& namer) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < env.entries.size(); ++i) {
    if (i) out << ',';
    out << "id(" << env.entries[i].first << ','
        << render_term(env.entries[i].second, s, namer) << ')';
  }
  out << ']';
  return out.str();
}

std::string render_type_env(const TypeEnv& env, const Substitution& s) {
  VarNamer namer;
  return render_type_env(env, s, namer);
}

std::string render_type_error(const InferError& err) {
  VarNamer namer;  // shared so the expected type and env number consistently
  std::string expected = render_term(err.expected, err.subst, namer);
  std::string env = render_type_env(err.env, err.subst, namer);
  return "Type error for " + render_expr(err.expr) + " (expected: " + expected +
         ", Env: " + env + ")";
}

}  // namespace minilog
