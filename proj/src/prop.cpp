#include "minilog/prop.hpp"

namespace minilog {

FormulaPtr mk_const(TermPtr value) {
  return std::make_shared<Formula>(Formula{ConstFormula{std::move(value)}});
}

FormulaPtr mk_and(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(Formula{AndFormula{std::move(lhs), std::move(rhs)}});
}

FormulaPtr mk_or(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(Formula{OrFormula{std::move(lhs), std::move(rhs)}});
}

FormulaPtr mk_not(FormulaPtr inner) {
  return std::make_shared<Formula>(Formula{NotFormula{std::move(inner)}});
}

namespace {

Stream<Substitution> unify_const(const TermPtr& t, const char* value,
                                 const Substitution& s) {
  auto next = unify(t, mk_atom(value), s);
  if (!next) return {};
  return Stream<Substitution>::single(*next);
}

}  // namespace

Stream<Substitution> sat(const FormulaPtr& f, const Substitution& s) {
  struct Visitor {
    const Substitution& s;
    Stream<Substitution> operator()(const ConstFormula& c) const {
      return unify_const(c.value, "true", s);
    }
    Stream<Substitution> operator()(const AndFormula& a) const {
      return bind(sat(a.lhs, s),
                  [rhs = a.rhs](Substitution s2) { return sat(rhs, s2); });
    }
    Stream<Substitution> operator()(const OrFormula& o) const {
      return disj(sat(o.lhs, s),
                  std::function<Stream<Substitution>()>(
                      [rhs = o.rhs, s = s] { return sat(rhs, s); }));
    }
    Stream<Substitution> operator()(const NotFormula& n) const {
      return nsat(n.inner, s);
    }
  };
  return std::visit(Visitor{s}, f->node);
}

Stream<Substitution> nsat(const FormulaPtr& f, const Substitution& s) {
  struct Visitor {
    const Substitution& s;
    Stream<Substitution> operator()(const ConstFormula& c) const {
      return unify_const(c.value, "false", s);
    }
    Stream<Substitution> operator()(const AndFormula& a) const {
      return disj(nsat(a.lhs, s),
                  std::function<Stream<Substitution>()>(
                      [rhs = a.rhs, s = s] { return nsat(rhs, s); }));
    }
    Stream<Substitution> operator()(const OrFormula& o) const {
      return bind(nsat(o.lhs, s),
                  [rhs = o.rhs](Substitution s2) { return nsat(rhs, s2); });
    }
    Stream<Substitution> operator()(const NotFormula& n) const {
      return sat(n.inner, s);
    }
  };
  return std::visit(Visitor{s}, f->node);
}

bool eval_ground(const FormulaPtr& f) {
  struct Visitor {
    bool operator()(const ConstFormula& c) const {
      if (c.value->is_atom()) {
        const std::string& n = c.value->as_atom().name;
        if (n == "true") return true;
        if (n == "false") return false;
      }
      throw NonGroundFormula();
    }
    bool operator()(const AndFormula& a) const {
      return eval_ground(a.lhs) && eval_ground(a.rhs);
    }
    bool operator()(const OrFormula& o) const {
      return eval_ground(o.lhs) || eval_ground(o.rhs);
    }
    bool operator()(const NotFormula& n) const { return !eval_ground(n.inner); }
  };
  return std::visit(Visitor{}, f->node);
}

FormulaPtr formula_from_term(const TermPtr& t) {
  if (t->is_compound()) {
    const Compound& c = t->as_compound();
    if (c.functor == "const" && c.args.size() == 1) {
      return mk_const(c.args[0]);
    }
    if (c.functor == "and" && c.args.size() == 2) {
      return mk_and(formula_from_term(c.args[0]), formula_from_term(c.args[1]));
    }
    if (c.functor == "or" && c.args.size() == 2) {
      return mk_or(formula_from_term(c.args[0]), formula_from_term(c.args[1]));
    }
    if (c.functor == "not" && c.args.size() == 1) {
      return mk_not(formula_from_term(c.args[0]));
    }
  }
  throw ParseError("not a propositional formula: " + render_term(t));
}

FormulaPtr parse_formula_text(const std::string& text, VarSource& vars,
                              VarTable& table) {
  return formula_from_term(parse_term_text(text, vars, table));
}

}  // namespace minilog
