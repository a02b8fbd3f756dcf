#pragma once

#include <memory>
#include <string>
#include <variant>

#include "minilog/common.hpp"
#include "minilog/parse.hpp"
#include "minilog/stream.hpp"
#include "minilog/term.hpp"

namespace minilog {

// Propositional formulas with negation evaluated by an explicit dual
// interpreter: sat searches for ways to make a formula true, nsat for ways
// to make it false. Negation-as-failure would answer `no` to
// sat(not(const(X))); the dual search instead binds X to false.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct ConstFormula {
  TermPtr value;  // atom true/false, or a variable to be solved for
};
struct AndFormula {
  FormulaPtr lhs, rhs;
};
struct OrFormula {
  FormulaPtr lhs, rhs;
};
struct NotFormula {
  FormulaPtr inner;
};

struct Formula {
  std::variant<ConstFormula, AndFormula, OrFormula, NotFormula> node;
};

FormulaPtr mk_const(TermPtr value);
FormulaPtr mk_and(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr mk_or(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr mk_not(FormulaPtr inner);

// Substitutions that make f true / false under s. Empty stream = none.
Stream<Substitution> sat(const FormulaPtr& f, const Substitution& s);
Stream<Substitution> nsat(const FormulaPtr& f, const Substitution& s);

class NonGroundFormula : public AnalysisError {
 public:
  NonGroundFormula() : AnalysisError("formula is not a ground boolean formula") {}
};

// Truth-table evaluation; the independent oracle for the dual interpreter.
// Throws NonGroundFormula unless every constant is the atom true or false.
bool eval_ground(const FormulaPtr& f);

// `const(true)`, `const(X)`, `and(F,G)`, `or(F,G)`, `not(F)`.
FormulaPtr parse_formula_text(const std::string& text, VarSource& vars,
                              VarTable& table);

// Term -> formula view, shared by the parser and tests.
FormulaPtr formula_from_term(const TermPtr& t);

}  // namespace minilog
