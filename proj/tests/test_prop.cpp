#include <doctest.h>

#include <random>

#include "minilog/prop.hpp"
#include "support/oracles.hpp"

using namespace minilog;

namespace {

FormulaPtr ctrue() { return mk_const(mk_atom("true")); }
FormulaPtr cfalse() { return mk_const(mk_atom("false")); }

bool satisfiable(const FormulaPtr& f) {
  Substitution s;
  return sat(f, s).next().has_value();
}

bool refutable(const FormulaPtr& f) {
  Substitution s;
  return nsat(f, s).next().has_value();
}

// Substitutes remaining variables by the given constant and evaluates.
bool eval_with_default(const FormulaPtr& f, const Substitution& s,
                       const char* fallback) {
  struct Rebuild {
    const Substitution& s;
    const char* fallback;
    FormulaPtr operator()(const FormulaPtr& f) const {
      if (const auto* c = std::get_if<ConstFormula>(&f->node)) {
        TermPtr v = resolve(c->value, s);
        if (v->is_var()) v = mk_atom(fallback);
        return mk_const(v);
      }
      if (const auto* a = std::get_if<AndFormula>(&f->node)) {
        return mk_and((*this)(a->lhs), (*this)(a->rhs));
      }
      if (const auto* o = std::get_if<OrFormula>(&f->node)) {
        return mk_or((*this)(o->lhs), (*this)(o->rhs));
      }
      return mk_not((*this)(std::get<NotFormula>(f->node).inner));
    }
  };
  return eval_ground(Rebuild{s, fallback}(f));
}

// Random formula over up to two variables; leaves may be constants or vars.
FormulaPtr random_formula(std::mt19937& rng, VarSource& vars,
                          std::vector<TermPtr>& var_pool, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
  switch (pick(rng)) {
    case 0: return ctrue();
    case 1: return cfalse();
    case 2: {
      if (var_pool.size() < 2) var_pool.push_back(vars.fresh());
      std::uniform_int_distribution<std::size_t> which(0, var_pool.size() - 1);
      return mk_const(var_pool[which(rng)]);
    }
    case 3:
      return mk_and(random_formula(rng, vars, var_pool, depth - 1),
                    random_formula(rng, vars, var_pool, depth - 1));
    case 4:
      return mk_or(random_formula(rng, vars, var_pool, depth - 1),
                   random_formula(rng, vars, var_pool, depth - 1));
    default:
      return mk_not(random_formula(rng, vars, var_pool, depth - 1));
  }
}

}  // namespace

TEST_CASE("negation binds a variable instead of failing") {
  // This is the behavior negation-as-failure would lose: with
  // `not` defined by unprovability the query would answer no; the dual
  // interpreter finds the binding X = false.
  VarSource vars;
  TermPtr x = vars.fresh();
  Substitution empty;
  auto sols = to_vector(sat(mk_not(mk_const(x)), empty));
  REQUIRE(sols.size() == 1);
  CHECK(term_equal(resolve(x, sols[0]), mk_atom("false")));
}

TEST_CASE("sat on constants") {
  Substitution empty;
  auto sols = to_vector(sat(ctrue(), empty));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].empty());
  CHECK(to_vector(sat(cfalse(), empty)).empty());
}

TEST_CASE("a contradiction has no solutions") {
  // Oracle first: under both values of X the formula evaluates false.
  VarSource vars;
  TermPtr x = vars.fresh();
  FormulaPtr f = mk_and(mk_const(x), mk_not(mk_const(x)));
  for (const char* value : {"true", "false"}) {
    Substitution s;
    s = s.extend(x->as_var().id, mk_atom(value));
    CHECK_FALSE(eval_with_default(f, s, value));
  }
  Substitution empty;
  CHECK(to_vector(sat(f, empty)).empty());
}

TEST_CASE("nsat searches for falsifying bindings") {
  VarSource vars;
  TermPtr x = vars.fresh();
  Substitution empty;

  auto sols = to_vector(nsat(mk_const(x), empty));
  REQUIRE(sols.size() == 1);
  CHECK(term_equal(resolve(x, sols[0]), mk_atom("false")));

  // or(X,Y) is false only when both are false (truth-table check below).
  TermPtr y = vars.fresh();
  FormulaPtr f = mk_or(mk_const(x), mk_const(y));
  auto both = to_vector(nsat(f, empty));
  REQUIRE(both.size() == 1);
  CHECK(term_equal(resolve(x, both[0]), mk_atom("false")));
  CHECK(term_equal(resolve(y, both[0]), mk_atom("false")));
  CHECK_FALSE(eval_with_default(f, both[0], "true"));

  // not(true) is false, so nsat(not(true)) succeeds once.
  CHECK(to_vector(nsat(mk_not(ctrue()), empty)).size() == 1);
}

TEST_CASE("eval_ground") {
  CHECK_FALSE(eval_ground(mk_and(ctrue(), cfalse())));
  CHECK(eval_ground(mk_not(cfalse())));
  CHECK(eval_ground(mk_or(cfalse(), mk_not(cfalse()))));
  VarSource vars;
  CHECK_THROWS_AS(eval_ground(mk_const(vars.fresh())), NonGroundFormula);
  CHECK_THROWS_AS(eval_ground(mk_const(mk_atom("maybe"))), NonGroundFormula);
}

TEST_CASE("ground completeness and exclusivity to depth 3") {
  for (const FormulaPtr& f : oracles::ground_formulas_up_to(3)) {
    bool truth = eval_ground(f);
    CHECK(satisfiable(f) == truth);
    CHECK(refutable(f) == !truth);
  }
}

TEST_CASE("enumerated solutions really make the formula true (or false)") {
  std::mt19937 rng(1234);
  for (int iter = 0; iter < 300; ++iter) {
    VarSource vars;
    std::vector<TermPtr> pool;
    FormulaPtr f = random_formula(rng, vars, pool, 3);
    Substitution empty;
    // A solution may leave variables unbound only if the truth value does
    // not depend on them: check both fallback assignments.
    for (const Substitution& s : take(8, sat(f, empty))) {
      CHECK(eval_with_default(f, s, "true"));
      CHECK(eval_with_default(f, s, "false"));
    }
    for (const Substitution& s : take(8, nsat(f, empty))) {
      CHECK_FALSE(eval_with_default(f, s, "true"));
      CHECK_FALSE(eval_with_default(f, s, "false"));
    }
  }
}

TEST_CASE("duplicate answers are tolerated but cover the same solutions") {
  // or enumerates both branches, so logically overlapping answers appear.
  VarSource vars;
  TermPtr x = vars.fresh();
  FormulaPtr f = mk_or(mk_const(x), mk_const(x));
  Substitution empty;
  auto sols = to_vector(sat(f, empty));
  CHECK(sols.size() == 2);
  for (const Substitution& s : sols) {
    CHECK(term_equal(resolve(x, s), mk_atom("true")));
  }
}

TEST_CASE("formula parsing") {
  VarSource vars;
  VarTable table;
  FormulaPtr f = parse_formula_text("and(not(const(X)),or(const(true),const(X)))",
                                    vars, table);
  REQUIRE(table.in_order.size() == 1);
  CHECK(table.in_order[0].first == "X");
  Substitution empty;
  CHECK(to_vector(sat(f, empty)).size() == 1);

  CHECK_THROWS_AS(parse_formula_text("implies(const(true),const(true))", vars, table),
                  ParseError);
  CHECK_THROWS_AS(parse_formula_text("and(const(true))", vars, table), ParseError);
}
