#include "minilog/goals.hpp"

#include <deque>

namespace minilog {

GoalPtr mk_unify_goal(TermPtr lhs, TermPtr rhs) {
  return std::make_shared<Goal>(Goal{UnifyGoal{std::move(lhs), std::move(rhs)}});
}

GoalPtr mk_plus_goal(TermPtr x, TermPtr y, TermPtr z) {
  return std::make_shared<Goal>(
      Goal{PlusGoal{std::move(x), std::move(y), std::move(z)}});
}

GoalPtr mk_safe_not(GoalPtr inner) {
  return std::make_shared<Goal>(Goal{SafeNotGoal{std::move(inner)}});
}

GoalPtr mk_nat_goal(TermPtr term) {
  return std::make_shared<Goal>(Goal{NatGoal{std::move(term)}});
}

bool goal_ground(const GoalPtr& g, const Substitution& s) {
  struct Visitor {
    const Substitution& s;
    bool operator()(const UnifyGoal& u) const {
      return is_ground(u.lhs, s) && is_ground(u.rhs, s);
    }
    bool operator()(const PlusGoal& p) const {
      return is_ground(p.x, s) && is_ground(p.y, s) && is_ground(p.z, s);
    }
    bool operator()(const SafeNotGoal& n) const { return goal_ground(n.inner, s); }
    bool operator()(const NatGoal& n) const { return is_ground(n.term, s); }
  };
  return std::visit(Visitor{s}, g->node);
}

namespace {

struct Store {
  std::deque<GoalPtr> active;
  std::vector<GoalPtr> suspended;
  Substitution subst;
};

bool wake_ready(const GoalPtr& g, const Substitution& s) {
  if (const auto* p = std::get_if<PlusGoal>(&g->node)) {
    int ground = static_cast<int>(is_ground(p->x, s)) +
                 static_cast<int>(is_ground(p->y, s)) +
                 static_cast<int>(is_ground(p->z, s));
    return ground >= 2;
  }
  if (const auto* n = std::get_if<SafeNotGoal>(&g->node)) {
    return goal_ground(n->inner, s);
  }
  return true;
}

// Extends the substitution and moves newly runnable suspended goals to the
// front of the queue, preserving their suspension order. False = branch fails.
bool bind_and_wake(Store& st, const TermPtr& a, const TermPtr& b) {
  auto next = unify(a, b, st.subst);
  if (!next) return false;
  st.subst = *next;
  std::vector<GoalPtr> woken;
  std::vector<GoalPtr> still;
  for (GoalPtr& g : st.suspended) {
    (wake_ready(g, st.subst) ? woken : still).push_back(std::move(g));
  }
  st.suspended = std::move(still);
  st.active.insert(st.active.begin(), woken.begin(), woken.end());
  return true;
}

std::optional<long long> ground_int(const TermPtr& t, const Substitution& s) {
  TermPtr w = walk(t, s);
  if (w->is_int()) return w->as_int().value;
  return std::nullopt;
}

using VarsPtr = std::shared_ptr<VarSource>;

Stream<SolveOutcome> step_store(Store st, const VarsPtr& vars);

// True to keep going, false to fail the branch.
bool run_plus(Store& st, const PlusGoal& p) {
  auto x = ground_int(p.x, st.subst);
  auto y = ground_int(p.y, st.subst);
  auto z = ground_int(p.z, st.subst);
  if (x && y && z) return *x + *y == *z;
  if (x && y) return bind_and_wake(st, p.z, mk_int(*x + *y));
  if (x && z) return bind_and_wake(st, p.y, mk_int(*z - *x));
  if (y && z) return bind_and_wake(st, p.x, mk_int(*z - *y));
  return false;  // two args ground but not integers
}

Stream<SolveOutcome> step_store(Store st, const VarsPtr& vars) {
  while (!st.active.empty()) {
    GoalPtr g = st.active.front();
    st.active.pop_front();

    if (const auto* u = std::get_if<UnifyGoal>(&g->node)) {
      if (!bind_and_wake(st, u->lhs, u->rhs)) return {};
      continue;
    }
    if (const auto* p = std::get_if<PlusGoal>(&g->node)) {
      if (!wake_ready(g, st.subst)) {
        st.suspended.push_back(g);
        continue;
      }
      if (!run_plus(st, *p)) return {};
      continue;
    }
    if (const auto* n = std::get_if<SafeNotGoal>(&g->node)) {
      if (!goal_ground(n->inner, st.subst)) {
        st.suspended.push_back(g);
        continue;
      }
      // Existence test on the ground goal, first solution only; no bindings
      // can escape because the goal is ground.
      Stream<SolveOutcome> inner =
          commit(step_store(Store{{n->inner}, {}, st.subst}, vars));
      if (inner.next()) return {};
      continue;
    }

    // NatGoal: t = 0, or t = s(F) with nat(F); both branches in that order.
    const auto& nat = std::get<NatGoal>(g->node);
    TermPtr t = walk(nat.term, st.subst);

    Store zero_branch = st;
    bool zero_ok = bind_and_wake(zero_branch, t, mk_int(0));

    Store succ_branch = std::move(st);
    TermPtr inner_var = vars->fresh();
    bool succ_ok = bind_and_wake(succ_branch, t, mk_compound("s", {inner_var}));
    if (succ_ok) succ_branch.active.push_front(mk_nat_goal(inner_var));

    Stream<SolveOutcome> first =
        zero_ok ? step_store(std::move(zero_branch), vars) : Stream<SolveOutcome>{};
    if (!succ_ok) return first;
    return disj(std::move(first),
                std::function<Stream<SolveOutcome>()>(
                    [succ_branch = std::move(succ_branch), vars] {
                      return step_store(succ_branch, vars);
                    }));
  }

  if (st.suspended.empty()) {
    return Stream<SolveOutcome>::single(SolveOutcome{false, st.subst, {}});
  }
  return Stream<SolveOutcome>::single(
      SolveOutcome{true, st.subst, st.suspended});
}

}  // namespace

Stream<SolveOutcome> solve(std::vector<GoalPtr> goals, VarSource vars,
                           Substitution s0) {
  auto shared_vars = std::make_shared<VarSource>(vars);
  Store st;
  st.active.assign(goals.begin(), goals.end());
  st.subst = std::move(s0);
  return Stream<SolveOutcome>::defer(
      [st = std::move(st), shared_vars]() { return step_store(st, shared_vars); });
}

std::string render_goal(const GoalPtr& g, const Substitution& s, VarNamer& namer) {
  struct Visitor {
    const Substitution& s;
    VarNamer& namer;
    std::string operator()(const UnifyGoal& u) const {
      return render_term(u.lhs, s, namer) + "=" + render_term(u.rhs, s, namer);
    }
    std::string operator()(const PlusGoal& p) const {
      return "plus(" + render_term(p.x, s, namer) + "," +
             render_term(p.y, s, namer) + "," + render_term(p.z, s, namer) + ")";
    }
    std::string operator()(const SafeNotGoal& n) const {
      return "safe_not(" + render_goal(n.inner, s, namer) + ")";
    }
    std::string operator()(const NatGoal& n) const {
      return "nat(" + render_term(n.term, s, namer) + ")";
    }
  };
  return std::visit(Visitor{s, namer}, g->node);
}

namespace {

GoalPtr goal_from_term(const TermPtr& t);

GoalPtr goal_from_compound(const Compound& c, const TermPtr& t) {
  if (c.functor == "plus" && c.args.size() == 3) {
    return mk_plus_goal(c.args[0], c.args[1], c.args[2]);
  }
  if (c.functor == "safe_not" && c.args.size() == 1) {
    return mk_safe_not(goal_from_term(c.args[0]));
  }
  if (c.functor == "nat" && c.args.size() == 1) {
    return mk_nat_goal(c.args[0]);
  }
  throw ParseError("unknown goal: " + render_term(t));
}

GoalPtr goal_from_term(const TermPtr& t) {
  if (t->is_compound()) return goal_from_compound(t->as_compound(), t);
  throw ParseError("unknown goal: " + render_term(t));
}

}  // namespace

std::vector<GoalPtr> parse_goals_text(const std::string& text, VarSource& vars,
                                      VarTable& table) {
  Lexer lex(text);
  std::vector<GoalPtr> out;
  while (true) {
    TermPtr t = parse_term(lex, vars, table);
    if (lex.at_punct("=")) {
      lex.next();
      TermPtr rhs = parse_term(lex, vars, table);
      out.push_back(mk_unify_goal(t, rhs));
    } else {
      out.push_back(goal_from_term(t));
    }
    if (lex.at_punct(",")) {
      lex.next();
      continue;
    }
    break;
  }
  if (!lex.at(Token::Kind::End)) {
    lex.fail("trailing input after goals");
  }
  return out;
}

}  // namespace minilog
