#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "minilog/common.hpp"
#include "minilog/parse.hpp"
#include "minilog/stream.hpp"
#include "minilog/term.hpp"

namespace minilog {

// Coroutine-style goal solving: goals run in order, but a goal whose wake
// condition is not met suspends instead of failing, and is re-examined after
// every new binding. plus/3 delays until two of its three arguments are
// known, so the same predicate runs forwards and backwards; safe_not delays
// its check until the negated goal is ground, so conjunction order stops
// mattering.
struct Goal;
using GoalPtr = std::shared_ptr<const Goal>;

struct UnifyGoal {
  TermPtr lhs, rhs;
};
struct PlusGoal {
  TermPtr x, y, z;  // x + y = z over integer leaves
};
struct SafeNotGoal {
  GoalPtr inner;
};
// Peano-numeral membership over 0/s(.): enumerates 0, s(0), ... when open.
struct NatGoal {
  TermPtr term;
};

struct Goal {
  std::variant<UnifyGoal, PlusGoal, SafeNotGoal, NatGoal> node;
};

GoalPtr mk_unify_goal(TermPtr lhs, TermPtr rhs);
GoalPtr mk_plus_goal(TermPtr x, TermPtr y, TermPtr z);
GoalPtr mk_safe_not(GoalPtr inner);
GoalPtr mk_nat_goal(TermPtr term);

struct SolveOutcome {
  bool floundered = false;
  Substitution subst;
  std::vector<GoalPtr> suspended;  // nonempty exactly when floundered
};

// Enumerates outcomes depth-first. A branch ending with no pending goals is
// a Success; a branch where only suspended goals remain is reported as
// Floundered rather than success or failure. `vars` continues the allocator
// the goal terms were built with, so engine-made variables stay fresh.
Stream<SolveOutcome> solve(std::vector<GoalPtr> goals, VarSource vars,
                           Substitution s0 = {});

bool goal_ground(const GoalPtr& g, const Substitution& s);

std::string render_goal(const GoalPtr& g, const Substitution& s, VarNamer& namer);

// Comma-separated goals: `plus(X,Y,Z)`, `safe_not(nat(X))`, `X = a`.
std::vector<GoalPtr> parse_goals_text(const std::string& text, VarSource& vars,
                                      VarTable& table);

}  // namespace minilog
