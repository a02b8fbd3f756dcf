#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "minilog/common.hpp"
#include "minilog/stream.hpp"

namespace minilog {

// Process terms with a labelled transition relation: prefix (`a -> P`),
// interleaving (`P || Q`) and `stop`. Finite terms only; every transition
// shrinks the term, so state spaces are finite.
struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

struct StopProcess {};
struct PrefixProcess {
  std::string action;
  ProcessPtr continuation;
};
struct InterleaveProcess {
  ProcessPtr left, right;
};

struct Process {
  std::variant<StopProcess, PrefixProcess, InterleaveProcess> node;
};

ProcessPtr mk_stop();
ProcessPtr mk_prefix(std::string action, ProcessPtr continuation);
ProcessPtr mk_interleave(ProcessPtr left, ProcessPtr right);

bool process_equal(const ProcessPtr& a, const ProcessPtr& b);

// Prolog-style rendering: `stop`, `a->b->stop`, `'||'((a->stop),stop)`.
// Injective over this grammar, so it doubles as the memo key.
std::string render_process(const ProcessPtr& p);

struct Transition {
  std::string action;
  ProcessPtr successor;
};

// In clause order: a prefix fires its action; an interleaving yields all
// left steps (right unchanged), then all right steps. stop yields nothing.
Stream<Transition> transitions(const ProcessPtr& p);

// All action sequences of length exactly n, depth-first in transition order.
Stream<std::vector<std::string>> traces(const ProcessPtr& p, int n);

// As traces, but each answer also carries the process reached; the CLI
// prints it the way the interactive query shows its final R.
struct TraceRun {
  std::vector<std::string> actions;
  ProcessPtr final_process;
};
Stream<TraceRun> trace_runs(const ProcessPtr& p, int n);

struct ReachResult {
  std::vector<ProcessPtr> states;     // breadth-first discovery order
  std::vector<ProcessPtr> deadlocks;  // states with no transitions, same order
  int expansions = 0;                 // transitions() calls made
};

// Exhaustive reachable-state exploration with a visited-set memo keyed on
// structural equality; transitions() runs at most once per distinct state.
ReachResult reachable(const ProcessPtr& p);

// `stop`; `a -> P` right-associative, binding tighter than `||`;
// `P || Q` left-associative; parentheses allowed.
ProcessPtr parse_process_text(const std::string& text);

}  // namespace minilog
