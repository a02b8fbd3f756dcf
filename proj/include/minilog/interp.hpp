#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "minilog/bytecode.hpp"
#include "minilog/stream.hpp"

namespace minilog {

// Observation hooks. on_step fires once per executed step, in depth-first
// search order, which reproduces the trace a backtracking interpreter would
// print: after a solution, only the suffix below the revisited choice point
// runs (and prints) again. on_underflow fires when a pop meets an empty
// stack; the failing path contributes no successor.
template <typename V>
struct RunHooks {
  std::function<void(int pc, const MachineEnv<V>& before, const Opcode& op)> on_step;
  std::function<void(const MachineEnv<V>& env)> on_underflow;
};

// One successor: the next pc and environment, or a halt (no pc) carrying the
// final environment.
template <typename V>
struct StepNext {
  std::optional<int> pc;
  MachineEnv<V> env;
};

template <typename V>
struct TraceEntry {
  int pc = 0;
  MachineEnv<V> env;  // environment before the opcode ran
  Opcode opcode;
};

template <typename D>
struct RunSolution {
  MachineEnv<typename D::Value> final_env;
  std::vector<TraceEntry<typename D::Value>> trace;
};

// Successors of one instruction. Branch order is fixed: a conditional yields
// its fall-through (comparison-false) successor before the jump successor,
// which pins the enumeration order of the nondeterministic abstract run.
template <typename D>
Stream<StepNext<typename D::Value>> step(
    const Program& program, int pc, const MachineEnv<typename D::Value>& env,
    const RunHooks<typename D::Value>& hooks = {}) {
  using V = typename D::Value;
  using Next = StepNext<V>;

  const Instruction& ins = program.at(pc);
  int fall_through = pc + ins.size;

  auto pop = [&](MachineEnv<V>& e, V& out) {
    if (e.stack.empty()) {
      if (hooks.on_underflow) hooks.on_underflow(e);
      return false;
    }
    out = e.stack.front();
    e.stack.erase(e.stack.begin());
    return true;
  };

  std::vector<Next> successors;
  if (const IConst* op = std::get_if<IConst>(&ins.opcode)) {
    MachineEnv<V> out = env;
    out.stack.insert(out.stack.begin(), D::inject_const(op->value));
    successors.push_back(Next{fall_through, std::move(out)});
  } else if (std::get_if<Dup>(&ins.opcode)) {
    // No diagnostic on an empty stack: duplicating reads without popping,
    // so the path just fails.
    if (!env.stack.empty()) {
      MachineEnv<V> out = env;
      out.stack.insert(out.stack.begin(), out.stack.front());
      successors.push_back(Next{fall_through, std::move(out)});
    }
  } else if (const IOp* op = std::get_if<IOp>(&ins.opcode)) {
    MachineEnv<V> work = env;
    V top{}, second{};
    if (pop(work, top) && pop(work, second)) {
      for (V result : to_vector(D::ex_op(op->op, top, second))) {
        MachineEnv<V> out = work;
        out.stack.insert(out.stack.begin(), result);
        successors.push_back(Next{fall_through, std::move(out)});
      }
    }
  } else if (const If1* op = std::get_if<If1>(&ins.opcode)) {
    MachineEnv<V> work = env;
    V top{};
    if (pop(work, top)) {
      V rhs = D::inject_const(op->constant);
      if (D::cmp_false(op->cmp, top, rhs)) {
        successors.push_back(Next{fall_through, work});
      }
      if (D::cmp_true(op->cmp, top, rhs)) {
        successors.push_back(Next{op->target, work});
      }
    }
  } else {
    successors.push_back(Next{std::nullopt, env});
  }
  return Stream<Next>::from_vector(std::move(successors));
}

namespace detail {

template <typename D>
Stream<RunSolution<D>> run_from(const Program& program, int pc,
                                MachineEnv<typename D::Value> env,
                                RunHooks<typename D::Value> hooks,
                                std::vector<TraceEntry<typename D::Value>> trace) {
  using Sol = RunSolution<D>;
  return Stream<Sol>::defer([&program, pc, env = std::move(env),
                             hooks = std::move(hooks),
                             trace = std::move(trace)]() -> Stream<Sol> {
    const Instruction& ins = program.at(pc);
    if (hooks.on_step) hooks.on_step(pc, env, ins.opcode);
    auto trace2 = trace;
    trace2.push_back(TraceEntry<typename D::Value>{pc, env, ins.opcode});
    return bind(step<D>(program, pc, env, hooks),
                [&program, hooks, trace2](StepNext<typename D::Value> nx) {
                  if (!nx.pc) {
                    return Stream<Sol>::single(Sol{std::move(nx.env), trace2});
                  }
                  return run_from<D>(program, *nx.pc, std::move(nx.env), hooks,
                                     trace2);
                });
  });
}

}  // namespace detail

// Depth-first closure of step. Each solution carries the full ordered trace
// of (pc, env-before, opcode) records for its path. The stream may be
// infinite; with the concrete domain a terminating program yields exactly
// one solution. The stream refers to `program`, which must stay alive while
// the stream is being forced.
template <typename D>
Stream<RunSolution<D>> run(const Program& program, int pc0,
                           MachineEnv<typename D::Value> env0,
                           RunHooks<typename D::Value> hooks = {}) {
  return detail::run_from<D>(program, pc0, std::move(env0), std::move(hooks), {});
}

// The paper's trace line: `> <pc>  <env>  --> <opcode>`.
template <typename D>
std::string render_trace_line(int pc, const MachineEnv<typename D::Value>& env,
                              const Opcode& op) {
  return "> " + std::to_string(pc) + "  " +
         render_env(env, [](typename D::Value v) { return D::render(v); }) +
         "  --> " + render(op);
}

}  // namespace minilog
