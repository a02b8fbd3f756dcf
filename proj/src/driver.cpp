#include "minilog/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "minilog/abstract.hpp"
#include "minilog/domains.hpp"
#include "minilog/goals.hpp"
#include "minilog/interp.hpp"
#include "minilog/process.hpp"
#include "minilog/prop.hpp"
#include "minilog/typeinfer.hpp"

namespace minilog::driver {

namespace {

// One named binding per line, Prolog style:
//   X = 10,
//   Y = -1,
//   Z = 9
// Returns false when nothing printable is bound; the caller prints `true`.
bool render_bindings(const std::vector<std::pair<std::string, int>>& named,
                     const Substitution& subst, VarNamer& namer,
                     std::vector<std::string>& lines) {
  for (const auto& [name, id] : named) {
    if (name.rfind('_', 0) == 0) continue;  // _-prefixed vars stay hidden
    TermPtr value = walk(mk_var(id), subst);
    if (value->is_var() && value->as_var().id == id) continue;  // unbound
    lines.push_back(name + " = " + render_term(mk_var(id), subst, namer));
  }
  return !lines.empty();
}

// Shared answer loop: prints each answer block, a ` ? ;` continuation
// between answers, ` ? ` + `yes` when the limit stops enumeration, and `no`
// on exhaustion. answer_lines(i) formats the i-th answer as lines.
template <typename Cell, typename Force, typename Render>
int enumerate_answers(std::optional<Cell> first, Force force_next,
                      Render answer_lines, int limit, std::ostream& out) {
  if (!first) {
    out << "no\n";
    return kNoSolution;
  }
  std::optional<Cell> cell = std::move(first);
  int shown = 0;
  while (cell) {
    std::vector<std::string> lines = answer_lines(cell->first);
    ++shown;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) out << lines[i] << ",\n";
    if (limit > 0 && shown == limit) {
      out << lines.back() << " ? \n";
      out << "yes\n";
      return kOk;
    }
    out << lines.back() << " ? ;\n";
    cell = force_next(cell->second);
  }
  out << "no\n";
  return kOk;
}

template <typename T>
int enumerate_stream(Stream<T> s,
                     std::function<std::vector<std::string>(const T&)> format,
                     int limit, std::ostream& out) {
  using Cell = std::pair<T, Stream<T>>;
  auto force = [](const Stream<T>& rest) { return rest.next(); };
  return enumerate_answers<Cell>(s.next(), force, [&](const T& v) { return format(v); },
                                 limit, out);
}

}  // namespace

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_run(const std::string& bytecode, std::ostream& out, std::ostream& err) {
  try {
    Program program = parse_program(bytecode);
    bool underflowed = false;
    RunHooks<long long> hooks;
    hooks.on_step = [&out](int pc, const MachineEnv<long long>& env,
                           const Opcode& op) {
      out << render_trace_line<ConcreteDomain>(pc, env, op) << "\n";
    };
    hooks.on_underflow = [&](const MachineEnv<long long>& env) {
      underflowed = true;
      out << "*** Could not pop from stack: "
          << render_env(env, [](long long v) { return std::to_string(v); })
          << "\n";
    };
    auto cell = run<ConcreteDomain>(program, 0, {}, hooks).next();
    if (!cell) {
      out << "no\n";
      return underflowed ? kAnalysisError : kNoSolution;
    }
    out << "Out = "
        << render_env(cell->first.final_env,
                      [](long long v) { return std::to_string(v); })
        << "\n";
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const AnalysisError& e) {
    err << "error: " << e.what() << "\n";
    return kAnalysisError;
  }
}

int cmd_paths(const std::string& bytecode, int limit, std::ostream& out,
              std::ostream& err) {
  try {
    Program program = parse_program(bytecode);
    RunHooks<Sign> hooks;
    hooks.on_step = [&out](int pc, const MachineEnv<Sign>& env, const Opcode& op) {
      out << render_trace_line<SignDomain>(pc, env, op) << "\n";
    };
    hooks.on_underflow = [&out](const MachineEnv<Sign>& env) {
      out << "*** Could not pop from stack: " << render_sign_env(env) << "\n";
    };
    auto format = [](const RunSolution<SignDomain>& sol) {
      return std::vector<std::string>{"R = " + render_sign_env(sol.final_env)};
    };
    return enumerate_stream<RunSolution<SignDomain>>(
        run<SignDomain>(program, 0, {}, hooks), format, limit, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const AnalysisError& e) {
    err << "error: " << e.what() << "\n";
    return kAnalysisError;
  }
}

int cmd_fixpoint(const std::string& bytecode, std::ostream& out,
                 std::ostream& err) {
  try {
    Program program = parse_program(bytecode);
    AbstractState state = analyze_fixpoint(program, 0, {});
    out << render_fixpoint(state);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const AnalysisError& e) {
    err << "error: " << e.what() << "\n";
    return kAnalysisError;
  }
}

int cmd_typecheck(const std::string& formula, std::ostream& out,
                  std::ostream& err) {
  try {
    ExprPtr expr = parse_expr_text(formula);
    TypeResult result = infer(expr);
    if (const InferOk* ok = std::get_if<InferOk>(&result)) {
      VarNamer namer;
      out << "Typing env: " << render_type_env(ok->env, ok->subst, namer) << "\n";
      out << "R = " << render_term(ok->type, ok->subst, namer) << "\n";
      return kOk;
    }
    out << render_type_error(std::get<InferError>(result)) << "\n";
    out << "no\n";
    return kNoSolution;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

int cmd_prop(const std::string& formula, bool negated, std::ostream& out,
             std::ostream& err) {
  try {
    VarSource vars;
    VarTable table;
    FormulaPtr f = parse_formula_text(formula, vars, table);
    auto names = table.id_to_name();
    auto format = [&table, &names](const Substitution& s) {
      VarNamer namer(&names);
      std::vector<std::string> lines;
      if (!render_bindings(table.in_order, s, namer, lines)) {
        lines.push_back("true");
      }
      return lines;
    };
    Substitution empty;
    return enumerate_stream<Substitution>(
        negated ? nsat(f, empty) : sat(f, empty), format, 0, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

int cmd_proc_step(const std::string& process, std::ostream& out,
                  std::ostream& err) {
  try {
    ProcessPtr p = parse_process_text(process);
    auto format = [](const Transition& t) {
      return std::vector<std::string>{"A = " + t.action,
                                      "R = " + render_process(t.successor)};
    };
    return enumerate_stream<Transition>(transitions(p), format, 0, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

int cmd_proc_traces(const std::string& process, int length, int limit,
                    std::ostream& out, std::ostream& err) {
  try {
    ProcessPtr p = parse_process_text(process);
    auto format = [length](const TraceRun& run) {
      std::vector<std::string> lines;
      for (std::size_t i = 0; i < run.actions.size(); ++i) {
        lines.push_back("A" + std::to_string(i + 1) + " = " + run.actions[i]);
      }
      lines.push_back("R" + std::to_string(length) + " = " +
                      render_process(run.final_process));
      return lines;
    };
    return enumerate_stream<TraceRun>(trace_runs(p, length), format, limit, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

int cmd_proc_reach(const std::string& process, std::ostream& out,
                   std::ostream& err) {
  try {
    ProcessPtr p = parse_process_text(process);
    ReachResult result = reachable(p);
    out << "states: " << result.states.size() << "\n";
    out << "deadlocks: " << result.deadlocks.size() << "\n";
    for (const ProcessPtr& d : result.deadlocks) {
      out << render_process(d) << "\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

int cmd_solve(const std::string& goals, int limit, std::ostream& out,
              std::ostream& err) {
  try {
    VarSource vars;
    VarTable table;
    std::vector<GoalPtr> parsed = parse_goals_text(goals, vars, table);
    auto names = table.id_to_name();

    Stream<SolveOutcome> outcomes = solve(parsed, vars);
    bool any_success = false;
    bool any_flounder = false;
    bool awaiting_more = false;  // printed `;` after the previous success
    int shown = 0;

    auto cell = outcomes.next();
    while (cell) {
      const SolveOutcome& o = cell->first;
      ++shown;
      if (o.floundered) {
        any_flounder = true;
        VarNamer namer(&names);
        std::string rendered;
        for (std::size_t i = 0; i < o.suspended.size(); ++i) {
          if (i) rendered += ",";
          rendered += render_goal(o.suspended[i], o.subst, namer);
        }
        out << "floundered: " << rendered << "\n";
        awaiting_more = false;
      } else {
        any_success = true;
        VarNamer namer(&names);
        std::vector<std::string> lines;
        if (!render_bindings(table.in_order, o.subst, namer, lines)) {
          lines.push_back("true");
        }
        for (std::size_t i = 0; i + 1 < lines.size(); ++i) out << lines[i] << ",\n";
        if (limit > 0 && shown == limit) {
          out << lines.back() << " ? \n" << "yes\n";
          return kOk;
        }
        out << lines.back() << " ? ;\n";
        awaiting_more = true;
      }
      if (limit > 0 && shown == limit) break;
      cell = cell->second.next();
    }
    if (shown == 0) {
      out << "no\n";
      return kNoSolution;
    }
    if (awaiting_more) out << "no\n";
    if (any_success) return kOk;
    return any_flounder ? kFloundered : kNoSolution;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace minilog::driver
