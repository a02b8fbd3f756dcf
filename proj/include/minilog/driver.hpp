#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace minilog::driver {

// Exit codes shared by every command.
inline constexpr int kOk = 0;          // at least one solution / analysis done
inline constexpr int kNoSolution = 1;  // no solution or type error
inline constexpr int kParseError = 2;  // malformed input
inline constexpr int kAnalysisError = 3;  // stack underflow, unsupported op, bad join
inline constexpr int kFloundered = 4;  // all remaining goals suspended

// Each command takes raw input text, writes the answer presentation to out
// (Prolog top-level style: `X = v` bindings, `? ;` continuations, `no`) and
// diagnostics to err, and returns the exit code.
int cmd_run(const std::string& bytecode, std::ostream& out, std::ostream& err);
int cmd_paths(const std::string& bytecode, int limit, std::ostream& out,
              std::ostream& err);
int cmd_fixpoint(const std::string& bytecode, std::ostream& out, std::ostream& err);
int cmd_typecheck(const std::string& formula, std::ostream& out, std::ostream& err);
int cmd_prop(const std::string& formula, bool negated, std::ostream& out,
             std::ostream& err);
int cmd_proc_step(const std::string& process, std::ostream& out, std::ostream& err);
// limit 0 = enumerate to exhaustion.
int cmd_proc_traces(const std::string& process, int length, int limit,
                    std::ostream& out, std::ostream& err);
int cmd_proc_reach(const std::string& process, std::ostream& out, std::ostream& err);
int cmd_solve(const std::string& goals, int limit, std::ostream& out,
              std::ostream& err);

std::optional<std::string> read_file(const std::string& path);

}  // namespace minilog::driver
