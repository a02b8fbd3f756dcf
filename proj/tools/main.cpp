#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minilog/driver.hpp"
#include "minilog/repl.hpp"

#include <unistd.h>

namespace {

int with_file(const std::string& path, int (*command)(const std::string&,
                                                      std::ostream&,
                                                      std::ostream&)) {
  auto text = minilog::driver::read_file(path);
  if (!text) {
    std::cerr << "cannot read '" << path << "'\n";
    return minilog::driver::kParseError;
  }
  return command(*text, std::cout, std::cerr);
}

// The argument may be a formula or the name of a file holding one.
std::string text_or_file(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    if (auto text = minilog::driver::read_file(arg)) {
      std::size_t end = text->find_last_not_of(" \t\r\n");
      return end == std::string::npos ? "" : text->substr(0, end + 1);
    }
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minilog: a nondeterministic evaluation core (unification, solution "
      "streams, suspended goals) with bytecode interpretation, sign-domain "
      "abstract interpretation, type inference, propositional search and "
      "process exploration built on top of it"};
  app.require_subcommand(1);

  std::string path;
  std::string expr;
  int limit = 3;
  int length = 2;
  int solve_limit = 0;
  bool negated = false;
  std::string mode = "prop";

  CLI::App* run_cmd = app.add_subcommand("run", "Run a bytecode program concretely");
  run_cmd->add_option("file", path, "bytecode file")->required();

  CLI::App* paths_cmd = app.add_subcommand(
      "paths", "Enumerate abstract sign-domain paths of a bytecode program");
  paths_cmd->add_option("file", path, "bytecode file")->required();
  paths_cmd->add_option("--limit", limit, "number of paths to show")
      ->check(CLI::PositiveNumber);

  CLI::App* fix_cmd = app.add_subcommand(
      "fixpoint", "Per-program-point abstract environments (join-based fixpoint)");
  fix_cmd->add_option("file", path, "bytecode file")->required();

  CLI::App* type_cmd =
      app.add_subcommand("typecheck", "Infer the type of a formula");
  type_cmd->add_option("formula", expr, "formula text or file")->required();

  CLI::App* prop_cmd = app.add_subcommand(
      "prop", "Solve a propositional formula for its variables");
  prop_cmd->add_option("formula", expr, "propositional formula")->required();
  prop_cmd->add_flag("--negated", negated, "search for ways to make it false");

  CLI::App* step_cmd =
      app.add_subcommand("proc-step", "Transitions of a process term");
  step_cmd->add_option("process", expr, "process term")->required();

  CLI::App* traces_cmd =
      app.add_subcommand("proc-traces", "Traces of a given length");
  traces_cmd->add_option("process", expr, "process term")->required();
  traces_cmd->add_option("--len", length, "trace length")
      ->check(CLI::NonNegativeNumber);
  traces_cmd->add_option("--limit", solve_limit, "answers to show (0 = all)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* reach_cmd = app.add_subcommand(
      "proc-reach", "Reachable states and deadlocks of a process term");
  reach_cmd->add_option("process", expr, "process term")->required();

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Solve a goal list with coroutining (plus, safe_not, nat, =)");
  solve_cmd->add_option("goals", expr, "comma-separated goals")->required();
  solve_cmd->add_option("--limit", solve_limit, "answers to show (0 = all)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* repl_cmd = app.add_subcommand("repl", "Interactive read-eval-print loop");
  repl_cmd->add_option("--mode", mode, "initial mode: prop, proc, type, solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : minilog::driver::kParseError;  // help exits 0
  }

  if (run_cmd->parsed()) return with_file(path, minilog::driver::cmd_run);
  if (paths_cmd->parsed()) {
    auto text = minilog::driver::read_file(path);
    if (!text) {
      std::cerr << "cannot read '" << path << "'\n";
      return minilog::driver::kParseError;
    }
    return minilog::driver::cmd_paths(*text, limit, std::cout, std::cerr);
  }
  if (fix_cmd->parsed()) return with_file(path, minilog::driver::cmd_fixpoint);
  if (type_cmd->parsed()) {
    return minilog::driver::cmd_typecheck(text_or_file(expr), std::cout, std::cerr);
  }
  if (prop_cmd->parsed()) {
    return minilog::driver::cmd_prop(expr, negated, std::cout, std::cerr);
  }
  if (step_cmd->parsed()) {
    return minilog::driver::cmd_proc_step(expr, std::cout, std::cerr);
  }
  if (traces_cmd->parsed()) {
    return minilog::driver::cmd_proc_traces(expr, length, solve_limit, std::cout,
                                            std::cerr);
  }
  if (reach_cmd->parsed()) {
    return minilog::driver::cmd_proc_reach(expr, std::cout, std::cerr);
  }
  if (solve_cmd->parsed()) {
    return minilog::driver::cmd_solve(expr, solve_limit, std::cout, std::cerr);
  }
  if (repl_cmd->parsed()) {
    return minilog::repl::run(mode, std::cin, std::cout, isatty(STDIN_FILENO) == 1);
  }
  return 0;
}
