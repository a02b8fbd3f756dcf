#include "minilog/repl.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "minilog/driver.hpp"

namespace minilog::repl {

namespace {

bool known_mode(const std::string& mode) {
  return mode == "prop" || mode == "proc" || mode == "type" || mode == "solve";
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Session {
  std::string mode = "prop";
  std::ostream& out;
  std::ofstream record;

  void eval(const std::string& line) {
    std::ostringstream captured;
    eval_line(mode, line, captured);
    out << captured.str();
    if (record.is_open()) {
      // Corpus record: `%% <mode> <input>` then the output lines, then a
      // blank separator; the test harness replays these.
      record << "%% " << mode << " " << line << "\n" << captured.str() << "\n";
      record.flush();
    }
  }

  void command(const std::string& line) {
    std::istringstream words(line);
    std::string cmd, arg;
    words >> cmd;
    std::getline(words, arg);
    arg = strip(arg);
    if (cmd == ":mode") {
      if (known_mode(arg)) {
        mode = arg;
        out << "mode: " << mode << "\n";
      } else {
        out << "unknown mode '" << arg << "' (prop, proc, type, solve)\n";
      }
    } else if (cmd == ":load") {
      auto text = driver::read_file(arg);
      if (!text) {
        out << "cannot read '" << arg << "'\n";
        return;
      }
      std::istringstream lines(*text);
      std::string l;
      while (std::getline(lines, l)) {
        l = strip(l);
        if (!l.empty()) eval(l);
      }
    } else if (cmd == ":record") {
      if (record.is_open()) record.close();
      if (arg.empty()) {
        out << "recording stopped\n";
        return;
      }
      record.open(arg, std::ios::app);
      if (record.is_open()) {
        out << "recording to " << arg << "\n";
      } else {
        out << "cannot open '" << arg << "'\n";
      }
    } else {
      out << "unknown command '" << cmd << "' (:mode, :load, :record, :quit)\n";
    }
  }
};

}  // namespace

int eval_line(const std::string& mode, const std::string& line, std::ostream& out) {
  // Errors go to the same stream: in a transcript they are part of the
  // expected output.
  if (mode == "prop") return driver::cmd_prop(line, false, out, out);
  if (mode == "proc") return driver::cmd_proc_step(line, out, out);
  if (mode == "type") return driver::cmd_typecheck(line, out, out);
  if (mode == "solve") return driver::cmd_solve(line, 0, out, out);
  out << "unknown mode '" << mode << "'\n";
  return driver::kParseError;
}

int run(const std::string& initial_mode, std::istream& in, std::ostream& out,
        bool interactive) {
  Session session{known_mode(initial_mode) ? initial_mode : "prop", out, {}};
  std::string line;
  while (true) {
    if (interactive) {
      out << "?- " << std::flush;
    }
    if (!std::getline(in, line)) break;
    line = strip(line);
    if (line.empty()) continue;
    if (line == ":quit") break;
    if (line[0] == ':') {
      session.command(line);
    } else {
      session.eval(line);
    }
  }
  return 0;
}

}  // namespace minilog::repl
