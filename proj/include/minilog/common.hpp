#pragma once

#include <stdexcept>
#include <string>

namespace minilog {

// Arithmetic and comparison operators shared by the bytecode model and the
// abstract domain tables.
enum class ArithOp { Mul, Add, Sub };
enum class CmpOp { Le, Gt };

inline std::string render(ArithOp op) {
  switch (op) {
    case ArithOp::Mul: return "*";
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
  }
  return "?";
}

inline std::string render(CmpOp cmp) {
  return cmp == CmpOp::Le ? "<=" : ">";
}

// Raised by the front-end parsers. `line` is 1-based where the input is a
// multi-line file, 0 for single-expression inputs.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& reason, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + reason
                                    : reason),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

// A bytecode jump or fall-through that leaves the program.
class InvalidTarget : public ParseError {
 public:
  explicit InvalidTarget(int pc)
      : ParseError("no instruction at pc " + std::to_string(pc)), pc_(pc) {}

  int pc() const { return pc_; }

 private:
  int pc_ = 0;
};

// Base for errors raised while an analysis is running (as opposed to while
// its input is being parsed).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minilog
