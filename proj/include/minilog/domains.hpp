#pragma once

#include <string>

#include "minilog/bytecode.hpp"
#include "minilog/sign.hpp"
#include "minilog/stream.hpp"

namespace minilog {

// A value domain instantiates the interpreter: it injects program constants,
// executes arithmetic (possibly nondeterministically) and decides which
// branches of a comparison are feasible. In the concrete domain cmp_true and
// cmp_false are mutually exclusive; in the sign domain both may hold, which
// is what makes the abstract run nondeterministic.

struct ConcreteDomain {
  using Value = long long;

  static Value inject_const(const DomainConst& c) {
    if (!c.is_int()) {
      throw AnalysisError("concrete interpreter cannot evaluate abstract constant '" +
                          minilog::render(c.as_sign()) + "'");
    }
    return c.as_int();
  }

  static Stream<Value> ex_op(ArithOp op, Value top, Value second) {
    switch (op) {
      case ArithOp::Mul: return Stream<Value>::single(top * second);
      case ArithOp::Add: return Stream<Value>::single(top + second);
      case ArithOp::Sub: return Stream<Value>::single(top - second);
    }
    return {};
  }

  static bool cmp_true(CmpOp cmp, Value a1, Value a2) {
    return cmp == CmpOp::Le ? a1 <= a2 : a1 > a2;
  }
  static bool cmp_false(CmpOp cmp, Value a1, Value a2) {
    return !cmp_true(cmp, a1, a2);
  }

  static std::string render(Value v) { return std::to_string(v); }
};

struct SignDomain {
  using Value = Sign;

  static Value inject_const(const DomainConst& c) {
    return c.is_int() ? alpha(c.as_int()) : c.as_sign();
  }

  static Stream<Value> ex_op(ArithOp op, Value top, Value second) {
    return Stream<Value>::single(abs_op(op, top, second));
  }

  static bool cmp_true(CmpOp cmp, Value a1, Value a2) {
    return cmp_may_true(cmp, a1, a2);
  }
  static bool cmp_false(CmpOp cmp, Value a1, Value a2) {
    return cmp_may_false(cmp, a1, a2);
  }

  static std::string render(Value v) { return minilog::render(v); }
};

}  // namespace minilog
