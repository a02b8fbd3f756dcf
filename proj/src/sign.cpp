#include "minilog/sign.hpp"

namespace minilog {

std::string render(Sign s) {
  switch (s) {
    case Sign::Pos: return "pos";
    case Sign::Neg: return "neg";
    case Sign::Zero: return "0";
    case Sign::Top: return "top";
  }
  return "?";
}

Sign alpha(long long n) {
  if (n == 0) return Sign::Zero;
  return n > 0 ? Sign::Pos : Sign::Neg;
}

bool sign_leq(Sign a, Sign b) { return a == b || b == Sign::Top; }

Sign sign_join(Sign a, Sign b) { return a == b ? a : Sign::Top; }

namespace {

// Multiplication table, one row per clause:
//   0*_ = 0 | pos*X = X | neg*0 = 0 | neg*pos = neg | neg*neg = pos
//   neg*top = top | top*0 = 0 | top*X = top when X /= 0
constexpr AbsOpRow kMulRows[] = {
    {[](Sign a, Sign) { return a == Sign::Zero; },
     [](Sign, Sign) { return Sign::Zero; }},
    {[](Sign a, Sign) { return a == Sign::Pos; },
     [](Sign, Sign b) { return b; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Zero; },
     [](Sign, Sign) { return Sign::Zero; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Pos; },
     [](Sign, Sign) { return Sign::Neg; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Neg; },
     [](Sign, Sign) { return Sign::Pos; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Top; },
     [](Sign, Sign) { return Sign::Top; }},
    {[](Sign a, Sign b) { return a == Sign::Top && b == Sign::Zero; },
     [](Sign, Sign) { return Sign::Zero; }},
    {[](Sign a, Sign b) { return a == Sign::Top && b != Sign::Zero; },
     [](Sign, Sign) { return Sign::Top; }},
};

// Addition table:
//   0+X = X | pos+0 = pos | pos+pos = pos | pos+neg = top | pos+top = top
//   neg+0 = neg | neg+pos = top | neg+neg = neg | neg+top = top | top+_ = top
constexpr AbsOpRow kAddRows[] = {
    {[](Sign a, Sign) { return a == Sign::Zero; },
     [](Sign, Sign b) { return b; }},
    {[](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Zero; },
     [](Sign, Sign) { return Sign::Pos; }},
    {[](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Pos; },
     [](Sign, Sign) { return Sign::Pos; }},
    {[](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Neg; },
     [](Sign, Sign) { return Sign::Top; }},
    {[](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Top; },
     [](Sign, Sign) { return Sign::Top; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Zero; },
     [](Sign, Sign) { return Sign::Neg; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Pos; },
     [](Sign, Sign) { return Sign::Top; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Neg; },
     [](Sign, Sign) { return Sign::Neg; }},
    {[](Sign a, Sign b) { return a == Sign::Neg && b == Sign::Top; },
     [](Sign, Sign) { return Sign::Top; }},
    {[](Sign a, Sign) { return a == Sign::Top; },
     [](Sign, Sign) { return Sign::Top; }},
};

using CmpRow = bool (*)(Sign, Sign);

// "may be <=" rows:
//   X <= X | top <= X when X /= top | neg <= X when X /= neg
//   0 <= pos | 0 <= top | pos <= top
constexpr CmpRow kLeRows[] = {
    [](Sign a, Sign b) { return a == b; },
    [](Sign a, Sign b) { return a == Sign::Top && b != Sign::Top; },
    [](Sign a, Sign b) { return a == Sign::Neg && b != Sign::Neg; },
    [](Sign a, Sign b) { return a == Sign::Zero && b == Sign::Pos; },
    [](Sign a, Sign b) { return a == Sign::Zero && b == Sign::Top; },
    [](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Top; },
};

// "may be >" rows:
//   _ > top | _ > neg | pos > 0 | top > 0 | pos > pos | top > pos
constexpr CmpRow kGtRows[] = {
    [](Sign, Sign b) { return b == Sign::Top; },
    [](Sign, Sign b) { return b == Sign::Neg; },
    [](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Zero; },
    [](Sign a, Sign b) { return a == Sign::Top && b == Sign::Zero; },
    [](Sign a, Sign b) { return a == Sign::Pos && b == Sign::Pos; },
    [](Sign a, Sign b) { return a == Sign::Top && b == Sign::Pos; },
};

}  // namespace

std::span<const AbsOpRow> abs_op_rows(ArithOp op) {
  switch (op) {
    case ArithOp::Mul: return kMulRows;
    case ArithOp::Add: return kAddRows;
    case ArithOp::Sub: throw UnsupportedAbstractOp(op);
  }
  throw UnsupportedAbstractOp(op);
}

Sign abs_op(ArithOp op, Sign a1, Sign a2) {
  for (const AbsOpRow& row : abs_op_rows(op)) {
    if (row.matches(a1, a2)) return row.apply(a1, a2);
  }
  // Unreachable: both tables are total over Sign x Sign.
  throw AnalysisError("abstract operator table has no row for " + render(a1) +
                      " " + render(op) + " " + render(a2));
}

int abs_op_match_count(ArithOp op, Sign a1, Sign a2) {
  int n = 0;
  for (const AbsOpRow& row : abs_op_rows(op)) {
    if (row.matches(a1, a2)) ++n;
  }
  return n;
}

bool cmp_may_true(CmpOp cmp, Sign a1, Sign a2) {
  auto rows = cmp == CmpOp::Le ? std::span<const CmpRow>(kLeRows)
                               : std::span<const CmpRow>(kGtRows);
  for (CmpRow row : rows) {
    if (row(a1, a2)) return true;
  }
  return false;
}

bool cmp_may_false(CmpOp cmp, Sign a1, Sign a2) {
  return cmp_may_true(cmp == CmpOp::Le ? CmpOp::Gt : CmpOp::Le, a1, a2);
}

}  // namespace minilog
