#pragma once

#include <span>
#include <string>

#include "minilog/common.hpp"

namespace minilog {

// Four-point abstract domain over the integers. zero concretizes to {0},
// pos to the positive integers, neg to the negatives, top to all integers.
// There is no explicit bottom: an infeasible result is evaluation failure.
enum class Sign { Pos, Neg, Zero, Top };

inline constexpr Sign kAllSigns[] = {Sign::Pos, Sign::Neg, Sign::Zero, Sign::Top};

// zero renders as `0`, matching bytecode constants and env printouts.
std::string render(Sign s);

// Abstraction of a single integer.
Sign alpha(long long n);

// Flat lattice order: zero, pos, neg pairwise incomparable, all below top.
bool sign_leq(Sign a, Sign b);

// Least upper bound.
Sign sign_join(Sign a, Sign b);

class UnsupportedAbstractOp : public AnalysisError {
 public:
  explicit UnsupportedAbstractOp(ArithOp op)
      : AnalysisError("abstract domain has no table for operator '" +
                      minilog::render(op) + "'") {}
};

// One table row; rows are tried in order and the first match applies.
struct AbsOpRow {
  bool (*matches)(Sign a1, Sign a2);
  Sign (*apply)(Sign a1, Sign a2);
};

// The arithmetic tables for * and +. Throws UnsupportedAbstractOp for -,
// which has no table.
std::span<const AbsOpRow> abs_op_rows(ArithOp op);
Sign abs_op(ArithOp op, Sign a1, Sign a2);

// For the totality check: number of rows matching the pair.
int abs_op_match_count(ArithOp op, Sign a1, Sign a2);

// May the comparison evaluate to true (some concrete witnesses satisfy it)?
bool cmp_may_true(CmpOp cmp, Sign a1, Sign a2);

// May it evaluate to false? Defined as the dual: a false "<=" is a true ">".
bool cmp_may_false(CmpOp cmp, Sign a1, Sign a2);

}  // namespace minilog
