#include <doctest.h>

#include <set>

#include "minilog/domains.hpp"
#include "minilog/interp.hpp"
#include "support/programs.hpp"

using namespace minilog;

namespace {

MachineEnv<long long> cenv(std::vector<long long> stack) {
  return MachineEnv<long long>{std::move(stack), {}};
}

MachineEnv<Sign> senv(std::vector<Sign> stack) {
  return MachineEnv<Sign>{std::move(stack), {}};
}

// next_pc of each trace entry must be pc+size or the branch target.
template <typename V>
void check_trace_linkage(const Program& program,
                         const std::vector<TraceEntry<V>>& trace) {
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const Instruction& ins = program.at(trace[i].pc);
    std::set<int> allowed{trace[i].pc + ins.size};
    if (const If1* br = std::get_if<If1>(&ins.opcode)) allowed.insert(br->target);
    CHECK(allowed.count(trace[i + 1].pc) == 1);
  }
}

}  // namespace

TEST_CASE("parse_program reads the 8-instruction listing") {
  Program p = parse_program(test_programs::kCountdown);
  CHECK(p.instructions().size() == 8);
  CHECK(p.contains(0));
  CHECK(render(p.at(6).opcode) == "if1(>,0,3)");
  CHECK(render(p.at(3).opcode) == "iconst(-1)");
  CHECK(p.at(6).size == 3);
}

TEST_CASE("parse_program accepts comments and blank lines") {
  Program p = parse_program("% intro\n  instr( 0 , return , 0 ).  \n\n");
  CHECK(p.instructions().size() == 1);
}

TEST_CASE("parse_program rejects malformed input") {
  CHECK_THROWS_AS(parse_program(""), ParseError);
  CHECK_THROWS_AS(parse_program("instr(1,return,0)."), ParseError);  // no entry
  CHECK_THROWS_AS(parse_program("instr(0,return,0).\ninstr(0,dup,1)."),
                  ParseError);  // duplicate pc
  CHECK_THROWS_AS(parse_program("instr(0,frobnicate,1)."), ParseError);
  CHECK_THROWS_AS(parse_program("instr(0,dup,0).\n"), ParseError);  // zero size
  CHECK_THROWS_AS(parse_program("instr(0,iconst(2),1)"), ParseError);  // no dot
}

TEST_CASE("parse_program rejects dangling jumps and fall-throughs") {
  try {
    parse_program("instr(0,if1(>,0,99),3).\ninstr(3,return,0).");
    FAIL("expected InvalidTarget");
  } catch (const InvalidTarget& e) {
    CHECK(e.pc() == 99);
  }
  try {
    parse_program("instr(0,dup,5).");  // would fall through to a hole
    FAIL("expected InvalidTarget");
  } catch (const InvalidTarget& e) {
    CHECK(e.pc() == 5);
  }
}

TEST_CASE("step executes iop over the top two stack values") {
  // pc 4 of the countdown program: iop(+) on env([-1,4],[]).
  Program p = parse_program(test_programs::kCountdown);
  auto next = to_vector(step<ConcreteDomain>(p, 4, cenv({-1, 4})));
  REQUIRE(next.size() == 1);
  CHECK(next[0].pc == 5);
  CHECK(next[0].env == cenv({3}));
}

TEST_CASE("iop argument order is top-of-stack first") {
  // 10 - 3 with 10 on top: top minus second.
  Program p = parse_program("instr(0,iop(-),1).\ninstr(1,return,0).");
  auto next = to_vector(step<ConcreteDomain>(p, 0, cenv({10, 3})));
  REQUIRE(next.size() == 1);
  CHECK(next[0].env == cenv({7}));
}

TEST_CASE("abstract if1 yields fall-through before jump") {
  Program p = parse_program(test_programs::kCountdownAbs);
  auto next = to_vector(step<SignDomain>(p, 6, senv({Sign::Top, Sign::Top})));
  REQUIRE(next.size() == 2);
  CHECK(next[0].pc == 9);  // comparison-false branch first
  CHECK(next[0].env == senv({Sign::Top}));
  CHECK(next[1].pc == 3);
  CHECK(next[1].env == senv({Sign::Top}));
}

TEST_CASE("concrete if1 yields exactly one successor") {
  Program p = parse_program(test_programs::kCountdown);
  auto taken = to_vector(step<ConcreteDomain>(p, 6, cenv({3, 3})));
  REQUIRE(taken.size() == 1);
  CHECK(taken[0].pc == 3);
  auto fallen = to_vector(step<ConcreteDomain>(p, 6, cenv({0, 0})));
  REQUIRE(fallen.size() == 1);
  CHECK(fallen[0].pc == 9);
}

TEST_CASE("popping an empty stack underflows with a diagnostic") {
  Program p = parse_program("instr(0,iop(+),1).\ninstr(1,return,0).");
  int underflows = 0;
  MachineEnv<long long> reported;
  RunHooks<long long> hooks;
  hooks.on_underflow = [&](const MachineEnv<long long>& env) {
    ++underflows;
    reported = env;
  };
  auto next = to_vector(step<ConcreteDomain>(p, 0, cenv({}), hooks));
  CHECK(next.empty());
  CHECK(underflows == 1);
  CHECK(reported == cenv({}));

  // With one value, the second pop is the one that fails.
  underflows = 0;
  next = to_vector(step<ConcreteDomain>(p, 0, cenv({42}), hooks));
  CHECK(next.empty());
  CHECK(underflows == 1);
  CHECK(reported == cenv({}));
}

TEST_CASE("dup on an empty stack fails silently") {
  Program p = parse_program("instr(0,dup,1).\ninstr(1,return,0).");
  int underflows = 0;
  RunHooks<long long> hooks;
  hooks.on_underflow = [&](const MachineEnv<long long>&) { ++underflows; };
  CHECK(to_vector(step<ConcreteDomain>(p, 0, cenv({}), hooks)).empty());
  CHECK(underflows == 0);
  CHECK(to_vector(run<ConcreteDomain>(p, 0, cenv({}), hooks)).empty());
}

TEST_CASE("concrete run of the countdown program") {
  Program p = parse_program(test_programs::kCountdown);
  auto solutions = take(2, run<ConcreteDomain>(p, 0, cenv({})));
  REQUIRE(solutions.size() == 1);  // deterministic: exactly one solution
  CHECK(solutions[0].final_env == cenv({0}));

  const std::vector<int> expected_pcs{0, 1, 2, 3, 4, 5, 6, 3, 4, 5, 6,
                                      3, 4, 5, 6, 3, 4, 5, 6, 9};
  REQUIRE(solutions[0].trace.size() == expected_pcs.size());
  for (std::size_t i = 0; i < expected_pcs.size(); ++i) {
    CHECK(solutions[0].trace[i].pc == expected_pcs[i]);
  }
  check_trace_linkage(p, solutions[0].trace);
}

TEST_CASE("run on an immediate return leaves the env unchanged") {
  Program p = parse_program("instr(0,return,0).");
  auto solutions = to_vector(run<ConcreteDomain>(p, 0, cenv({5, 6})));
  REQUIRE(solutions.size() == 1);
  CHECK(solutions[0].final_env == cenv({5, 6}));
  CHECK(solutions[0].trace.size() == 1);
}

TEST_CASE("abstract run is lazily enumerable and trace-linked") {
  Program p = parse_program(test_programs::kCountdownAbs);
  auto solutions = take(4, run<SignDomain>(p, 0, senv({})));
  REQUIRE(solutions.size() == 4);  // infinitely many; take stops the search
  for (const auto& sol : solutions) {
    CHECK(sol.final_env == senv({Sign::Top}));
    check_trace_linkage(p, sol.trace);
  }
}

TEST_CASE("stack height per pc is path-independent on the paper programs") {
  {
    Program p = parse_program(test_programs::kCountdown);
    std::map<int, std::set<std::size_t>> heights;
    RunHooks<long long> hooks;
    hooks.on_step = [&heights](int pc, const MachineEnv<long long>& env,
                               const Opcode&) {
      heights[pc].insert(env.stack.size());
    };
    take(1, run<ConcreteDomain>(p, 0, cenv({}), hooks));
    for (const auto& [pc, hs] : heights) CHECK(hs.size() == 1);
  }
  {
    Program p = parse_program(test_programs::kCountdownAbs);
    std::map<int, std::set<std::size_t>> heights;
    RunHooks<Sign> hooks;
    hooks.on_step = [&heights](int pc, const MachineEnv<Sign>& env, const Opcode&) {
      heights[pc].insert(env.stack.size());
    };
    take(8, run<SignDomain>(p, 0, senv({}), hooks));
    for (const auto& [pc, hs] : heights) CHECK(hs.size() == 1);
  }
}

TEST_CASE("trace lines render exactly as the interpreter prints them") {
  Program p = parse_program(test_programs::kCountdown);
  std::vector<std::string> lines;
  RunHooks<long long> hooks;
  hooks.on_step = [&lines](int pc, const MachineEnv<long long>& env,
                           const Opcode& op) {
    lines.push_back(render_trace_line<ConcreteDomain>(pc, env, op));
  };
  take(1, run<ConcreteDomain>(p, 0, cenv({}), hooks));
  REQUIRE(lines.size() == 20);
  CHECK(lines[0] == "> 0  env([],[])  --> iconst(2)");
  CHECK(lines[4] == "> 4  env([-1,4],[])  --> iop(+)");
  CHECK(lines[6] == "> 6  env([3,3],[])  --> if1(>,0,3)");
  CHECK(lines[19] == "> 9  env([0],[])  --> return");
}

TEST_CASE("concrete run rejects abstract constants") {
  Program p = parse_program("instr(0,iconst(pos),1).\ninstr(1,return,0).");
  CHECK_THROWS_AS(take(1, run<ConcreteDomain>(p, 0, cenv({}))), AnalysisError);
}

namespace {

// A domain whose arithmetic is two-valued, to exercise the interpreter's
// handling of nondeterministic operator results.
struct ForkDomain {
  using Value = long long;
  static Value inject_const(const DomainConst& c) {
    return ConcreteDomain::inject_const(c);
  }
  static Stream<Value> ex_op(ArithOp, Value top, Value second) {
    return Stream<Value>::from_vector({top + second, top - second});
  }
  static bool cmp_true(CmpOp cmp, Value a, Value b) {
    return ConcreteDomain::cmp_true(cmp, a, b);
  }
  static bool cmp_false(CmpOp cmp, Value a, Value b) {
    return ConcreteDomain::cmp_false(cmp, a, b);
  }
  static std::string render(Value v) { return std::to_string(v); }
};

}  // namespace

TEST_CASE("each ex_op result becomes a successor, in op order") {
  Program p = parse_program("instr(0,iop(+),1).\ninstr(1,return,0).");
  auto next = to_vector(step<ForkDomain>(p, 0, cenv({10, 3})));
  REQUIRE(next.size() == 2);
  CHECK(next[0].env == cenv({13}));
  CHECK(next[1].env == cenv({7}));

  auto sols = to_vector(run<ForkDomain>(p, 0, cenv({10, 3})));
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].final_env == cenv({13}));
  CHECK(sols[1].final_env == cenv({7}));
}
