#include "minilog/process.hpp"

#include <deque>
#include <set>

#include "minilog/parse.hpp"

namespace minilog {

ProcessPtr mk_stop() { return std::make_shared<Process>(Process{StopProcess{}}); }

ProcessPtr mk_prefix(std::string action, ProcessPtr continuation) {
  return std::make_shared<Process>(
      Process{PrefixProcess{std::move(action), std::move(continuation)}});
}

ProcessPtr mk_interleave(ProcessPtr left, ProcessPtr right) {
  return std::make_shared<Process>(
      Process{InterleaveProcess{std::move(left), std::move(right)}});
}

bool process_equal(const ProcessPtr& a, const ProcessPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  if (std::holds_alternative<StopProcess>(a->node)) return true;
  if (const auto* pa = std::get_if<PrefixProcess>(&a->node)) {
    const auto& pb = std::get<PrefixProcess>(b->node);
    return pa->action == pb.action &&
           process_equal(pa->continuation, pb.continuation);
  }
  const auto& ia = std::get<InterleaveProcess>(a->node);
  const auto& ib = std::get<InterleaveProcess>(b->node);
  return process_equal(ia.left, ib.left) && process_equal(ia.right, ib.right);
}

namespace {

// Prefix terms are operator terms; as arguments of '||'(...) they print
// parenthesized, the way a Prolog write would.
void render_rec(const ProcessPtr& p, bool as_argument, std::string& out) {
  if (std::holds_alternative<StopProcess>(p->node)) {
    out += "stop";
    return;
  }
  if (const auto* pre = std::get_if<PrefixProcess>(&p->node)) {
    if (as_argument) out += '(';
    out += pre->action;
    out += "->";
    render_rec(pre->continuation, false, out);
    if (as_argument) out += ')';
    return;
  }
  const auto& il = std::get<InterleaveProcess>(p->node);
  out += "'||'(";
  render_rec(il.left, true, out);
  out += ',';
  render_rec(il.right, true, out);
  out += ')';
}

}  // namespace

std::string render_process(const ProcessPtr& p) {
  std::string out;
  render_rec(p, false, out);
  return out;
}

Stream<Transition> transitions(const ProcessPtr& p) {
  if (std::holds_alternative<StopProcess>(p->node)) return {};
  if (const auto* pre = std::get_if<PrefixProcess>(&p->node)) {
    return Stream<Transition>::single(Transition{pre->action, pre->continuation});
  }
  const auto& il = std::get<InterleaveProcess>(p->node);
  ProcessPtr left = il.left;
  ProcessPtr right = il.right;
  Stream<Transition> left_steps =
      map_stream(transitions(left), [right](Transition t) {
        return Transition{t.action, mk_interleave(t.successor, right)};
      });
  return disj(std::move(left_steps),
              std::function<Stream<Transition>()>([left, right] {
                return map_stream(transitions(right), [left](Transition t) {
                  return Transition{t.action, mk_interleave(left, t.successor)};
                });
              }));
}

Stream<TraceRun> trace_runs(const ProcessPtr& p, int n) {
  if (n <= 0) {
    return Stream<TraceRun>::single(TraceRun{{}, p});
  }
  return bind(transitions(p), [n](Transition t) {
    return map_stream(trace_runs(t.successor, n - 1), [t](TraceRun rest) {
      rest.actions.insert(rest.actions.begin(), t.action);
      return rest;
    });
  });
}

Stream<std::vector<std::string>> traces(const ProcessPtr& p, int n) {
  return map_stream(trace_runs(p, n), [](TraceRun r) { return r.actions; });
}

ReachResult reachable(const ProcessPtr& p) {
  ReachResult result;
  std::set<std::string> seen;
  std::deque<ProcessPtr> frontier;

  seen.insert(render_process(p));
  frontier.push_back(p);
  while (!frontier.empty()) {
    ProcessPtr state = frontier.front();
    frontier.pop_front();
    result.states.push_back(state);
    ++result.expansions;
    std::vector<Transition> steps = to_vector(transitions(state));
    if (steps.empty()) result.deadlocks.push_back(state);
    for (const Transition& t : steps) {
      if (seen.insert(render_process(t.successor)).second) {
        frontier.push_back(t.successor);
      }
    }
  }
  return result;
}

namespace {

ProcessPtr parse_interleave(Lexer& lex);

ProcessPtr parse_primary(Lexer& lex) {
  if (lex.at_punct("(")) {
    lex.next();
    ProcessPtr inner = parse_interleave(lex);
    lex.expect_punct(")");
    return inner;
  }
  if (lex.at(Token::Kind::Ident)) {
    Token t = lex.next();
    if (t.text == "stop") return mk_stop();
    lex.expect_punct("->");
    return mk_prefix(t.text, parse_primary(lex));
  }
  lex.fail("expected a process, found '" + lex.peek().text + "'");
}

ProcessPtr parse_interleave(Lexer& lex) {
  ProcessPtr left = parse_primary(lex);
  while (lex.at_punct("||")) {
    lex.next();
    left = mk_interleave(std::move(left), parse_primary(lex));
  }
  return left;
}

}  // namespace

ProcessPtr parse_process_text(const std::string& text) {
  Lexer lex(text);
  ProcessPtr p = parse_interleave(lex);
  if (!lex.at(Token::Kind::End)) {
    lex.fail("trailing input after process");
  }
  return p;
}

}  // namespace minilog
