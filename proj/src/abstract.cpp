#include "minilog/abstract.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace minilog {

MachineEnv<Sign> join_envs(const MachineEnv<Sign>& a, const MachineEnv<Sign>& b,
                           int pc) {
  if (a.stack.size() != b.stack.size() || a.locals.size() != b.locals.size()) {
    throw JoinShapeMismatch(pc);
  }
  MachineEnv<Sign> out = a;
  for (std::size_t i = 0; i < out.stack.size(); ++i) {
    out.stack[i] = sign_join(out.stack[i], b.stack[i]);
  }
  for (std::size_t i = 0; i < out.locals.size(); ++i) {
    out.locals[i] = sign_join(out.locals[i], b.locals[i]);
  }
  return out;
}

bool env_leq(const MachineEnv<Sign>& a, const MachineEnv<Sign>& b) {
  if (a.stack.size() != b.stack.size() || a.locals.size() != b.locals.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.stack.size(); ++i) {
    if (!sign_leq(a.stack[i], b.stack[i])) return false;
  }
  for (std::size_t i = 0; i < a.locals.size(); ++i) {
    if (!sign_leq(a.locals[i], b.locals[i])) return false;
  }
  return true;
}

std::vector<RunSolution<SignDomain>> enumerate_paths(const Program& program,
                                                     MachineEnv<Sign> env0,
                                                     int limit,
                                                     const RunHooks<Sign>& hooks) {
  return take(static_cast<std::size_t>(limit),
              run<SignDomain>(program, 0, std::move(env0), hooks));
}

AbstractState analyze_fixpoint(const Program& program, int pc0,
                               MachineEnv<Sign> env0, WorklistOrder order,
                               FixpointStats* stats) {
  AbstractState state;
  state.per_pc.emplace(pc0, std::move(env0));

  std::deque<int> worklist{pc0};
  std::set<int> queued{pc0};

  while (!worklist.empty()) {
    int pc;
    if (order == WorklistOrder::Fifo) {
      pc = worklist.front();
      worklist.pop_front();
    } else {
      pc = worklist.back();
      worklist.pop_back();
    }
    queued.erase(pc);
    if (stats) ++stats->pops;

    const MachineEnv<Sign> env = state.per_pc.at(pc);
    for (const StepNext<Sign>& nx : to_vector(step<SignDomain>(program, pc, env))) {
      if (!nx.pc) continue;  // return is a sink; its env is already recorded
      auto it = state.per_pc.find(*nx.pc);
      bool grew;
      if (it == state.per_pc.end()) {
        state.per_pc.emplace(*nx.pc, nx.env);
        grew = true;
      } else {
        MachineEnv<Sign> joined = join_envs(it->second, nx.env, *nx.pc);
        grew = joined != it->second;
        it->second = std::move(joined);
      }
      if (grew) {
        if (stats) ++stats->growths;
        if (queued.insert(*nx.pc).second) worklist.push_back(*nx.pc);
      }
    }
  }
  return state;
}

std::string render_sign_env(const MachineEnv<Sign>& env) {
  return render_env(env, [](Sign s) { return render(s); });
}

std::string render_fixpoint(const AbstractState& state) {
  std::ostringstream out;
  for (const auto& [pc, env] : state.per_pc) {
    out << pc << ": " << render_sign_env(env) << "\n";
  }
  return out.str();
}

}  // namespace minilog
