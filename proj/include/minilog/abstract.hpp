#pragma once

#include <map>
#include <string>
#include <vector>

#include "minilog/domains.hpp"
#include "minilog/interp.hpp"

namespace minilog {

// Joining environments of different shapes is an error, not an
// approximation: it would silently hide a stack-balance bug.
class JoinShapeMismatch : public AnalysisError {
 public:
  explicit JoinShapeMismatch(int pc)
      : AnalysisError("environments with different shapes meet at pc " +
                      std::to_string(pc)),
        pc_(pc) {}

  int pc() const { return pc_; }

 private:
  int pc_ = 0;
};

// Per-program-point join of every abstract environment seen on arrival.
struct AbstractState {
  std::map<int, MachineEnv<Sign>> per_pc;

  bool operator==(const AbstractState&) const = default;
};

MachineEnv<Sign> join_envs(const MachineEnv<Sign>& a, const MachineEnv<Sign>& b,
                           int pc);

// Pointwise lattice order; environments must have equal shapes.
bool env_leq(const MachineEnv<Sign>& a, const MachineEnv<Sign>& b);

// First `limit` solutions of the abstract run, in the interpreter's
// enumeration order. The underlying path stream is typically infinite;
// laziness keeps this terminating.
std::vector<RunSolution<SignDomain>> enumerate_paths(
    const Program& program, MachineEnv<Sign> env0, int limit,
    const RunHooks<Sign>& hooks = {});

enum class WorklistOrder { Fifo, Lifo };

struct FixpointStats {
  int pops = 0;    // worklist iterations
  int growths = 0; // strict env growths triggering a re-enqueue
};

// Worklist iteration: propagate step successors, join the incoming
// environment into the state at each pc, and re-enqueue only on strict
// growth. Terminates because both the lattice and the program are finite.
// The entry pc's stored env includes env0 (joined with any loop-backs).
AbstractState analyze_fixpoint(const Program& program, int pc0,
                               MachineEnv<Sign> env0,
                               WorklistOrder order = WorklistOrder::Fifo,
                               FixpointStats* stats = nullptr);

// One line per pc in ascending order: `<pc>: env([...],[...])`.
std::string render_fixpoint(const AbstractState& state);

std::string render_sign_env(const MachineEnv<Sign>& env);

}  // namespace minilog
