#ifndef COROVM_MACHINES_HPP
#define COROVM_MACHINES_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "corovm/plist.hpp"
#include "corovm/safety.hpp"
#include "corovm/syntax.hpp"

namespace corovm {

enum class Machine { ct, gs, it };

const char* to_string(Machine m);

// Transition rules. capture is catch (ct) or get-context (gs, it); resume is
// throw or set-context.
enum class Rule { var, app, lam, capture, resume };

const char* rule_name(Rule rule, Machine m);

enum class StuckReason { unbound_var, unbound_mu, index_underflow };

const char* to_string(StuckReason r);

// ---------------------------------------------------------------------------
// Environment machine for ct terms: a closure is [t, E, Eμ] with E a list of
// closures (indexed by global de Bruijn index) and Eμ a list of stacks.

struct ClosureCT;
using ClosureCTPtr = std::shared_ptr<const ClosureCT>;
using StackCT = PList<ClosureCTPtr>;
using EnvCT = PList<ClosureCTPtr>;
using MuEnvCT = PList<StackCT>;

struct ClosureCT {
  TermCTPtr term;
  EnvCT env;
  MuEnvCT mu_env;
};

struct StateCT {
  TermCTPtr term;
  EnvCT env;
  MuEnvCT mu_env;
  StackCT stack;

  ClosureCTPtr closure() const;
};

// ---------------------------------------------------------------------------
// Coroutine machine for gs terms: each μ-variable denotes a local
// environment (from lenv_mu) paired with a stack (from mu_env).

struct ClosureGS;
using ClosureGSPtr = std::shared_ptr<const ClosureGS>;
using StackGS = PList<ClosureGSPtr>;
using LocalEnv = PList<ClosureGSPtr>;
using LocalEnvTable = PList<LocalEnv>;
using MuEnvGS = PList<StackGS>;

struct ClosureGS {
  TermGSPtr term;
  LocalEnv lenv;
  LocalEnvTable lenv_mu;
  MuEnvGS mu_env;
};

struct StateGS {
  TermGSPtr term;
  LocalEnv lenv;
  LocalEnvTable lenv_mu;
  MuEnvGS mu_env;
  StackGS stack;

  ClosureGSPtr closure() const;
};

// ---------------------------------------------------------------------------
// Intermediate machine for gs terms: local indices are translated at run time
// through the vector i into the global environment env.

struct ClosureIT;
using ClosureITPtr = std::shared_ptr<const ClosureIT>;
using StackIT = PList<ClosureITPtr>;
using EnvIT = PList<ClosureITPtr>;
using MuEnvIT = PList<StackIT>;

struct ClosureIT {
  TermGSPtr term;
  Depth n = 0;
  Vector i;
  Table i_mu;
  EnvIT env;
  MuEnvIT mu_env;
};

struct StateIT {
  TermGSPtr term;
  Depth n = 0;
  Vector i;
  Table i_mu;
  EnvIT env;
  MuEnvIT mu_env;
  StackIT stack;

  ClosureITPtr closure() const;
};

// ---------------------------------------------------------------------------

template <class State>
struct Step {
  struct Next {
    Rule rule;
    State state;
  };
  // An abstraction facing an empty stack.
  struct Final {};
  struct Stuck {
    Rule rule;
    StuckReason reason;
  };

  std::variant<Next, Final, Stuck> outcome;

  bool is_next() const { return std::holds_alternative<Next>(outcome); }
  bool is_final() const { return std::holds_alternative<Final>(outcome); }
  bool is_stuck() const { return std::holds_alternative<Stuck>(outcome); }
};

Step<StateCT> step(const StateCT& s);
Step<StateGS> step(const StateGS& s);
Step<StateIT> step(const StateIT& s);

// Number of transition rules (plus the halting configuration) whose
// premises hold in s. Exactly one for every state that is not stuck.
int matching_rules(const StateCT& s);
int matching_rules(const StateGS& s);
int matching_rules(const StateIT& s);

// Empty environments, tables and stack; n = 0. Throws std::invalid_argument
// for open terms.
StateCT initial_ct(const TermCTPtr& t);
StateGS initial_gs(const TermGSPtr& t);
StateIT initial_it(const TermGSPtr& t);

std::size_t stack_depth(const StateCT& s);
std::size_t stack_depth(const StateGS& s);
std::size_t stack_depth(const StateIT& s);
std::size_t mu_count(const StateCT& s);
std::size_t mu_count(const StateGS& s);
std::size_t mu_count(const StateIT& s);
std::string head_term(const StateCT& s);
std::string head_term(const StateGS& s);
std::string head_term(const StateIT& s);

// One-line summary of a state for diagnostics.
std::string describe(const StateCT& s);
std::string describe(const StateGS& s);
std::string describe(const StateIT& s);

// ---------------------------------------------------------------------------

inline constexpr std::size_t default_max_steps = 1'000'000;

// One record per transition, plus a closing record with rule "final" or
// "stuck". Fields describe the state the rule is applied to.
struct TraceEvent {
  std::size_t step = 0;
  Machine machine = Machine::ct;
  std::string rule;
  std::string head;
  std::size_t stack_depth = 0;
  std::size_t mu_count = 0;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using TraceSink = std::function<void(const TraceEvent&)>;

enum class RunOutcome { final, stuck, fuel_exhausted };

const char* to_string(RunOutcome o);

template <class State>
struct RunResult {
  RunOutcome outcome;
  // Transitions taken.
  std::size_t steps;
  // Final, stuck, or last reached state.
  State state;
  std::optional<StuckReason> reason;
};

// Iterates step until a final or stuck state, or until max_steps transitions
// have been taken and the machine could still move.
RunResult<StateCT> run(const StateCT& start, std::size_t max_steps, const TraceSink& sink = {});
RunResult<StateGS> run(const StateGS& start, std::size_t max_steps, const TraceSink& sink = {});
RunResult<StateIT> run(const StateIT& start, std::size_t max_steps, const TraceSink& sink = {});

}  // namespace corovm

#endif
