#ifndef COROVM_BISIM_HPP
#define COROVM_BISIM_HPP

#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "corovm/machines.hpp"
#include "corovm/translate.hpp"

namespace corovm {

// The star image of an it-closure compiles its term with down at the
// closure's own (n, I, Iμ) and maps the environments element-wise; the
// result is a ct-closure. Results are cached by node identity so that shared
// environments stay shared in the image.
class StarMap {
 public:
  ClosureCTPtr closure(const ClosureITPtr& c);
  StackCT stack(const StackIT& s);
  StateCT state(const StateIT& s);

 private:
  EnvCT env(const EnvIT& e);
  MuEnvCT mu_env(const MuEnvIT& e);

  std::unordered_map<const ClosureIT*, std::pair<ClosureITPtr, ClosureCTPtr>> closures_;
  std::unordered_map<const void*, std::pair<EnvIT, EnvCT>> lists_;
  std::unordered_map<const void*, std::pair<MuEnvIT, MuEnvCT>> mu_lists_;
};

// The diamond image of an it-closure keeps the term and replaces the global
// environment by the local one selected through I (flatten), and each Iμ
// entry by the local environment it selects.
class DiamondMap {
 public:
  ClosureGSPtr closure(const ClosureITPtr& c);
  StackGS stack(const StackIT& s);
  StateGS state(const StateIT& s);

  // For each depth k in i, the image of env(n - k), in order. Throws
  // std::out_of_range when k > n or n - k is outside env.
  LocalEnv flatten(Depth n, const EnvIT& env, const Vector& i);

 private:
  using FlattenKey = std::tuple<Depth, const void*, const void*>;

  LocalEnvTable flatten_table(Depth n, const EnvIT& env, const Table& table);
  MuEnvGS mu_env(const MuEnvIT& e);

  std::unordered_map<const ClosureIT*, std::pair<ClosureITPtr, ClosureGSPtr>> closures_;
  std::unordered_map<const void*, std::pair<StackIT, StackGS>> lists_;
  std::unordered_map<const void*, std::pair<MuEnvIT, MuEnvGS>> mu_lists_;
  std::map<FlattenKey, std::tuple<EnvIT, Vector, LocalEnv>> flat_envs_;
  std::map<FlattenKey, std::tuple<EnvIT, Table, LocalEnvTable>> flat_tables_;
};

ClosureCTPtr star_closure(const ClosureITPtr& c);
StateCT star_state(const StateIT& s);
LocalEnv flatten(Depth n, const EnvIT& env, const Vector& i);
ClosureGSPtr diamond_closure(const ClosureITPtr& c);
StateGS diamond_state(const StateIT& s);

// Structural equality of machine values. Pairs of closures and list suffixes
// already found equal are remembered, so repeated comparisons along one run
// only pay for new structure.
class StructuralEq {
 public:
  bool operator()(const StateCT& a, const StateCT& b);
  bool operator()(const StateGS& a, const StateGS& b);
  bool operator()(const ClosureCTPtr& a, const ClosureCTPtr& b);
  bool operator()(const ClosureGSPtr& a, const ClosureGSPtr& b);

 private:
  template <class Elem, class Cmp>
  bool lists(const PList<Elem>& a, const PList<Elem>& b, Cmp&& cmp);

  std::set<std::pair<const void*, const void*>> proven_;
  std::vector<std::shared_ptr<const void>> keep_alive_;
};

enum class SimulationPair { star, diamond, composed };

const char* to_string(SimulationPair p);

struct LockstepReport {
  enum class Kind { both_halted, both_stuck, fuel_exhausted, diverged };

  Kind kind = Kind::diverged;
  // Transitions taken by each machine.
  std::size_t steps_checked = 0;
  // Step index of the halt or divergence.
  std::size_t step = 0;
  // Image of the it state and the state of the simulating machine at the
  // point of divergence.
  std::string left;
  std::string right;
  std::string detail;
  // States that matched zero or several rules.
  std::size_t rule_violations = 0;

  // Every checked state pair was related and no machine got stuck.
  bool related() const {
    return (kind == Kind::both_halted || kind == Kind::fuel_exhausted) && rule_violations == 0;
  }
};

const char* to_string(LockstepReport::Kind k);

// Runs the it machine on t and, in lock-step, the ct machine on down(t)
// (star), the gs machine on t (diamond), or both (composed). At every step the
// image of the it state must equal the other machine's state, the same rule
// must fire, and all machines must halt or get stuck together.
LockstepReport lockstep(const TermGSPtr& t, SimulationPair pair, std::size_t max_steps);

}  // namespace corovm

#endif
