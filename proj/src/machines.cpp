#include "corovm/machines.hpp"

#include <stdexcept>

namespace corovm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class Machine, class... Args>
std::shared_ptr<const Machine> closure_of(Args&&... args) {
  return std::make_shared<const Machine>(Machine{std::forward<Args>(args)...});
}

}  // namespace

const char* to_string(Machine m) {
  switch (m) {
    case Machine::ct: return "ct";
    case Machine::gs: return "gs";
    case Machine::it: return "it";
  }
  return "";
}

const char* rule_name(Rule rule, Machine m) {
  switch (rule) {
    case Rule::var: return "var";
    case Rule::app: return "app";
    case Rule::lam: return "lam";
    case Rule::capture: return m == Machine::ct ? "catch" : "get";
    case Rule::resume: return m == Machine::ct ? "throw" : "set";
  }
  return "";
}

const char* to_string(StuckReason r) {
  switch (r) {
    case StuckReason::unbound_var: return "unbound_var";
    case StuckReason::unbound_mu: return "unbound_mu";
    case StuckReason::index_underflow: return "index_underflow";
  }
  return "";
}

const char* to_string(RunOutcome o) {
  switch (o) {
    case RunOutcome::final: return "final";
    case RunOutcome::stuck: return "stuck";
    case RunOutcome::fuel_exhausted: return "fuel_exhausted";
  }
  return "";
}

ClosureCTPtr StateCT::closure() const { return closure_of<ClosureCT>(term, env, mu_env); }
ClosureGSPtr StateGS::closure() const { return closure_of<ClosureGS>(term, lenv, lenv_mu, mu_env); }
ClosureITPtr StateIT::closure() const { return closure_of<ClosureIT>(term, n, i, i_mu, env, mu_env); }

// ---------------------------------------------------------------------------
// ct machine

Step<StateCT> step(const StateCT& s) {
  using T = TermCT;
  using R = Step<StateCT>;
  return std::visit(
      overloaded{
          [&](const T::Var& x) -> R {
            const ClosureCTPtr* c = s.env.at(x.index);
            if (c == nullptr) return {R::Stuck{Rule::var, StuckReason::unbound_var}};
            return {R::Next{Rule::var, StateCT{(*c)->term, (*c)->env, (*c)->mu_env, s.stack}}};
          },
          [&](const T::App& x) -> R {
            auto arg = closure_of<ClosureCT>(x.arg, s.env, s.mu_env);
            return {R::Next{Rule::app, StateCT{x.fn, s.env, s.mu_env, s.stack.cons(std::move(arg))}}};
          },
          [&](const T::Lam& x) -> R {
            if (s.stack.empty()) return {R::Final{}};
            return {R::Next{Rule::lam, StateCT{x.body, s.env.cons(s.stack.front()), s.mu_env, s.stack.tail()}}};
          },
          [&](const T::Catch& x) -> R {
            return {R::Next{Rule::capture, StateCT{x.body, s.env, s.mu_env.cons(s.stack), s.stack}}};
          },
          [&](const T::Throw& x) -> R {
            const StackCT* k = s.mu_env.at(x.mu);
            if (k == nullptr) return {R::Stuck{Rule::resume, StuckReason::unbound_mu}};
            return {R::Next{Rule::resume, StateCT{x.body, s.env, s.mu_env, *k}}};
          },
      },
      s.term->node);
}

int matching_rules(const StateCT& s) {
  using T = TermCT;
  const auto& node = s.term->node;
  int count = 0;
  if (auto* x = std::get_if<T::Var>(&node); x && x->index < s.env.size()) ++count;
  if (std::holds_alternative<T::App>(node)) ++count;
  if (std::holds_alternative<T::Lam>(node) && !s.stack.empty()) ++count;
  if (std::holds_alternative<T::Lam>(node) && s.stack.empty()) ++count;
  if (std::holds_alternative<T::Catch>(node)) ++count;
  if (auto* x = std::get_if<T::Throw>(&node); x && x->mu < s.mu_env.size()) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// gs machine

Step<StateGS> step(const StateGS& s) {
  using T = TermGS;
  using R = Step<StateGS>;
  return std::visit(
      overloaded{
          [&](const T::Var& x) -> R {
            const ClosureGSPtr* c = s.lenv.at(x.index);
            if (c == nullptr) return {R::Stuck{Rule::var, StuckReason::unbound_var}};
            const auto& d = **c;
            return {R::Next{Rule::var, StateGS{d.term, d.lenv, d.lenv_mu, d.mu_env, s.stack}}};
          },
          [&](const T::App& x) -> R {
            auto arg = closure_of<ClosureGS>(x.arg, s.lenv, s.lenv_mu, s.mu_env);
            return {R::Next{Rule::app, StateGS{x.fn, s.lenv, s.lenv_mu, s.mu_env, s.stack.cons(std::move(arg))}}};
          },
          [&](const T::Lam& x) -> R {
            if (s.stack.empty()) return {R::Final{}};
            return {R::Next{Rule::lam,
                            StateGS{x.body, s.lenv.cons(s.stack.front()), s.lenv_mu, s.mu_env, s.stack.tail()}}};
          },
          [&](const T::Catch& x) -> R {
            return {R::Next{Rule::capture,
                            StateGS{x.body, s.lenv, s.lenv_mu.cons(s.lenv), s.mu_env.cons(s.stack), s.stack}}};
          },
          [&](const T::Throw& x) -> R {
            const LocalEnv* env = s.lenv_mu.at(x.mu);
            const StackGS* k = s.mu_env.at(x.mu);
            if (env == nullptr || k == nullptr || s.lenv_mu.size() != s.mu_env.size())
              return {R::Stuck{Rule::resume, StuckReason::unbound_mu}};
            return {R::Next{Rule::resume, StateGS{x.body, *env, s.lenv_mu, s.mu_env, *k}}};
          },
      },
      s.term->node);
}

int matching_rules(const StateGS& s) {
  using T = TermGS;
  const auto& node = s.term->node;
  int count = 0;
  if (auto* x = std::get_if<T::Var>(&node); x && x->index < s.lenv.size()) ++count;
  if (std::holds_alternative<T::App>(node)) ++count;
  if (std::holds_alternative<T::Lam>(node) && !s.stack.empty()) ++count;
  if (std::holds_alternative<T::Lam>(node) && s.stack.empty()) ++count;
  if (std::holds_alternative<T::Catch>(node)) ++count;
  if (auto* x = std::get_if<T::Throw>(&node);
      x && x->mu < s.lenv_mu.size() && x->mu < s.mu_env.size() && s.lenv_mu.size() == s.mu_env.size())
    ++count;
  return count;
}

// ---------------------------------------------------------------------------
// it machine

Step<StateIT> step(const StateIT& s) {
  using T = TermGS;
  using R = Step<StateIT>;
  return std::visit(
      overloaded{
          [&](const T::Var& x) -> R {
            const Depth* depth = s.i.at(x.index);
            if (depth == nullptr) return {R::Stuck{Rule::var, StuckReason::unbound_var}};
            if (*depth > s.n) return {R::Stuck{Rule::var, StuckReason::index_underflow}};
            const ClosureITPtr* c = s.env.at(s.n - *depth);
            if (c == nullptr) return {R::Stuck{Rule::var, StuckReason::unbound_var}};
            const auto& d = **c;
            return {R::Next{Rule::var, StateIT{d.term, d.n, d.i, d.i_mu, d.env, d.mu_env, s.stack}}};
          },
          [&](const T::App& x) -> R {
            auto arg = closure_of<ClosureIT>(x.arg, s.n, s.i, s.i_mu, s.env, s.mu_env);
            return {R::Next{Rule::app, StateIT{x.fn, s.n, s.i, s.i_mu, s.env, s.mu_env, s.stack.cons(std::move(arg))}}};
          },
          [&](const T::Lam& x) -> R {
            if (s.stack.empty()) return {R::Final{}};
            return {R::Next{Rule::lam, StateIT{x.body, s.n + 1, s.i.cons(s.n + 1), s.i_mu, s.env.cons(s.stack.front()),
                                               s.mu_env, s.stack.tail()}}};
          },
          [&](const T::Catch& x) -> R {
            return {R::Next{Rule::capture,
                            StateIT{x.body, s.n, s.i, s.i_mu.cons(s.i), s.env, s.mu_env.cons(s.stack), s.stack}}};
          },
          [&](const T::Throw& x) -> R {
            const Vector* i = s.i_mu.at(x.mu);
            const StackIT* k = s.mu_env.at(x.mu);
            if (i == nullptr || k == nullptr) return {R::Stuck{Rule::resume, StuckReason::unbound_mu}};
            return {R::Next{Rule::resume, StateIT{x.body, s.n, *i, s.i_mu, s.env, s.mu_env, *k}}};
          },
      },
      s.term->node);
}

int matching_rules(const StateIT& s) {
  using T = TermGS;
  const auto& node = s.term->node;
  int count = 0;
  if (auto* x = std::get_if<T::Var>(&node)) {
    const Depth* depth = s.i.at(x->index);
    if (depth && *depth <= s.n && s.n - *depth < s.env.size()) ++count;
  }
  if (std::holds_alternative<T::App>(node)) ++count;
  if (std::holds_alternative<T::Lam>(node) && !s.stack.empty()) ++count;
  if (std::holds_alternative<T::Lam>(node) && s.stack.empty()) ++count;
  if (std::holds_alternative<T::Catch>(node)) ++count;
  if (auto* x = std::get_if<T::Throw>(&node); x && x->mu < s.i_mu.size() && x->mu < s.mu_env.size()) ++count;
  return count;
}

// ---------------------------------------------------------------------------

StateCT initial_ct(const TermCTPtr& t) {
  if (!is_closed(t)) throw std::invalid_argument("initial state needs a closed term: " + print<Calculus::ct>(t));
  return StateCT{t, {}, {}, {}};
}

StateGS initial_gs(const TermGSPtr& t) {
  if (!is_well_scoped(t))
    throw std::invalid_argument("initial state needs a well-scoped term: " + print<Calculus::gs>(t));
  return StateGS{t, {}, {}, {}, {}};
}

StateIT initial_it(const TermGSPtr& t) {
  if (!is_well_scoped(t))
    throw std::invalid_argument("initial state needs a well-scoped term: " + print<Calculus::gs>(t));
  return StateIT{t, 0, {}, {}, {}, {}, {}};
}

std::size_t stack_depth(const StateCT& s) { return s.stack.size(); }
std::size_t stack_depth(const StateGS& s) { return s.stack.size(); }
std::size_t stack_depth(const StateIT& s) { return s.stack.size(); }
std::size_t mu_count(const StateCT& s) { return s.mu_env.size(); }
std::size_t mu_count(const StateGS& s) { return s.mu_env.size(); }
std::size_t mu_count(const StateIT& s) { return s.mu_env.size(); }
std::string head_term(const StateCT& s) { return print<Calculus::ct>(s.term); }
std::string head_term(const StateGS& s) { return print<Calculus::gs>(s.term); }
std::string head_term(const StateIT& s) { return print<Calculus::gs>(s.term); }

namespace {

std::string join_depths(const Vector& v) {
  std::string out = "[";
  for (Depth d : v) {
    if (out.size() > 1) out += ',';
    out += std::to_string(d);
  }
  return out + "]";
}

}  // namespace

std::string describe(const StateCT& s) {
  return "<" + head_term(s) + " | E:" + std::to_string(s.env.size()) + " Emu:" + std::to_string(s.mu_env.size()) +
         " S:" + std::to_string(s.stack.size()) + ">";
}

std::string describe(const StateGS& s) {
  return "<" + head_term(s) + " | L:" + std::to_string(s.lenv.size()) + " Lmu:" + std::to_string(s.lenv_mu.size()) +
         " Emu:" + std::to_string(s.mu_env.size()) + " S:" + std::to_string(s.stack.size()) + ">";
}

std::string describe(const StateIT& s) {
  return "<" + head_term(s) + " | n:" + std::to_string(s.n) + " I:" + join_depths(s.i) +
         " Imu:" + std::to_string(s.i_mu.size()) + " E:" + std::to_string(s.env.size()) +
         " Emu:" + std::to_string(s.mu_env.size()) + " S:" + std::to_string(s.stack.size()) + ">";
}

// ---------------------------------------------------------------------------

namespace {

template <class State>
constexpr Machine machine_of();
template <>
constexpr Machine machine_of<StateCT>() {
  return Machine::ct;
}
template <>
constexpr Machine machine_of<StateGS>() {
  return Machine::gs;
}
template <>
constexpr Machine machine_of<StateIT>() {
  return Machine::it;
}

template <class State>
RunResult<State> run_machine(const State& start, std::size_t max_steps, const TraceSink& sink) {
  constexpr Machine m = machine_of<State>();
  State current = start;
  std::size_t steps = 0;
  auto emit = [&](const char* rule) {
    if (sink) sink(TraceEvent{steps, m, rule, head_term(current), stack_depth(current), mu_count(current)});
  };
  for (;;) {
    Step<State> next = step(current);
    if (next.is_final()) {
      emit("final");
      return {RunOutcome::final, steps, std::move(current), std::nullopt};
    }
    if (auto* stuck = std::get_if<typename Step<State>::Stuck>(&next.outcome)) {
      emit("stuck");
      return {RunOutcome::stuck, steps, std::move(current), stuck->reason};
    }
    if (steps == max_steps) return {RunOutcome::fuel_exhausted, steps, std::move(current), std::nullopt};
    auto& moved = std::get<typename Step<State>::Next>(next.outcome);
    emit(rule_name(moved.rule, m));
    current = std::move(moved.state);
    ++steps;
  }
}

}  // namespace

RunResult<StateCT> run(const StateCT& start, std::size_t max_steps, const TraceSink& sink) {
  return run_machine(start, max_steps, sink);
}
RunResult<StateGS> run(const StateGS& start, std::size_t max_steps, const TraceSink& sink) {
  return run_machine(start, max_steps, sink);
}
RunResult<StateIT> run(const StateIT& start, std::size_t max_steps, const TraceSink& sink) {
  return run_machine(start, max_steps, sink);
}

}  // namespace corovm
