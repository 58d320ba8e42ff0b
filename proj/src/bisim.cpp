#include "corovm/bisim.hpp"

#include <stdexcept>

namespace corovm {

namespace {

// Maps a list element-wise, reusing the image of any suffix seen before.
template <class Src, class Dst, class F>
PList<Dst> map_cached(const PList<Src>& list, std::unordered_map<const void*, std::pair<PList<Src>, PList<Dst>>>& cache,
                      F&& f) {
  std::vector<PList<Src>> pending;
  PList<Src> cur = list;
  PList<Dst> base;
  while (!cur.empty()) {
    if (auto it = cache.find(cur.identity()); it != cache.end()) {
      base = it->second.second;
      break;
    }
    pending.push_back(cur);
    cur = cur.tail();
  }
  for (auto p = pending.rbegin(); p != pending.rend(); ++p) {
    base = base.cons(f(p->front()));
    cache.emplace(p->identity(), std::pair{*p, base});
  }
  return base;
}

// Same, for a map keyed by (n, E, list) where the list is a suffix walk.
template <class Key, class Src, class Dst, class Env, class F>
PList<Dst> map_suffixes(Depth n, const Env& env, const PList<Src>& list,
                        std::map<Key, std::tuple<Env, PList<Src>, PList<Dst>>>& cache, F&& f) {
  std::vector<PList<Src>> pending;
  PList<Src> cur = list;
  PList<Dst> base;
  while (!cur.empty()) {
    if (auto it = cache.find(Key{n, env.identity(), cur.identity()}); it != cache.end()) {
      base = std::get<2>(it->second);
      break;
    }
    pending.push_back(cur);
    cur = cur.tail();
  }
  for (auto p = pending.rbegin(); p != pending.rend(); ++p) {
    base = base.cons(f(p->front()));
    cache.emplace(Key{n, env.identity(), p->identity()}, std::tuple{env, *p, base});
  }
  return base;
}

}  // namespace

// ---------------------------------------------------------------------------
// star

ClosureCTPtr StarMap::closure(const ClosureITPtr& c) {
  if (auto it = closures_.find(c.get()); it != closures_.end()) return it->second.second;
  auto image =
      std::make_shared<const ClosureCT>(ClosureCT{down(c->term, c->n, c->i, c->i_mu), env(c->env), mu_env(c->mu_env)});
  closures_.emplace(c.get(), std::pair{c, image});
  return image;
}

EnvCT StarMap::env(const EnvIT& e) {
  return map_cached<ClosureITPtr, ClosureCTPtr>(e, lists_, [this](const ClosureITPtr& c) { return closure(c); });
}

StackCT StarMap::stack(const StackIT& s) { return env(s); }

MuEnvCT StarMap::mu_env(const MuEnvIT& e) {
  return map_cached<StackIT, StackCT>(e, mu_lists_, [this](const StackIT& s) { return stack(s); });
}

StateCT StarMap::state(const StateIT& s) {
  return StateCT{down(s.term, s.n, s.i, s.i_mu), env(s.env), mu_env(s.mu_env), stack(s.stack)};
}

ClosureCTPtr star_closure(const ClosureITPtr& c) { return StarMap().closure(c); }
StateCT star_state(const StateIT& s) { return StarMap().state(s); }

// ---------------------------------------------------------------------------
// diamond

ClosureGSPtr DiamondMap::closure(const ClosureITPtr& c) {
  if (auto it = closures_.find(c.get()); it != closures_.end()) return it->second.second;
  auto image = std::make_shared<const ClosureGS>(
      ClosureGS{c->term, flatten(c->n, c->env, c->i), flatten_table(c->n, c->env, c->i_mu), mu_env(c->mu_env)});
  closures_.emplace(c.get(), std::pair{c, image});
  return image;
}

LocalEnv DiamondMap::flatten(Depth n, const EnvIT& env, const Vector& i) {
  return map_suffixes<FlattenKey, Depth, ClosureGSPtr>(n, env, i, flat_envs_, [&](Depth k) {
    const ClosureITPtr* c = k <= n ? env.at(n - k) : nullptr;
    if (c == nullptr)
      throw std::out_of_range("flatten: depth " + std::to_string(k) + " names no closure at depth " +
                              std::to_string(n) + " with " + std::to_string(env.size()) + " closures");
    return closure(*c);
  });
}

LocalEnvTable DiamondMap::flatten_table(Depth n, const EnvIT& env, const Table& table) {
  return map_suffixes<FlattenKey, Vector, LocalEnv>(n, env, table, flat_tables_,
                                                    [&](const Vector& i) { return flatten(n, env, i); });
}

StackGS DiamondMap::stack(const StackIT& s) {
  return map_cached<ClosureITPtr, ClosureGSPtr>(s, lists_, [this](const ClosureITPtr& c) { return closure(c); });
}

MuEnvGS DiamondMap::mu_env(const MuEnvIT& e) {
  return map_cached<StackIT, StackGS>(e, mu_lists_, [this](const StackIT& s) { return stack(s); });
}

StateGS DiamondMap::state(const StateIT& s) {
  return StateGS{s.term, flatten(s.n, s.env, s.i), flatten_table(s.n, s.env, s.i_mu), mu_env(s.mu_env),
                 stack(s.stack)};
}

LocalEnv flatten(Depth n, const EnvIT& env, const Vector& i) { return DiamondMap().flatten(n, env, i); }
ClosureGSPtr diamond_closure(const ClosureITPtr& c) { return DiamondMap().closure(c); }
StateGS diamond_state(const StateIT& s) { return DiamondMap().state(s); }

// ---------------------------------------------------------------------------
// structural equality

template <class Elem, class Cmp>
bool StructuralEq::lists(const PList<Elem>& a, const PList<Elem>& b, Cmp&& cmp) {
  if (a.size() != b.size()) return false;
  std::vector<std::pair<PList<Elem>, PList<Elem>>> visited;
  PList<Elem> x = a;
  PList<Elem> y = b;
  while (!x.empty()) {
    if (x.identity() == y.identity() || proven_.count({x.identity(), y.identity()})) break;
    if (!cmp(x.front(), y.front())) return false;
    visited.emplace_back(x, y);
    x = x.tail();
    y = y.tail();
  }
  for (auto& [l, r] : visited) {
    proven_.emplace(l.identity(), r.identity());
    keep_alive_.push_back(std::make_shared<const PList<Elem>>(l));
    keep_alive_.push_back(std::make_shared<const PList<Elem>>(r));
  }
  return true;
}

bool StructuralEq::operator()(const ClosureCTPtr& a, const ClosureCTPtr& b) {
  if (a == b || proven_.count({a.get(), b.get()})) return true;
  auto closure_eq = [this](const ClosureCTPtr& x, const ClosureCTPtr& y) { return (*this)(x, y); };
  bool same = equal<Calculus::ct>(a->term, b->term) && lists(a->env, b->env, closure_eq) &&
              lists(a->mu_env, b->mu_env,
                    [&](const StackCT& x, const StackCT& y) { return lists(x, y, closure_eq); });
  if (same) {
    proven_.emplace(a.get(), b.get());
    keep_alive_.push_back(a);
    keep_alive_.push_back(b);
  }
  return same;
}

bool StructuralEq::operator()(const ClosureGSPtr& a, const ClosureGSPtr& b) {
  if (a == b || proven_.count({a.get(), b.get()})) return true;
  auto closure_eq = [this](const ClosureGSPtr& x, const ClosureGSPtr& y) { return (*this)(x, y); };
  auto list_eq = [&](const PList<ClosureGSPtr>& x, const PList<ClosureGSPtr>& y) { return lists(x, y, closure_eq); };
  bool same = equal<Calculus::gs>(a->term, b->term) && lists(a->lenv, b->lenv, closure_eq) &&
              lists(a->lenv_mu, b->lenv_mu, list_eq) && lists(a->mu_env, b->mu_env, list_eq);
  if (same) {
    proven_.emplace(a.get(), b.get());
    keep_alive_.push_back(a);
    keep_alive_.push_back(b);
  }
  return same;
}

bool StructuralEq::operator()(const StateCT& a, const StateCT& b) {
  auto closure_eq = [this](const ClosureCTPtr& x, const ClosureCTPtr& y) { return (*this)(x, y); };
  return equal<Calculus::ct>(a.term, b.term) && lists(a.env, b.env, closure_eq) &&
         lists(a.mu_env, b.mu_env, [&](const StackCT& x, const StackCT& y) { return lists(x, y, closure_eq); }) &&
         lists(a.stack, b.stack, closure_eq);
}

bool StructuralEq::operator()(const StateGS& a, const StateGS& b) {
  auto closure_eq = [this](const ClosureGSPtr& x, const ClosureGSPtr& y) { return (*this)(x, y); };
  auto list_eq = [&](const PList<ClosureGSPtr>& x, const PList<ClosureGSPtr>& y) { return lists(x, y, closure_eq); };
  return equal<Calculus::gs>(a.term, b.term) && lists(a.lenv, b.lenv, closure_eq) &&
         lists(a.lenv_mu, b.lenv_mu, list_eq) && lists(a.mu_env, b.mu_env, list_eq) &&
         lists(a.stack, b.stack, closure_eq);
}

// ---------------------------------------------------------------------------
// lock-step

const char* to_string(SimulationPair p) {
  switch (p) {
    case SimulationPair::star: return "star";
    case SimulationPair::diamond: return "diamond";
    case SimulationPair::composed: return "composed";
  }
  return "";
}

const char* to_string(LockstepReport::Kind k) {
  switch (k) {
    case LockstepReport::Kind::both_halted: return "both_halted";
    case LockstepReport::Kind::both_stuck: return "both_stuck";
    case LockstepReport::Kind::fuel_exhausted: return "fuel_exhausted";
    case LockstepReport::Kind::diverged: return "diverged";
  }
  return "";
}

namespace {

enum class Kind { next, final, stuck };

template <class State>
Kind kind_of(const Step<State>& s) {
  if (s.is_next()) return Kind::next;
  if (s.is_final()) return Kind::final;
  return Kind::stuck;
}

template <class State>
std::optional<Rule> rule_of(const Step<State>& s) {
  if (auto* n = std::get_if<typename Step<State>::Next>(&s.outcome)) return n->rule;
  if (auto* n = std::get_if<typename Step<State>::Stuck>(&s.outcome)) return n->rule;
  return std::nullopt;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::next: return "moves";
    case Kind::final: return "halts";
    case Kind::stuck: return "is stuck";
  }
  return "";
}

class Lockstep {
 public:
  Lockstep(const TermGSPtr& t, SimulationPair pair) : use_star_(pair != SimulationPair::diamond),
                                                       use_diamond_(pair != SimulationPair::star),
                                                       it_(initial_it(t)) {
    if (use_star_) ct_ = initial_ct(down(t));
    if (use_diamond_) gs_ = initial_gs(t);
  }

  LockstepReport run(std::size_t max_steps) {
    for (std::size_t i = 0;; ++i) {
      report_.steps_checked = i;
      report_.step = i;
      if (!related()) return diverged("states are not related");
      count_rules();

      Step<StateIT> it_step = step(it_);
      Kind want = kind_of(it_step);
      std::optional<Step<StateCT>> ct_step;
      std::optional<Step<StateGS>> gs_step;
      if (use_star_) {
        ct_step = step(*ct_);
        if (kind_of(*ct_step) != want || rule_of(*ct_step) != rule_of(it_step)) {
          mismatch_ = Mismatch::star;
          return diverged(std::string("it ") + kind_name(want) + " but ct " + kind_name(kind_of(*ct_step)) +
                          " or fires a different rule");
        }
      }
      if (use_diamond_) {
        gs_step = step(*gs_);
        if (kind_of(*gs_step) != want || rule_of(*gs_step) != rule_of(it_step)) {
          mismatch_ = Mismatch::diamond;
          return diverged(std::string("it ") + kind_name(want) + " but gs " + kind_name(kind_of(*gs_step)) +
                          " or fires a different rule");
        }
      }

      if (want == Kind::final) return finish(LockstepReport::Kind::both_halted);
      if (want == Kind::stuck) return finish(LockstepReport::Kind::both_stuck);
      if (i == max_steps) return finish(LockstepReport::Kind::fuel_exhausted);

      it_ = std::move(std::get<Step<StateIT>::Next>(it_step.outcome).state);
      if (ct_step) ct_ = std::move(std::get<Step<StateCT>::Next>(ct_step->outcome).state);
      if (gs_step) gs_ = std::move(std::get<Step<StateGS>::Next>(gs_step->outcome).state);
    }
  }

 private:
  bool related() {
    try {
      if (use_star_ && !eq_(star_.state(it_), *ct_)) {
        mismatch_ = Mismatch::star;
        return false;
      }
      if (use_diamond_ && !eq_(diamond_.state(it_), *gs_)) {
        mismatch_ = Mismatch::diamond;
        return false;
      }
    } catch (const std::exception& e) {
      image_error_ = e.what();
      return false;
    }
    return true;
  }

  void count_rules() {
    if (matching_rules(it_) != 1) ++report_.rule_violations;
    if (use_star_ && matching_rules(*ct_) != 1) ++report_.rule_violations;
    if (use_diamond_ && matching_rules(*gs_) != 1) ++report_.rule_violations;
  }

  LockstepReport diverged(std::string detail) {
    report_.kind = LockstepReport::Kind::diverged;
    report_.detail = std::move(detail);
    if (!image_error_.empty()) report_.detail += ": " + image_error_;
    report_.left = describe(it_);
    if (mismatch_ == Mismatch::diamond || !use_star_) {
      report_.right = describe(*gs_);
      if (image_error_.empty()) report_.left = describe(diamond_.state(it_));
    } else {
      report_.right = describe(*ct_);
      if (image_error_.empty()) report_.left = describe(star_.state(it_));
    }
    return report_;
  }

  LockstepReport finish(LockstepReport::Kind kind) {
    report_.kind = kind;
    return report_;
  }

  enum class Mismatch { none, star, diamond };

  bool use_star_;
  bool use_diamond_;
  StateIT it_;
  std::optional<StateCT> ct_;
  std::optional<StateGS> gs_;
  StarMap star_;
  DiamondMap diamond_;
  StructuralEq eq_;
  Mismatch mismatch_ = Mismatch::none;
  std::string image_error_;
  LockstepReport report_;
};

}  // namespace

LockstepReport lockstep(const TermGSPtr& t, SimulationPair pair, std::size_t max_steps) {
  return Lockstep(t, pair).run(max_steps);
}

}  // namespace corovm
