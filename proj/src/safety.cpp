#include "corovm/safety.hpp"

#include <algorithm>
#include <cassert>

namespace corovm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void merge_into(std::set<std::string>& dst, const std::set<std::string>& src) { dst.insert(src.begin(), src.end()); }

// Computes the use sets of t and clears `safe` when some λ below violates the
// safety condition.
UseSets collect(const NamedTermCTPtr& t, bool& safe) {
  using N = NamedTermCT;
  return std::visit(
      overloaded{
          [&](const N::Var& x) {
            UseSets s;
            s.current.insert(x.name);
            return s;
          },
          [&](const N::App& x) {
            UseSets s = collect(x.fn, safe);
            UseSets r = collect(x.arg, safe);
            merge_into(s.current, r.current);
            for (auto& [mu, vars] : r.per_mu) merge_into(s.per_mu[mu], vars);
            return s;
          },
          [&](const N::Lam& x) {
            UseSets s = collect(x.body, safe);
            for (auto& [mu, vars] : s.per_mu) {
              if (vars.count(x.binder)) safe = false;
              vars.erase(x.binder);
            }
            s.current.erase(x.binder);
            return s;
          },
          [&](const N::Catch& x) {
            UseSets s = collect(x.body, safe);
            if (auto it = s.per_mu.find(x.binder); it != s.per_mu.end()) {
              merge_into(s.current, it->second);
              s.per_mu.erase(it);
            }
            return s;
          },
          [&](const N::Throw& x) {
            UseSets s = collect(x.body, safe);
            auto& target = s.per_mu[x.target];
            merge_into(target, s.current);
            s.current.clear();
            return s;
          },
      },
      t->node);
}

bool contains(const PList<std::string>& list, const std::string& name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

bool visible_check(const NamedTermCTPtr& t, const PList<std::string>& v,
                   const std::map<std::string, PList<std::string>>& v_mu) {
  using N = NamedTermCT;
  return std::visit(overloaded{
                        [&](const N::Var& x) { return contains(v, x.name); },
                        [&](const N::App& x) { return visible_check(x.fn, v, v_mu) && visible_check(x.arg, v, v_mu); },
                        [&](const N::Lam& x) { return visible_check(x.body, v.cons(x.binder), v_mu); },
                        [&](const N::Catch& x) {
                          auto extended = v_mu;
                          extended.insert_or_assign(x.binder, v);
                          return visible_check(x.body, v, extended);
                        },
                        [&](const N::Throw& x) {
                          auto it = v_mu.find(x.target);
                          if (it == v_mu.end()) throw ScopeError(ScopeError::Kind::unbound, x.target, x.pos);
                          return visible_check(x.body, it->second, v_mu);
                        },
                    },
                    t->node);
}

bool indexed_check(const TermCTPtr& t, Depth n, const Vector& i, const Table& i_mu, TermPath& path) {
  using T = TermCT;
  return std::visit(
      overloaded{
          [&](const T::Var& x) {
            if (x.index > n) return false;
            Depth k = n - x.index;
            return std::find(i.begin(), i.end(), k) != i.end();
          },
          [&](const T::App& x) {
            path.push_back(PathStep::fn);
            bool ok = indexed_check(x.fn, n, i, i_mu, path);
            path.back() = PathStep::arg;
            ok = ok && indexed_check(x.arg, n, i, i_mu, path);
            path.pop_back();
            return ok;
          },
          [&](const T::Lam& x) {
            assert(i.empty() || i.front() < n + 1);
            path.push_back(PathStep::body);
            bool ok = indexed_check(x.body, n + 1, i.cons(n + 1), i_mu, path);
            path.pop_back();
            return ok;
          },
          [&](const T::Catch& x) {
            path.push_back(PathStep::body);
            bool ok = indexed_check(x.body, n, i, i_mu.cons(i), path);
            path.pop_back();
            return ok;
          },
          [&](const T::Throw& x) {
            const Vector* target = i_mu.at(x.mu);
            if (target == nullptr)
              throw TranslationError(TranslationError::Kind::open_mu_term, path,
                                     "throw " + std::to_string(x.mu) + " with " + std::to_string(i_mu.size()) +
                                         " enclosing catch frames");
            path.push_back(PathStep::body);
            bool ok = indexed_check(x.body, n, *target, i_mu, path);
            path.pop_back();
            return ok;
          },
      },
      t->node);
}

}  // namespace

bool is_strictly_decreasing(const Vector& v) {
  auto it = v.begin();
  if (it == v.end()) return true;
  Depth prev = *it;
  for (++it; it != v.end(); ++it) {
    if (*it >= prev) return false;
    prev = *it;
  }
  return true;
}

UseSets use_sets(const NamedTermCTPtr& t) {
  bool ignored = true;
  return collect(t, ignored);
}

bool is_safe(const NamedTermCTPtr& t) {
  bool safe = true;
  collect(t, safe);
  return safe;
}

bool safe_named(const NamedTermCTPtr& t, const VisibleEnv& env) { return visible_check(t, env.v, env.v_mu); }

bool safe_db(const TermCTPtr& t, Depth n, const Vector& i, const Table& i_mu) {
  TermPath path;
  return indexed_check(t, n, i, i_mu, path);
}

}  // namespace corovm
