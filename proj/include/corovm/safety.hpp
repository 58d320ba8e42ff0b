#ifndef COROVM_SAFETY_HPP
#define COROVM_SAFETY_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "corovm/plist.hpp"
#include "corovm/syntax.hpp"

namespace corovm {

// Binder depth counted from the root: the n-th λ on a branch has depth n.
using Depth = std::size_t;

// Depths of the binders visible to one coroutine, most recent first. Built by
// consing n+1 at depth n, so entries are strictly decreasing and a depth
// occurs at most once.
using Vector = PList<Depth>;

// One Vector per enclosing catch/get-context, innermost first.
using Table = PList<Vector>;

bool is_strictly_decreasing(const Vector& v);

// Variables used by the current coroutine and by each free μ-variable.
struct UseSets {
  std::set<std::string> current;
  std::map<std::string, std::set<std::string>> per_mu;

  friend bool operator==(const UseSets&, const UseSets&) = default;
};

UseSets use_sets(const NamedTermCTPtr& t);

// No λx.u has x in the use set of a μ-variable free in u.
bool is_safe(const NamedTermCTPtr& t);

// Visible variables of the current coroutine, and the visible list captured by
// each μ-variable. Lists are searched by name.
struct VisibleEnv {
  PList<std::string> v;
  std::map<std::string, PList<std::string>> v_mu;
};

// Top-down visibility check. Throws ScopeError when a throw targets a
// μ-variable that is neither bound in t nor in env.v_mu.
bool safe_named(const NamedTermCTPtr& t, const VisibleEnv& env = {});

// Indexed safety judgment: a variable g at depth n is safe when n - g is one
// of the depths in i. Throws TranslationError(open_mu_term) when a throw index
// exceeds the table.
bool safe_db(const TermCTPtr& t, Depth n = 0, const Vector& i = {}, const Table& i_mu = {});

}  // namespace corovm

#endif
