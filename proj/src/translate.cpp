#include "corovm/translate.hpp"

#include <cassert>
#include <string>

namespace corovm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Recursion shared by down and lift: the vector/table bookkeeping is
// identical, only the variable rule and the node constructors differ.
template <Calculus From, Calculus To, class VarRule>
class Walker {
 public:
  explicit Walker(VarRule rule) : rule_(std::move(rule)) {}

  TermPtr<To> walk(const TermPtr<From>& t, Depth n, const Vector& i, const Table& i_mu) {
    using T = Term<From>;
    using U = Term<To>;
    return std::visit(
        overloaded{
            [&](const typename T::Var& x) { return make(typename U::Var{rule_(x.index, n, i, path_)}); },
            [&](const typename T::App& x) {
              path_.push_back(PathStep::fn);
              auto fn = walk(x.fn, n, i, i_mu);
              path_.back() = PathStep::arg;
              auto arg = walk(x.arg, n, i, i_mu);
              path_.pop_back();
              return make(typename U::App{std::move(fn), std::move(arg)});
            },
            [&](const typename T::Lam& x) {
              assert(i.empty() || i.front() < n + 1);
              path_.push_back(PathStep::body);
              auto body = walk(x.body, n + 1, i.cons(n + 1), i_mu);
              path_.pop_back();
              return make(typename U::Lam{std::move(body)});
            },
            [&](const typename T::Catch& x) {
              path_.push_back(PathStep::body);
              auto body = walk(x.body, n, i, i_mu.cons(i));
              path_.pop_back();
              return make(typename U::Catch{std::move(body)});
            },
            [&](const typename T::Throw& x) {
              const Vector* target = i_mu.at(x.mu);
              if (target == nullptr)
                throw TranslationError(TranslationError::Kind::open_mu_term, path_,
                                       "index " + std::to_string(x.mu) + " with " + std::to_string(i_mu.size()) +
                                           " enclosing frames");
              path_.push_back(PathStep::body);
              auto body = walk(x.body, n, *target, i_mu);
              path_.pop_back();
              return make(typename U::Throw{x.mu, std::move(body)});
            },
        },
        t->node);
  }

 private:
  template <class Node>
  static TermPtr<To> make(Node node) {
    return std::make_shared<const Term<To>>(Term<To>{std::move(node)});
  }

  VarRule rule_;
  TermPath path_;
};

std::size_t local_to_global(std::size_t local, Depth n, const Vector& i, const TermPath& path) {
  const Depth* depth = i.at(local);
  if (depth == nullptr)
    throw TranslationError(TranslationError::Kind::unsafe_local_index, path,
                           "local index " + std::to_string(local) + " outside a vector of length " +
                               std::to_string(i.size()));
  if (*depth > n)
    throw TranslationError(TranslationError::Kind::unsafe_local_index, path,
                           "binder depth " + std::to_string(*depth) + " above current depth " + std::to_string(n));
  return n - *depth;
}

std::size_t global_to_local(std::size_t global, Depth n, const Vector& i, const TermPath& path) {
  assert(is_strictly_decreasing(i));
  if (global <= n) {
    Depth k = n - global;
    std::size_t pos = 0;
    for (Depth d : i) {
      if (d == k) return pos;
      ++pos;
    }
  }
  throw TranslationError(TranslationError::Kind::not_safe, path,
                         "variable #" + std::to_string(global) + " is not visible in the current coroutine");
}

}  // namespace

TermCTPtr down(const TermGSPtr& t, Depth n, const Vector& i, const Table& i_mu) {
  return Walker<Calculus::gs, Calculus::ct, decltype(&local_to_global)>(&local_to_global).walk(t, n, i, i_mu);
}

TermGSPtr lift(const TermCTPtr& t, Depth n, const Vector& i, const Table& i_mu) {
  return Walker<Calculus::ct, Calculus::gs, decltype(&global_to_local)>(&global_to_local).walk(t, n, i, i_mu);
}

}  // namespace corovm
