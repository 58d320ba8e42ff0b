#ifndef COROVM_SYNTAX_HPP
#define COROVM_SYNTAX_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "corovm/error.hpp"

namespace corovm {

// ct: catch/throw calculus. gs: get-context/set-context calculus, where the
// control binder captures the local environment together with the stack.
enum class Calculus { ct, gs };

const char* to_string(Calculus c);

// ---------------------------------------------------------------------------
// de Bruijn terms. Both name spaces are 0-based and counted from the
// occurrence outwards. In ct a Var index is global (counts every enclosing
// Lam); in gs it is local, a position in the current coroutine's visible
// environment. Catch/Throw read as get-context/set-context in gs.

template <Calculus C>
struct Term;

template <Calculus C>
using TermPtr = std::shared_ptr<const Term<C>>;

template <Calculus C>
struct Term {
  struct Var {
    std::size_t index;
  };
  struct App {
    TermPtr<C> fn;
    TermPtr<C> arg;
  };
  struct Lam {
    TermPtr<C> body;
  };
  struct Catch {
    TermPtr<C> body;
  };
  struct Throw {
    std::size_t mu;
    TermPtr<C> body;
  };

  std::variant<Var, App, Lam, Catch, Throw> node;
};

using TermCT = Term<Calculus::ct>;
using TermGS = Term<Calculus::gs>;
using TermCTPtr = TermPtr<Calculus::ct>;
using TermGSPtr = TermPtr<Calculus::gs>;

namespace ct {
TermCTPtr var(std::size_t index);
TermCTPtr app(TermCTPtr fn, TermCTPtr arg);
TermCTPtr lam(TermCTPtr body);
TermCTPtr catch_(TermCTPtr body);
TermCTPtr throw_(std::size_t mu, TermCTPtr body);
}  // namespace ct

namespace gs {
TermGSPtr var(std::size_t index);
TermGSPtr app(TermGSPtr fn, TermGSPtr arg);
TermGSPtr lam(TermGSPtr body);
TermGSPtr get(TermGSPtr body);
TermGSPtr set(std::size_t mu, TermGSPtr body);
}  // namespace gs

// ---------------------------------------------------------------------------
// Named terms. λ-variables and μ-variables live in separate name spaces; the
// binder site decides which one a name belongs to.

template <Calculus C>
struct NamedTerm;

template <Calculus C>
using NamedTermPtr = std::shared_ptr<const NamedTerm<C>>;

template <Calculus C>
struct NamedTerm {
  struct Var {
    std::string name;
    SourcePos pos;
  };
  struct App {
    NamedTermPtr<C> fn;
    NamedTermPtr<C> arg;
  };
  struct Lam {
    std::string binder;
    NamedTermPtr<C> body;
  };
  struct Catch {
    std::string binder;
    NamedTermPtr<C> body;
  };
  struct Throw {
    std::string target;
    NamedTermPtr<C> body;
    SourcePos pos;
  };

  std::variant<Var, App, Lam, Catch, Throw> node;
};

using NamedTermCT = NamedTerm<Calculus::ct>;
using NamedTermGS = NamedTerm<Calculus::gs>;
using NamedTermCTPtr = NamedTermPtr<Calculus::ct>;
using NamedTermGSPtr = NamedTermPtr<Calculus::gs>;
using AnyNamedTerm = std::variant<NamedTermCTPtr, NamedTermGSPtr>;

namespace named {
template <Calculus C>
NamedTermPtr<C> var(std::string name, SourcePos pos = {});
template <Calculus C>
NamedTermPtr<C> app(NamedTermPtr<C> fn, NamedTermPtr<C> arg);
template <Calculus C>
NamedTermPtr<C> lam(std::string binder, NamedTermPtr<C> body);
template <Calculus C>
NamedTermPtr<C> catch_(std::string binder, NamedTermPtr<C> body);
template <Calculus C>
NamedTermPtr<C> throw_(std::string target, NamedTermPtr<C> body, SourcePos pos = {});
}  // namespace named

// ---------------------------------------------------------------------------

// Structural equality. Source positions are ignored.
template <Calculus C>
bool equal(const TermPtr<C>& a, const TermPtr<C>& b);
template <Calculus C>
bool equal(const NamedTermPtr<C>& a, const NamedTermPtr<C>& b);

// Number of term constructors.
template <Calculus C>
std::size_t term_size(const TermPtr<C>& t);
template <Calculus C>
std::size_t term_size(const NamedTermPtr<C>& t);

// Grammar (application is left-associative and binds tighter than the
// prefix forms, whose bodies extend as far right as possible):
//   t ::= "\" id "." t | "catch" id "." t | "throw" id t     (ct)
//       | "\" id "." t | "getctx" id "." t | "setctx" id t   (gs)
//       | t t | id | "(" t ")"
// "--" starts a comment running to end of line. "λ" is accepted for "\".
template <Calculus C>
NamedTermPtr<C> parse(std::string_view src);

AnyNamedTerm parse(std::string_view src, Calculus calculus);

// Indexed surface form, the same one print() produces for de Bruijn terms:
//   \. t | catch. t | throw k t | #g    (ct)
//   \. t | get. t   | set k t   | #l    (gs)
template <Calculus C>
TermPtr<C> parse_indexed(std::string_view src);

template <Calculus C>
std::string print(const NamedTermPtr<C>& t);
template <Calculus C>
std::string print(const TermPtr<C>& t);

// Named -> de Bruijn. Throws ScopeError on an unbound name.
TermCTPtr to_debruijn_ct(const NamedTermCTPtr& t);

// Named -> local indices. A variable's index is its position in the visible
// list of the coroutine it occurs in: a λ pushes onto the list, getctx
// snapshots it for its μ-variable, setctx switches to that snapshot.
// Throws ScopeError(not_visible) for a variable that is in lexical scope but
// belongs to another coroutine.
TermGSPtr to_debruijn_gs(const NamedTermGSPtr& t);

// Re-reads a named term in the other calculus (catch <-> getctx,
// throw <-> setctx). The tree is unchanged.
NamedTermGSPtr as_gs(const NamedTermCTPtr& t);
NamedTermCTPtr as_ct(const NamedTermGSPtr& t);

// Every Var index below the number of enclosing Lams and every Throw index
// below the number of enclosing Catches.
bool is_closed(const TermCTPtr& t);

// Every μ-index bound and every local index inside the visible environment
// of the coroutine it occurs in.
bool is_well_scoped(const TermGSPtr& t);

}  // namespace corovm

#endif
