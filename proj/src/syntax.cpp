#include "corovm/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <utility>
#include <vector>

#include "corovm/plist.hpp"

namespace corovm {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* to_string(Calculus c) { return c == Calculus::ct ? "ct" : "gs"; }

// ---------------------------------------------------------------------------
// Constructors

namespace {

template <Calculus C, class Node>
TermPtr<C> make(Node node) {
  return std::make_shared<const Term<C>>(Term<C>{std::move(node)});
}

template <Calculus C, class Node>
NamedTermPtr<C> make_named(Node node) {
  return std::make_shared<const NamedTerm<C>>(NamedTerm<C>{std::move(node)});
}

}  // namespace

namespace ct {
using T = TermCT;
TermCTPtr var(std::size_t index) { return make<Calculus::ct>(T::Var{index}); }
TermCTPtr app(TermCTPtr fn, TermCTPtr arg) { return make<Calculus::ct>(T::App{std::move(fn), std::move(arg)}); }
TermCTPtr lam(TermCTPtr body) { return make<Calculus::ct>(T::Lam{std::move(body)}); }
TermCTPtr catch_(TermCTPtr body) { return make<Calculus::ct>(T::Catch{std::move(body)}); }
TermCTPtr throw_(std::size_t mu, TermCTPtr body) { return make<Calculus::ct>(T::Throw{mu, std::move(body)}); }
}  // namespace ct

namespace gs {
using T = TermGS;
TermGSPtr var(std::size_t index) { return make<Calculus::gs>(T::Var{index}); }
TermGSPtr app(TermGSPtr fn, TermGSPtr arg) { return make<Calculus::gs>(T::App{std::move(fn), std::move(arg)}); }
TermGSPtr lam(TermGSPtr body) { return make<Calculus::gs>(T::Lam{std::move(body)}); }
TermGSPtr get(TermGSPtr body) { return make<Calculus::gs>(T::Catch{std::move(body)}); }
TermGSPtr set(std::size_t mu, TermGSPtr body) { return make<Calculus::gs>(T::Throw{mu, std::move(body)}); }
}  // namespace gs

namespace named {
template <Calculus C>
NamedTermPtr<C> var(std::string name, SourcePos pos) {
  return make_named<C>(typename NamedTerm<C>::Var{std::move(name), pos});
}
template <Calculus C>
NamedTermPtr<C> app(NamedTermPtr<C> fn, NamedTermPtr<C> arg) {
  return make_named<C>(typename NamedTerm<C>::App{std::move(fn), std::move(arg)});
}
template <Calculus C>
NamedTermPtr<C> lam(std::string binder, NamedTermPtr<C> body) {
  return make_named<C>(typename NamedTerm<C>::Lam{std::move(binder), std::move(body)});
}
template <Calculus C>
NamedTermPtr<C> catch_(std::string binder, NamedTermPtr<C> body) {
  return make_named<C>(typename NamedTerm<C>::Catch{std::move(binder), std::move(body)});
}
template <Calculus C>
NamedTermPtr<C> throw_(std::string target, NamedTermPtr<C> body, SourcePos pos) {
  return make_named<C>(typename NamedTerm<C>::Throw{std::move(target), std::move(body), pos});
}
}  // namespace named

// ---------------------------------------------------------------------------
// Equality and size

template <Calculus C>
bool equal(const TermPtr<C>& a, const TermPtr<C>& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  using T = Term<C>;
  return std::visit(
      overloaded{
          [&](const typename T::Var& x) { return x.index == std::get<typename T::Var>(b->node).index; },
          [&](const typename T::App& x) {
            const auto& y = std::get<typename T::App>(b->node);
            return equal<C>(x.fn, y.fn) && equal<C>(x.arg, y.arg);
          },
          [&](const typename T::Lam& x) { return equal<C>(x.body, std::get<typename T::Lam>(b->node).body); },
          [&](const typename T::Catch& x) { return equal<C>(x.body, std::get<typename T::Catch>(b->node).body); },
          [&](const typename T::Throw& x) {
            const auto& y = std::get<typename T::Throw>(b->node);
            return x.mu == y.mu && equal<C>(x.body, y.body);
          },
      },
      a->node);
}

template <Calculus C>
bool equal(const NamedTermPtr<C>& a, const NamedTermPtr<C>& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  using T = NamedTerm<C>;
  return std::visit(
      overloaded{
          [&](const typename T::Var& x) { return x.name == std::get<typename T::Var>(b->node).name; },
          [&](const typename T::App& x) {
            const auto& y = std::get<typename T::App>(b->node);
            return equal<C>(x.fn, y.fn) && equal<C>(x.arg, y.arg);
          },
          [&](const typename T::Lam& x) {
            const auto& y = std::get<typename T::Lam>(b->node);
            return x.binder == y.binder && equal<C>(x.body, y.body);
          },
          [&](const typename T::Catch& x) {
            const auto& y = std::get<typename T::Catch>(b->node);
            return x.binder == y.binder && equal<C>(x.body, y.body);
          },
          [&](const typename T::Throw& x) {
            const auto& y = std::get<typename T::Throw>(b->node);
            return x.target == y.target && equal<C>(x.body, y.body);
          },
      },
      a->node);
}

namespace {

template <class Ptr>
std::size_t count_nodes(const Ptr& t) {
  using Node = typename Ptr::element_type;
  return std::visit(
      overloaded{
          [](const typename Node::Var&) -> std::size_t { return 1; },
          [](const typename Node::App& x) -> std::size_t { return 1 + count_nodes(x.fn) + count_nodes(x.arg); },
          [](const auto& x) -> std::size_t { return 1 + count_nodes(x.body); },
      },
      t->node);
}

}  // namespace

template <Calculus C>
std::size_t term_size(const TermPtr<C>& t) {
  return count_nodes(t);
}
template <Calculus C>
std::size_t term_size(const NamedTermPtr<C>& t) {
  return count_nodes(t);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { ident, number, hash_index, backslash, dot, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t value = 0;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      SourcePos at = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::end, "", 0, at});
        return out;
      }
      char c = src_[i_];
      if (c == '\\') {
        advance();
        out.push_back({Tok::backslash, "\\", 0, at});
      } else if (src_.substr(i_, 2) == "\xCE\xBB") {  // λ
        advance();
        advance();
        out.push_back({Tok::backslash, "\\", 0, at});
      } else if (c == '.') {
        advance();
        out.push_back({Tok::dot, ".", 0, at});
      } else if (c == '(') {
        advance();
        out.push_back({Tok::lparen, "(", 0, at});
      } else if (c == ')') {
        advance();
        out.push_back({Tok::rparen, ")", 0, at});
      } else if (c == '#') {
        advance();
        if (i_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[i_])))
          throw SyntaxError("expected digits after '#'", at);
        out.push_back({Tok::hash_index, "", read_number(at), at});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Tok::number, "", read_number(at), at});
      } else if (ident_start(c)) {
        std::size_t start = i_;
        while (i_ < src_.size() && ident_char(src_[i_])) advance();
        out.push_back({Tok::ident, std::string(src_.substr(start, i_ - start)), 0, at});
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
      }
    }
  }

 private:
  void advance() {
    char c = src_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos_.column;
    }
  }

  void skip_blank() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (src_.substr(i_, 2) == "--") {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::size_t read_number(SourcePos at) {
    std::size_t start = i_;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) advance();
    std::size_t value = 0;
    auto digits = src_.substr(start, i_ - start);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc()) throw SyntaxError("index out of range", at);
    return value;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

struct Keywords {
  std::string_view capture;
  std::string_view resume;
  std::string_view foreign_capture;
  std::string_view foreign_resume;
};

template <Calculus C>
constexpr Keywords named_keywords() {
  if constexpr (C == Calculus::ct)
    return {"catch", "throw", "getctx", "setctx"};
  else
    return {"getctx", "setctx", "catch", "throw"};
}

template <Calculus C>
constexpr Keywords indexed_keywords() {
  if constexpr (C == Calculus::ct)
    return {"catch", "throw", "get", "set"};
  else
    return {"get", "set", "catch", "throw"};
}

// Shared recursive-descent skeleton; Named selects the surface form.
template <Calculus C, bool Named>
class Parser {
  using Result = std::conditional_t<Named, NamedTermPtr<C>, TermPtr<C>>;

 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Result parse_all() {
    Result t = parse_term();
    if (peek().kind != Tok::end) fail("unexpected '" + describe(peek()) + "'");
    return t;
  }

 private:
  static constexpr Keywords kw = Named ? named_keywords<C>() : indexed_keywords<C>();

  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, peek().pos); }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::end: return "end of input";
      case Tok::number: return std::to_string(t.value);
      case Tok::hash_index: return "#" + std::to_string(t.value);
      default: return t.text;
    }
  }

  bool is_kw(const Token& t, std::string_view word) const { return t.kind == Tok::ident && t.text == word; }

  void check_foreign(const Token& t) const {
    if (is_kw(t, kw.foreign_capture) || is_kw(t, kw.foreign_resume))
      throw SyntaxError("unknown keyword '" + t.text + "' for the " + to_string(C) + " calculus", t.pos);
  }

  bool starts_prefix(const Token& t) const {
    return t.kind == Tok::backslash || is_kw(t, kw.capture) || is_kw(t, kw.resume);
  }

  bool starts_atom(const Token& t) const {
    if (t.kind == Tok::lparen) return true;
    if constexpr (Named) {
      return t.kind == Tok::ident;
    } else {
      return t.kind == Tok::hash_index || t.kind == Tok::ident;
    }
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found '" + describe(peek()) + "'");
    take();
  }

  std::string expect_ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::ident) fail(std::string("expected ") + what + ", found '" + describe(t) + "'");
    check_foreign(t);
    if (is_kw(t, kw.capture) || is_kw(t, kw.resume)) fail("keyword '" + t.text + "' used as a name");
    return take().text;
  }

  std::size_t expect_number(const char* what) {
    if (peek().kind != Tok::number) fail(std::string("expected ") + what + ", found '" + describe(peek()) + "'");
    return take().value;
  }

  Result parse_term() {
    std::vector<Result> items;
    for (;;) {
      const Token& t = peek();
      check_foreign(t);
      if (starts_prefix(t)) {
        items.push_back(parse_prefix());
        break;
      }
      if (!starts_atom(t)) break;
      items.push_back(parse_atom());
    }
    if (items.empty()) fail("expected a term, found '" + describe(peek()) + "'");
    Result acc = items.front();
    for (std::size_t k = 1; k < items.size(); ++k) acc = app(acc, items[k]);
    return acc;
  }

  Result parse_prefix() {
    const Token& t = take();
    if constexpr (Named) {
      if (t.kind == Tok::backslash) {
        auto binder = expect_ident("a variable name");
        expect(Tok::dot, "'.'");
        return named::lam<C>(std::move(binder), parse_term());
      }
      if (t.text == kw.capture) {
        auto binder = expect_ident("a continuation name");
        expect(Tok::dot, "'.'");
        return named::catch_<C>(std::move(binder), parse_term());
      }
      SourcePos pos = peek().pos;
      auto target = expect_ident("a continuation name");
      return named::throw_<C>(std::move(target), parse_term(), pos);
    } else {
      if (t.kind == Tok::backslash) {
        expect(Tok::dot, "'.'");
        return make<C>(typename Term<C>::Lam{parse_term()});
      }
      if (t.text == kw.capture) {
        expect(Tok::dot, "'.'");
        return make<C>(typename Term<C>::Catch{parse_term()});
      }
      std::size_t mu = expect_number("a continuation index");
      return make<C>(typename Term<C>::Throw{mu, parse_term()});
    }
  }

  Result parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      take();
      Result inner = parse_term();
      expect(Tok::rparen, "')'");
      return inner;
    }
    if constexpr (Named) {
      SourcePos pos = t.pos;
      return named::var<C>(expect_ident("a variable"), pos);
    } else {
      if (t.kind != Tok::hash_index) fail("expected '#index', found '" + describe(t) + "'");
      return make<C>(typename Term<C>::Var{take().value});
    }
  }

  static Result app(Result fn, Result arg) {
    if constexpr (Named)
      return named::app<C>(std::move(fn), std::move(arg));
    else
      return make<C>(typename Term<C>::App{std::move(fn), std::move(arg)});
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

template <class Ptr>
bool is_prefix_form(const Ptr& t) {
  return t->node.index() >= 2;  // Lam, Catch, Throw
}

template <Calculus C, bool Named>
class Printer {
 public:
  std::string run(const std::conditional_t<Named, NamedTermPtr<C>, TermPtr<C>>& t) {
    emit(t, true);
    return std::move(out_);
  }

 private:
  static constexpr Keywords kw = Named ? named_keywords<C>() : indexed_keywords<C>();

  // tail: nothing follows this term in its enclosing application, so a
  // prefix form may be written without parentheses.
  template <class Ptr>
  void emit(const Ptr& t, bool tail) {
    using Node = typename Ptr::element_type;
    std::visit(overloaded{
                   [&](const typename Node::Var& x) {
                     if constexpr (Named)
                       out_ += x.name;
                     else
                       out_ += "#" + std::to_string(x.index);
                   },
                   [&](const typename Node::App& x) {
                     emit_wrapped(x.fn, is_prefix_form(x.fn), false);
                     out_ += ' ';
                     bool arg_is_app = x.arg->node.index() == 1;
                     emit_wrapped(x.arg, arg_is_app || (is_prefix_form(x.arg) && !tail), tail);
                   },
                   [&](const typename Node::Lam& x) {
                     out_ += '\\';
                     if constexpr (Named) out_ += x.binder;
                     out_ += ". ";
                     emit(x.body, true);
                   },
                   [&](const typename Node::Catch& x) {
                     out_ += kw.capture;
                     if constexpr (Named) out_ += " " + x.binder;
                     out_ += ". ";
                     emit(x.body, true);
                   },
                   [&](const typename Node::Throw& x) {
                     out_ += kw.resume;
                     out_ += ' ';
                     if constexpr (Named)
                       out_ += x.target;
                     else
                       out_ += std::to_string(x.mu);
                     out_ += ' ';
                     emit(x.body, true);
                   },
               },
               t->node);
  }

  template <class Ptr>
  void emit_wrapped(const Ptr& t, bool parens, bool tail) {
    if (parens) {
      out_ += '(';
      emit(t, true);
      out_ += ')';
    } else {
      emit(t, tail);
    }
  }

  std::string out_;
};

}  // namespace

template <Calculus C>
NamedTermPtr<C> parse(std::string_view src) {
  return Parser<C, true>(src).parse_all();
}

AnyNamedTerm parse(std::string_view src, Calculus calculus) {
  if (calculus == Calculus::ct) return parse<Calculus::ct>(src);
  return parse<Calculus::gs>(src);
}

template <Calculus C>
TermPtr<C> parse_indexed(std::string_view src) {
  return Parser<C, false>(src).parse_all();
}

template <Calculus C>
std::string print(const NamedTermPtr<C>& t) {
  return Printer<C, true>().run(t);
}

template <Calculus C>
std::string print(const TermPtr<C>& t) {
  return Printer<C, false>().run(t);
}

// ---------------------------------------------------------------------------
// de Bruijn conversion

namespace {

template <class Scope>
std::optional<std::size_t> innermost(const Scope& scope, const std::string& name) {
  for (std::size_t k = scope.size(); k-- > 0;) {
    if (scope[k] == name) return scope.size() - 1 - k;
  }
  return std::nullopt;
}

class CtConverter {
 public:
  TermCTPtr convert(const NamedTermCTPtr& t) {
    using N = NamedTermCT;
    return std::visit(overloaded{
                          [&](const N::Var& x) {
                            auto k = innermost(vars_, x.name);
                            if (!k) throw ScopeError(ScopeError::Kind::unbound, x.name, x.pos);
                            return ct::var(*k);
                          },
                          [&](const N::App& x) { return ct::app(convert(x.fn), convert(x.arg)); },
                          [&](const N::Lam& x) {
                            vars_.push_back(x.binder);
                            auto body = convert(x.body);
                            vars_.pop_back();
                            return ct::lam(std::move(body));
                          },
                          [&](const N::Catch& x) {
                            mus_.push_back(x.binder);
                            auto body = convert(x.body);
                            mus_.pop_back();
                            return ct::catch_(std::move(body));
                          },
                          [&](const N::Throw& x) {
                            auto k = innermost(mus_, x.target);
                            if (!k) throw ScopeError(ScopeError::Kind::unbound, x.target, x.pos);
                            return ct::throw_(*k, convert(x.body));
                          },
                      },
                      t->node);
  }

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> mus_;
};

// Lexical resolution picks the binder a name refers to; visibility then asks
// whether that binder is in the current coroutine's list. Binders are tracked
// by identity so that shadowed names cannot alias an outer binder.
class GsConverter {
  using BinderId = std::size_t;
  using Visible = PList<BinderId>;

 public:
  TermGSPtr convert(const NamedTermGSPtr& t, const Visible& visible) {
    using N = NamedTermGS;
    return std::visit(overloaded{
                          [&](const N::Var& x) {
                            auto id = resolve_var(x.name);
                            if (!id) throw ScopeError(ScopeError::Kind::unbound, x.name, x.pos);
                            std::size_t pos = 0;
                            for (BinderId v : visible) {
                              if (v == *id) return gs::var(pos);
                              ++pos;
                            }
                            throw ScopeError(ScopeError::Kind::not_visible, x.name, x.pos);
                          },
                          [&](const N::App& x) { return gs::app(convert(x.fn, visible), convert(x.arg, visible)); },
                          [&](const N::Lam& x) {
                            BinderId id = next_id_++;
                            vars_.emplace_back(x.binder, id);
                            auto body = convert(x.body, visible.cons(id));
                            vars_.pop_back();
                            return gs::lam(std::move(body));
                          },
                          [&](const N::Catch& x) {
                            mus_.emplace_back(x.binder, visible);
                            auto body = convert(x.body, visible);
                            mus_.pop_back();
                            return gs::get(std::move(body));
                          },
                          [&](const N::Throw& x) {
                            for (std::size_t k = mus_.size(); k-- > 0;) {
                              if (mus_[k].first == x.target) {
                                Visible snapshot = mus_[k].second;
                                return gs::set(mus_.size() - 1 - k, convert(x.body, snapshot));
                              }
                            }
                            throw ScopeError(ScopeError::Kind::unbound, x.target, x.pos);
                          },
                      },
                      t->node);
  }

 private:
  std::optional<BinderId> resolve_var(const std::string& name) const {
    for (std::size_t k = vars_.size(); k-- > 0;) {
      if (vars_[k].first == name) return vars_[k].second;
    }
    return std::nullopt;
  }

  std::vector<std::pair<std::string, BinderId>> vars_;
  std::vector<std::pair<std::string, Visible>> mus_;
  BinderId next_id_ = 0;
};

template <Calculus To, Calculus From>
NamedTermPtr<To> reread(const NamedTermPtr<From>& t) {
  using N = NamedTerm<From>;
  return std::visit(overloaded{
                        [](const typename N::Var& x) { return named::var<To>(x.name, x.pos); },
                        [](const typename N::App& x) {
                          return named::app<To>(reread<To, From>(x.fn), reread<To, From>(x.arg));
                        },
                        [](const typename N::Lam& x) { return named::lam<To>(x.binder, reread<To, From>(x.body)); },
                        [](const typename N::Catch& x) {
                          return named::catch_<To>(x.binder, reread<To, From>(x.body));
                        },
                        [](const typename N::Throw& x) {
                          return named::throw_<To>(x.target, reread<To, From>(x.body), x.pos);
                        },
                    },
                    t->node);
}

bool closed_ct(const TermCTPtr& t, std::size_t lams, std::size_t catches) {
  using T = TermCT;
  return std::visit(overloaded{
                        [&](const T::Var& x) { return x.index < lams; },
                        [&](const T::App& x) { return closed_ct(x.fn, lams, catches) && closed_ct(x.arg, lams, catches); },
                        [&](const T::Lam& x) { return closed_ct(x.body, lams + 1, catches); },
                        [&](const T::Catch& x) { return closed_ct(x.body, lams, catches + 1); },
                        [&](const T::Throw& x) { return x.mu < catches && closed_ct(x.body, lams, catches); },
                    },
                    t->node);
}

// visible: length of the current local environment; snapshots: the length
// recorded by each enclosing get, innermost first.
bool scoped_gs(const TermGSPtr& t, std::size_t visible, const PList<std::size_t>& snapshots) {
  using T = TermGS;
  return std::visit(overloaded{
                        [&](const T::Var& x) { return x.index < visible; },
                        [&](const T::App& x) {
                          return scoped_gs(x.fn, visible, snapshots) && scoped_gs(x.arg, visible, snapshots);
                        },
                        [&](const T::Lam& x) { return scoped_gs(x.body, visible + 1, snapshots); },
                        [&](const T::Catch& x) { return scoped_gs(x.body, visible, snapshots.cons(visible)); },
                        [&](const T::Throw& x) {
                          const std::size_t* len = snapshots.at(x.mu);
                          return len != nullptr && scoped_gs(x.body, *len, snapshots);
                        },
                    },
                    t->node);
}

}  // namespace

TermCTPtr to_debruijn_ct(const NamedTermCTPtr& t) { return CtConverter().convert(t); }

TermGSPtr to_debruijn_gs(const NamedTermGSPtr& t) { return GsConverter().convert(t, {}); }

NamedTermGSPtr as_gs(const NamedTermCTPtr& t) { return reread<Calculus::gs, Calculus::ct>(t); }
NamedTermCTPtr as_ct(const NamedTermGSPtr& t) { return reread<Calculus::ct, Calculus::gs>(t); }

bool is_closed(const TermCTPtr& t) { return closed_ct(t, 0, 0); }

bool is_well_scoped(const TermGSPtr& t) { return scoped_gs(t, 0, {}); }

// ---------------------------------------------------------------------------

#define COROVM_INSTANTIATE(C)                                                                   \
  template bool equal<C>(const TermPtr<C>&, const TermPtr<C>&);                                 \
  template bool equal<C>(const NamedTermPtr<C>&, const NamedTermPtr<C>&);                       \
  template std::size_t term_size<C>(const TermPtr<C>&);                                         \
  template std::size_t term_size<C>(const NamedTermPtr<C>&);                                    \
  template NamedTermPtr<C> parse<C>(std::string_view);                                          \
  template TermPtr<C> parse_indexed<C>(std::string_view);                                       \
  template std::string print<C>(const NamedTermPtr<C>&);                                        \
  template std::string print<C>(const TermPtr<C>&);                                             \
  template NamedTermPtr<C> named::var<C>(std::string, SourcePos);                               \
  template NamedTermPtr<C> named::app<C>(NamedTermPtr<C>, NamedTermPtr<C>);                     \
  template NamedTermPtr<C> named::lam<C>(std::string, NamedTermPtr<C>);                         \
  template NamedTermPtr<C> named::catch_<C>(std::string, NamedTermPtr<C>);                      \
  template NamedTermPtr<C> named::throw_<C>(std::string, NamedTermPtr<C>, SourcePos);

COROVM_INSTANTIATE(Calculus::ct)
COROVM_INSTANTIATE(Calculus::gs)

#undef COROVM_INSTANTIATE

}  // namespace corovm
