#include <doctest.h>

#include <string>

#include "corovm/generate.hpp"
#include "corovm/safety.hpp"
#include "corovm/syntax.hpp"

using namespace corovm;
using C = Calculus;

namespace {

std::string db_ct(const char* src) { return print<C::ct>(to_debruijn_ct(parse<C::ct>(src))); }
std::string db_gs(const char* src) { return print<C::gs>(to_debruijn_gs(parse<C::gs>(src))); }

template <class Fn>
SourcePos syntax_error_pos(Fn&& fn) {
  try {
    fn();
  } catch (const SyntaxError& e) {
    return e.pos();
  }
  FAIL("no syntax error raised");
  return {};
}

}  // namespace

TEST_SUITE("syntax") {
  TEST_CASE("parses the safe example into the expected tree") {
    auto t = parse<C::ct>("\\x. catch a. \\y. throw a x");
    namespace n = named;
    auto expected = n::lam<C::ct>(
        "x", n::catch_<C::ct>("a", n::lam<C::ct>("y", n::throw_<C::ct>("a", n::var<C::ct>("x")))));
    CHECK(equal<C::ct>(t, expected));
    CHECK(term_size<C::ct>(t) == 5);
  }

  TEST_CASE("gs keywords") {
    auto t = parse<C::gs>("\\x. getctx a. \\y. setctx a x");
    auto* lam = std::get_if<NamedTermGS::Lam>(&t->node);
    REQUIRE(lam);
    auto* get = std::get_if<NamedTermGS::Catch>(&lam->body->node);
    REQUIRE(get);
    CHECK(get->binder == "a");
    CHECK(print<C::gs>(t) == "\\x. getctx a. \\y. setctx a x");
  }

  TEST_CASE("application is left associative and prefix forms extend right") {
    CHECK(print<C::ct>(parse<C::ct>("f g h")) == "f g h");
    CHECK(print<C::ct>(parse<C::ct>("f (g h)")) == "f (g h)");
    auto t = parse<C::ct>("\\f. \\x. f x \\y. y");
    CHECK(print<C::ct>(t) == "\\f. \\x. f x \\y. y");
    CHECK(print<C::ct>(parse<C::ct>("(\\x. x) y")) == "(\\x. x) y");
    CHECK(print<C::ct>(parse<C::ct>("(throw a x) y")) == "(throw a x) y");
  }

  TEST_CASE("comments, unicode lambda and whitespace") {
    auto t = parse<C::ct>("-- identity\n  λx.\n x  -- trailing\n");
    CHECK(print<C::ct>(t) == "\\x. x");
  }

  TEST_CASE("syntax errors carry line and column") {
    CHECK(syntax_error_pos([] { parse<C::ct>("\\x. (x"); }) == SourcePos{1, 7});
    CHECK(syntax_error_pos([] { parse<C::ct>("\\x.\n  x )"); }) == SourcePos{2, 5});
    CHECK(syntax_error_pos([] { parse<C::ct>(""); }) == SourcePos{1, 1});
    CHECK(syntax_error_pos([] { parse<C::ct>("\\. x"); }).column == 2);
    CHECK_THROWS_WITH_AS(parse<C::ct>("getctx a. x"), doctest::Contains("unknown keyword"), SyntaxError);
    CHECK_THROWS_WITH_AS(parse<C::gs>("catch a. x"), doctest::Contains("unknown keyword"), SyntaxError);
  }

  TEST_CASE("de Bruijn conversion") {
    CHECK(db_ct("\\x. catch a. \\y. throw a x") == "\\. catch. \\. throw 0 #1");
    CHECK(db_ct("\\x. catch a. \\y. throw a y") == "\\. catch. \\. throw 0 #0");
    CHECK(db_ct("\\x. x") == "\\. #0");
    CHECK(db_ct("catch a. catch b. throw a (throw b \\x. x)") == "catch. catch. throw 1 throw 0 \\. #0");
    CHECK(db_gs("\\x. getctx a. \\y. setctx a x") == "\\. get. \\. set 0 #0");
    CHECK(db_gs("\\x. \\y. x") == "\\. \\. #1");
    CHECK(db_gs("getctx a. setctx a \\x. x") == "get. set 0 \\. #0");
  }

  TEST_CASE("scope errors") {
    CHECK_THROWS_AS(to_debruijn_ct(parse<C::ct>("\\x. y")), ScopeError);
    CHECK_THROWS_AS(to_debruijn_ct(parse<C::ct>("throw a \\x. x")), ScopeError);
    try {
      to_debruijn_gs(parse<C::gs>("\\x. getctx a. \\y. setctx a y"));
      FAIL("expected a visibility error");
    } catch (const ScopeError& e) {
      CHECK(e.kind() == ScopeError::Kind::not_visible);
      CHECK(e.name() == "y");
      CHECK(std::string(e.what()).find("y not visible") != std::string::npos);
    }
  }

  TEST_CASE("printing de Bruijn terms") {
    auto t = ct::lam(ct::catch_(ct::lam(ct::throw_(0, ct::var(1)))));
    CHECK(print<C::ct>(t) == "\\. catch. \\. throw 0 #1");
    auto g = gs::get(gs::set(0, gs::lam(gs::var(0))));
    CHECK(print<C::gs>(g) == "get. set 0 \\. #0");
    CHECK(print<C::ct>(ct::app(ct::app(ct::var(0), ct::var(1)), ct::app(ct::var(2), ct::var(3)))) ==
          "#0 #1 (#2 #3)");
  }

  TEST_CASE("indexed form round trips") {
    for (const char* src : {"\\. catch. \\. throw 0 #1", "(\\. #0 #0) \\. #0 #0", "catch. throw 0 (\\. #0) #0"}) {
      CHECK(print<C::ct>(parse_indexed<C::ct>(src)) == src);
    }
    CHECK(print<C::gs>(parse_indexed<C::gs>("get. set 0 \\. #0")) == "get. set 0 \\. #0");
  }

  TEST_CASE("alpha-equivalent terms have equal de Bruijn forms") {
    auto a = to_debruijn_ct(parse<C::ct>("\\x. catch a. \\y. throw a (x y)"));
    auto b = to_debruijn_ct(parse<C::ct>("\\p. catch k. \\q. throw k (p q)"));
    CHECK(equal<C::ct>(a, b));
    auto c = to_debruijn_ct(parse<C::ct>("\\p. catch k. \\q. throw k (q p)"));
    CHECK_FALSE(equal<C::ct>(a, c));
  }

  TEST_CASE("print then parse is the identity on generated terms") {
    TermGenerator gen(7);
    for (int k = 0; k < 300; ++k) {
      auto t = gen.closed_ct(1 + gen.below(30));
      auto again = parse<C::ct>(print<C::ct>(t));
      REQUIRE(equal<C::ct>(t, again));
      auto db = to_debruijn_ct(t);
      REQUIRE(equal<C::ct>(db, parse_indexed<C::ct>(print<C::ct>(db))));

      auto g = gen.well_scoped_gs(1 + gen.below(30));
      REQUIRE(equal<C::gs>(g, parse<C::gs>(print<C::gs>(g))));
      auto gdb = to_debruijn_gs(g);
      REQUIRE(equal<C::gs>(gdb, parse_indexed<C::gs>(print<C::gs>(gdb))));
    }
  }

  TEST_CASE("gs conversion succeeds exactly on terms whose ct reading is visibly safe") {
    TermGenerator gen(11);
    for (int k = 0; k < 500; ++k) {
      auto t = gen.closed_ct(1 + gen.below(30));
      bool converts = true;
      try {
        to_debruijn_gs(as_gs(t));
      } catch (const ScopeError&) {
        converts = false;
      }
      REQUIRE(converts == safe_named(t));
    }
  }

  TEST_CASE("closedness and well-scopedness") {
    CHECK(is_closed(ct::lam(ct::var(0))));
    CHECK_FALSE(is_closed(ct::var(0)));
    CHECK_FALSE(is_closed(ct::throw_(0, ct::lam(ct::var(0)))));
    CHECK(is_well_scoped(gs::lam(gs::get(gs::lam(gs::set(0, gs::var(0)))))));
    // after set 0 only the snapshot [x] is visible, so local index 1 is out of range
    CHECK_FALSE(is_well_scoped(gs::lam(gs::get(gs::lam(gs::set(0, gs::var(1)))))));
    CHECK(is_well_scoped(gs::lam(gs::lam(gs::var(1)))));
  }
}
