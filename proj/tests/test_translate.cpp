#include <doctest.h>

#include "corovm/generate.hpp"
#include "corovm/translate.hpp"

using namespace corovm;
using C = Calculus;

TEST_SUITE("translate") {
  TEST_CASE("down on hand-computed terms") {
    auto ctx = gs::lam(gs::get(gs::lam(gs::set(0, gs::var(0)))));
    CHECK(print<C::ct>(down(ctx)) == "\\. catch. \\. throw 0 #1");
    CHECK(print<C::ct>(down(gs::lam(gs::lam(gs::var(1))))) == "\\. \\. #1");
    CHECK(print<C::ct>(down(gs::get(gs::set(0, gs::lam(gs::var(0)))))) == "catch. throw 0 \\. #0");
    // two λs inside the resumed coroutine: locals 0,1 map past the skipped binder
    auto deep = parse_indexed<C::gs>("\\. get. \\. set 0 \\. #1");
    CHECK(print<C::ct>(down(deep)) == "\\. catch. \\. throw 0 \\. #2");
  }

  TEST_CASE("down errors") {
    try {
      down(gs::lam(gs::var(1)));
      FAIL("expected an error");
    } catch (const TranslationError& e) {
      CHECK(e.kind() == TranslationError::Kind::unsafe_local_index);
      CHECK(to_string(e.path()) == "body");
    }
    try {
      down(gs::set(0, gs::lam(gs::var(0))));
      FAIL("expected an error");
    } catch (const TranslationError& e) {
      CHECK(e.kind() == TranslationError::Kind::open_mu_term);
    }
  }

  TEST_CASE("lift inverts down on the example and rejects the unsafe term") {
    auto safe = ct::lam(ct::catch_(ct::lam(ct::throw_(0, ct::var(1)))));
    CHECK(print<C::gs>(lift(safe)) == "\\. get. \\. set 0 #0");
    try {
      lift(ct::lam(ct::catch_(ct::lam(ct::throw_(0, ct::var(0))))));
      FAIL("expected an error");
    } catch (const TranslationError& e) {
      CHECK(e.kind() == TranslationError::Kind::not_safe);
      CHECK(to_string(e.path()) == "body.body.body.body");
    }
  }

  TEST_CASE("translation in a non-empty context") {
    // depth 2, both binders visible
    auto t = gs::var(1);
    CHECK(print<C::ct>(down(t, 2, Vector{2, 1})) == "#1");
    // depth 2, only the outer binder visible
    CHECK(print<C::ct>(down(gs::var(0), 2, Vector{1})) == "#1");
    CHECK(print<C::gs>(lift(ct::var(1), 2, Vector{1})) == "#0");
    CHECK_THROWS_AS(lift(ct::var(0), 2, Vector{1}), TranslationError);
  }

  TEST_CASE("gs terms compile to safe terms and lift back") {
    TermGenerator gen(17);
    for (int k = 0; k < 1000; ++k) {
      auto t = to_debruijn_gs(gen.well_scoped_gs(1 + gen.below(30)));
      auto d = down(t);
      REQUIRE(safe_db(d));
      REQUIRE(equal<C::gs>(lift(d), t));
    }
  }

  TEST_CASE("ct terms lift exactly when safe, and down undoes lift") {
    TermGenerator gen(19);
    int lifted = 0;
    for (int k = 0; k < 1000; ++k) {
      auto t = to_debruijn_ct(gen.closed_ct(1 + gen.below(30)));
      bool ok = true;
      TermGSPtr l;
      try {
        l = lift(t);
      } catch (const TranslationError& e) {
        REQUIRE(e.kind() == TranslationError::Kind::not_safe);
        ok = false;
      }
      REQUIRE(ok == safe_db(t));
      if (ok) {
        REQUIRE(equal<C::ct>(down(l), t));
        ++lifted;
      }
    }
    CHECK(lifted > 50);
  }
}
