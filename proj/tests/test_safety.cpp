#include <doctest.h>

#include "corovm/generate.hpp"
#include "corovm/safety.hpp"
#include "oracles.hpp"

using namespace corovm;
using C = Calculus;

namespace {

NamedTermCTPtr p(const char* src) { return parse<C::ct>(src); }

const char* const safe_example = "\\x. catch a. \\y. throw a x";
const char* const unsafe_example = "\\x. catch a. \\y. throw a y";

}  // namespace

TEST_SUITE("safety") {
  TEST_CASE("use sets") {
    auto v = use_sets(p("x"));
    CHECK(v.current == std::set<std::string>{"x"});
    CHECK(v.per_mu.empty());

    auto c = use_sets(p("catch a. \\y. throw a y"));
    CHECK(c.current.empty());
    CHECK(c.per_mu.empty());

    auto body = use_sets(p("throw a x"));
    CHECK(body.current.empty());
    CHECK(body.per_mu.at("a") == std::set<std::string>{"x"});

    auto whole = use_sets(p("\\x. throw a x"));
    CHECK(whole.current.empty());
    CHECK(whole.per_mu.at("a").empty());
  }

  TEST_CASE("the two examples under all three judgments") {
    CHECK(is_safe(p(safe_example)));
    CHECK(safe_named(p(safe_example)));
    CHECK(safe_db(to_debruijn_ct(p(safe_example))));
    CHECK_FALSE(is_safe(p(unsafe_example)));
    CHECK_FALSE(safe_named(p(unsafe_example)));
    CHECK_FALSE(safe_db(to_debruijn_ct(p(unsafe_example))));
  }

  TEST_CASE("indexed judgment on explicit terms") {
    CHECK(safe_db(ct::lam(ct::catch_(ct::lam(ct::throw_(0, ct::var(1)))))));
    CHECK_FALSE(safe_db(ct::lam(ct::catch_(ct::lam(ct::throw_(0, ct::var(0)))))));
    CHECK(safe_db(ct::lam(ct::lam(ct::var(1)))));
    CHECK_FALSE(safe_db(ct::var(0)));
    // inside an open context: depth 1 with x at depth 1 visible
    CHECK(safe_db(ct::var(0), 1, Vector{1}));
    CHECK_FALSE(safe_db(ct::var(0), 1, Vector{}));
    CHECK_THROWS_AS(safe_db(ct::throw_(0, ct::lam(ct::var(0)))), TranslationError);
  }

  TEST_CASE("visible-variable judgment with a starting environment") {
    VisibleEnv env;
    env.v = PList<std::string>{"x"};
    CHECK(safe_named(p("x"), env));
    CHECK_FALSE(safe_named(p("y"), env));
    env.v_mu["a"] = PList<std::string>{"x"};
    CHECK(safe_named(p("throw a x"), env));
    CHECK_THROWS_AS(safe_named(p("throw b x"), env), ScopeError);
  }

  TEST_CASE("vectors stay strictly decreasing") {
    CHECK(is_strictly_decreasing(Vector{3, 2, 0}));
    CHECK(is_strictly_decreasing(Vector{}));
    CHECK_FALSE(is_strictly_decreasing(Vector{1, 1}));
    CHECK_FALSE(is_strictly_decreasing(Vector{1, 2}));
  }

  TEST_CASE("use sets and safety agree with the clause-by-clause oracle") {
    TermGenerator gen(3);
    for (int k = 0; k < 1000; ++k) {
      auto t = gen.closed_ct(1 + gen.below(30));
      auto sets = use_sets(t);
      REQUIRE(sets.current == oracle::use_set(t, std::nullopt));
      for (const auto& mu : oracle::free_mu(t)) REQUIRE(sets.per_mu.at(mu) == oracle::use_set(t, mu));
      REQUIRE(is_safe(t) == oracle::is_safe(t));
    }
  }

  TEST_CASE("the three judgments agree on closed terms") {
    TermGenerator gen(5);
    int unsafe = 0;
    for (int k = 0; k < 1000; ++k) {
      auto t = gen.closed_ct(1 + gen.below(30));
      bool a = is_safe(t);
      REQUIRE(a == safe_named(t));
      REQUIRE(a == safe_db(to_debruijn_ct(t)));
      unsafe += !a;
    }
    // the sample must exercise both sides
    CHECK(unsafe > 50);
    CHECK(unsafe < 950);
  }
}
