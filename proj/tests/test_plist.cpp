#include <doctest.h>

#include <string>

#include "corovm/plist.hpp"

using corovm::PList;

TEST_SUITE("plist") {
  TEST_CASE("cons does not disturb the extended list") {
    PList<int> base{2, 3};
    auto a = base.cons(1);
    auto b = base.cons(9);
    CHECK(base.to_vector() == std::vector<int>{2, 3});
    CHECK(a.to_vector() == std::vector<int>{1, 2, 3});
    CHECK(b.to_vector() == std::vector<int>{9, 2, 3});
    CHECK(a.tail().identity() == base.identity());
    CHECK(b.tail().identity() == base.identity());
  }

  TEST_CASE("positional lookup") {
    PList<std::string> l{"a", "b", "c"};
    REQUIRE(l.at(0) != nullptr);
    CHECK(*l.at(0) == "a");
    CHECK(*l.at(2) == "c");
    CHECK(l.at(3) == nullptr);
    CHECK(PList<int>{}.at(0) == nullptr);
    CHECK(l.size() == 3);
  }

  TEST_CASE("equality is element-wise") {
    PList<int> a{1, 2, 3};
    PList<int> b{1, 2, 3};
    CHECK(a == b);
    CHECK_FALSE(a == PList<int>{1, 2});
    CHECK_FALSE(a == PList<int>{1, 2, 4});
    CHECK(PList<int>{} == PList<int>{});
  }

  TEST_CASE("map preserves order") {
    PList<int> a{1, 2, 3};
    auto doubled = corovm::map_list(a, [](int x) { return 2 * x; });
    CHECK(doubled.to_vector() == std::vector<int>{2, 4, 6});
  }

  TEST_CASE("long lists are released without deep recursion") {
    PList<int> l;
    for (int k = 0; k < 2'000'000; ++k) l = l.cons(k);
    CHECK(l.size() == 2'000'000);
    auto keep = l.tail().tail();
    l = PList<int>{};
    CHECK(keep.size() == 1'999'998);
  }
}
