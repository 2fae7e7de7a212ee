#include "support.hpp"

#include <doctest.h>

using namespace cdom;
using namespace cdom::test;

TEST_SUITE("orders") {

TEST_CASE("restrict_order")
{
    CHECK(restrict_order(O("abcd"), S("abc")) == O("abc"));
    CHECK(restrict_order(O("cbda"), S("abc")) == O("cba"));
    CHECK(restrict_order(O("dbca"), S("abcd")) == O("dbca"));
    CHECK(kind_of([] { restrict_order(O("abc"), 0); }) == ErrorKind::InvalidSubset);
    CHECK(kind_of([] { restrict_order(O("abc"), S("abd")); }) == ErrorKind::InvalidSubset);
}

TEST_CASE("kendall_distance")
{
    CHECK(kendall_distance(O("abc"), O("abc")) == 0);
    CHECK(kendall_distance(O("abc"), O("cba")) == 3);
    CHECK(kendall_distance(O("abcd"), O("cdba")) == 5);
    CHECK(kind_of([] { kendall_distance(O("abc"), O("abd")); }) == ErrorKind::InvalidPair);
}

TEST_CASE("alike")
{
    auto p = alike(O("abc"), O("bac"));
    REQUIRE(p);
    CHECK(*p == SP('a', 'b'));
    CHECK(*p == SP('b', 'a'));
    CHECK_FALSE(alike(O("abc"), O("cba")));
    CHECK_FALSE(alike(O("abc"), O("abc")));
    CHECK(alike(O("abcd"), O("bacd")) == SP('a', 'b'));
    CHECK(kind_of([] { alike(O("abc"), O("abd")); }) == ErrorKind::InvalidPair);
}

TEST_CASE("apply_swap")
{
    CHECK(apply_swap(O("abc"), 0) == O("bac"));
    CHECK(apply_swap(O("abcd"), 2) == O("abdc"));
    CHECK(apply_swap(O("bac"), 0) == O("abc"));
    CHECK(kind_of([] { apply_swap(O("abc"), 2); }) == ErrorKind::Index);
    CHECK(kind_of([] { apply_swap(O("abc"), -1); }) == ErrorKind::Index);
}

TEST_CASE("between")
{
    CHECK(between(O("bac"), O("abc"), O("cba")));
    CHECK(between(O("abc"), O("abc"), O("bca")));
    CHECK_FALSE(between(O("acb"), O("abc"), O("bca")));
    CHECK(kind_of([] { between(O("abc"), O("abd"), O("abc")); }) == ErrorKind::InvalidPair);
}

TEST_CASE("switching pairs are unordered and distinct")
{
    CHECK(SP('c', 'a') == SP('a', 'c'));
    CHECK(kind_of([] { SwitchingPair(2, 2); }) == ErrorKind::InvalidPair);
    CHECK(SP('a', 'b').disjoint(SP('c', 'd')));
    CHECK_FALSE(SP('a', 'b').disjoint(SP('b', 'd')));
}

TEST_CASE("metric laws on all orders up to four alternatives")
{
    for (int n = 1; n <= 4; ++n) {
        auto all = all_orders(full_set(n));
        for (const auto& r : all)
            for (const auto& t : all) {
                int d = kendall_distance(r, t);
                CHECK(d == kendall_distance(t, r));
                CHECK((d == 0) == (r == t));
                for (const auto& u : all) {
                    CHECK(kendall_distance(r, u) + kendall_distance(u, t) >= d);
                    bool b = between(u, r, t);
                    CHECK(b == between(u, t, r));
                    CHECK(b == (kendall_distance(r, u) + kendall_distance(u, t) == d));
                }
                CHECK(between(r, r, t));
                CHECK(between(t, r, t));
            }
    }
}

TEST_CASE("restriction composes")
{
    auto all = all_orders(full_set(5));
    for (const auto& r : all)
        for (AltSet b = 1; b <= full_set(5); ++b)
            for (AltSet c = b; c; c = AltSet((c - 1) & b))
                CHECK(restrict_order(restrict_order(r, b), c) == restrict_order(r, c));
}

TEST_CASE("alike inverts apply_swap")
{
    for (const auto& r : all_orders(full_set(5)))
        for (int i = 0; i + 1 < r.size(); ++i) {
            auto p = alike(r, apply_swap(r, i));
            REQUIRE(p);
            CHECK(*p == SwitchingPair(r.at(i), r.at(i + 1)));
        }
}

TEST_CASE("orders keep their ids on a subset")
{
    LinearOrder r = O("dbf");
    CHECK(r.size() == 3);
    CHECK(r.universe() == S("bdf"));
    CHECK(r.position(A('f')) == 2);
    CHECK(r.prefers(A('d'), A('b')));
    CHECK(kind_of([] { LinearOrder({1, 1}); }) == ErrorKind::InvalidSubset);
    auto all = all_orders(full_set(4));
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

}
