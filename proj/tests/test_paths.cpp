#include "checks.hpp"
#include "support.hpp"

#include "cdom/enumerate.hpp"

#include <doctest.h>

#include <set>

using namespace cdom;
using namespace cdom::test;

namespace {

const Path& walk_a()
{
    static const Path p = P({"abcd", "bacd", "bcad", "cbad", "cbda", "cdba"});
    return p;
}

const Path& walk_b()
{
    static const Path p = P({"abcd", "bacd", "bcad", "bcda", "cbda", "cdba"});
    return p;
}

// Random descent from r to t, each step uniform over reversible adjacent pairs.
Path random_geodesic(const LinearOrder& r, const LinearOrder& t, std::mt19937_64& rng)
{
    std::vector<LinearOrder> v{r};
    while (!(v.back() == t)) {
        std::vector<int> steps;
        for (int i = 0; i + 1 < v.back().size(); ++i)
            if (t.prefers(v.back().at(i + 1), v.back().at(i)))
                steps.push_back(i);
        v.push_back(apply_swap(v.back(), steps[uniform_below(rng, steps.size())]));
    }
    return Path(std::move(v));
}

}

TEST_SUITE("paths") {

TEST_CASE("switch_seq")
{
    CHECK(switch_seq(P({"abc", "bac", "bca", "cba"})).swaps == swaps("(a,b),(a,c),(b,c)"));
    CHECK(switch_seq(walk_a()).swaps == swaps("(a,b),(a,c),(b,c),(a,d),(b,d)"));
    CHECK(switch_seq(P({"abc"})).swaps.empty());
}

TEST_CASE("path_from_seq")
{
    CHECK(path_from_seq({O("abc"), swaps("(a,b)")}) == P({"abc", "bac"}));
    CHECK(path_from_seq({O("abcd"), swaps("(a,b),(a,c),(a,d),(b,c),(b,d)")}) == walk_b());
    CHECK(kind_of([] { path_from_seq({O("abc"), swaps("(a,c)")}); }) == ErrorKind::MalformedSequence);
    CHECK(kind_of([] { P({"abc", "cba"}); }) == ErrorKind::MalformedSequence);
}

TEST_CASE("is_geodesic")
{
    CHECK(is_geodesic(P({"abc", "bac", "bca", "cba"})));
    CHECK_FALSE(is_geodesic(P({"abc", "bac", "abc"})));
    CHECK_FALSE(is_geodesic(P({"abc", "acb", "cab", "cba", "bca"})));
    CHECK(is_geodesic(P({"abc"})));
}

TEST_CASE("restrict_path")
{
    CHECK(restrict_path(walk_a(), S("abc")) == P({"abc", "bac", "bca", "cba"}));
    CHECK(restrict_path(walk_b(), S("abc")) == P({"abc", "bac", "bca", "cba"}));
    CHECK(restrict_path(P({"cadb"}), S("ab")) == P({"ab"}));
    CHECK(restrict_path(walk_a(), S("ad")) == P({"ad", "da"}));
}

TEST_CASE("concat_geodesics")
{
    CHECK(concat_geodesics(P({"abc", "bac"}), P({"bac", "bca"})) == P({"abc", "bac", "bca"}));
    CHECK(concat_geodesics(P({"abc", "bac", "bca"}), P({"bca", "cba"})) == P({"abc", "bac", "bca", "cba"}));
    CHECK(kind_of([] { concat_geodesics(P({"abc", "bac"}), P({"bac", "abc"})); }) == ErrorKind::Precondition);
    CHECK(kind_of([] { concat_geodesics(P({"abc", "bac"}), P({"abc", "acb"})); }) == ErrorKind::Precondition);
}

TEST_CASE("enumerate_geodesics")
{
    CHECK(all_geodesics(O("abc"), O("cba")).size() == 2);
    Domain disconnected = D({"abc", "bac", "cab", "cba"});
    CHECK(all_geodesics(O("abc"), O("cba"), &disconnected).empty());
    auto one = all_geodesics(O("bca"), O("bca"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].length() == 1);
    // 768 reduced words for the longest permutation of five letters.
    CHECK(all_geodesics(O("abcde"), O("edcba")).size() == 768);
    CHECK(all_geodesics(O("abcde"), O("edcba"), nullptr, 5).size() == 5);

    // Deterministic: ascending swap position at each step.
    auto g = all_geodesics(O("abc"), O("cba"));
    CHECK(g[0] == P({"abc", "bac", "bca", "cba"}));
    CHECK(g[1] == P({"abc", "acb", "cab", "cba"}));
}

TEST_CASE("geodesics are exactly the distance-length paths")
{
    for (const auto& r : all_orders(full_set(4)))
        for (const auto& t : all_orders(full_set(4))) {
            std::set<std::vector<LinearOrder>> seen;
            for (const auto& g : all_geodesics(r, t)) {
                CHECK(is_geodesic(g));
                CHECK(g.length() == std::size_t(kendall_distance(r, t) + 1));
                auto s = switch_seq(g).swaps;
                CHECK(std::set<SwitchingPair>(s.begin(), s.end()).size() == s.size());
                CHECK(seen.insert(g.orders()).second);
            }
        }
}

TEST_CASE("triple_dichotomy")
{
    CHECK(triple_dichotomy(P({"abc", "bac", "bca", "cba"})) == GeodesicKind::NeverBottom);
    CHECK(triple_dichotomy(P({"abc", "acb", "cab", "cba"})) == GeodesicKind::NeverTop);
    CHECK(triple_dichotomy(P({"cab", "acb", "abc", "bac"})) == GeodesicKind::NeverBottom);
    CHECK(kind_of([] { triple_dichotomy(P({"abc", "bac"})); }) == ErrorKind::Precondition);
}

TEST_CASE("commute_adjacent_disjoint")
{
    CHECK(commute_adjacent_disjoint(walk_a(), 2) == walk_b());
    CHECK(commute_adjacent_disjoint(walk_b(), 2) == walk_a());
    CHECK(kind_of([] { commute_adjacent_disjoint(P({"abc", "bac", "bca"}), 0); }) == ErrorKind::Precondition);
    CHECK(kind_of([] { commute_adjacent_disjoint(walk_a(), 4); }) == ErrorKind::Index);
    SwitchSeq s = switch_seq(walk_a());
    CHECK(commute_adjacent_disjoint(s, 2) == switch_seq(walk_b()));
}

TEST_CASE("paths_equivalent")
{
    CHECK(paths_equivalent(walk_a(), walk_b()));
    CHECK_FALSE(paths_equivalent(P({"abc", "bac", "bca", "cba"}), P({"abc", "acb", "cab", "cba"})));
    CHECK(paths_equivalent(walk_a(), walk_a()));
    CHECK_FALSE(paths_equivalent(P({"abc", "bac"}), P({"abc", "acb"})));
    CHECK_FALSE(paths_equivalent(P({"ab", "ba"}), P({"ab"})));
}

TEST_CASE("index_of and precedes")
{
    SwitchSeq s = switch_seq(walk_a());
    CHECK(index_of(s, SP('b', 'd')) == 4u);
    CHECK_FALSE(index_of(s, SP('c', 'd')));
    CHECK(precedes(s, SP('a', 'b'), SP('b', 'c')));
    CHECK_FALSE(precedes(s, SP('b', 'c'), SP('a', 'b')));
    CHECK_FALSE(precedes(s, SP('a', 'b'), SP('c', 'd')));
}

TEST_CASE("ordered-pair rules on every geodesic of a triple")
{
    auto tally = check_triple_rules();
    CHECK(tally.geodesics > 0);
    CHECK(tally.instances > 0);
    CHECK(tally.violations.empty());
}

TEST_CASE("quadruple rules on every geodesic of a 4-set")
{
    auto tally = check_quadruple_rules();
    CHECK(tally.instances > 0);
    CHECK(tally.violations.empty());
}

TEST_CASE("pair occurrence counts survive restriction to a triple")
{
    // Includes non-geodesic paths; the count of (a,b) is seen by every third letter.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LinearOrder> v{O("abcde")};
        int len = int(uniform_below(rng, 14));
        for (int k = 0; k < len; ++k)
            v.push_back(apply_swap(v.back(), int(uniform_below(rng, 4))));
        Path p(v);
        auto s = switch_seq(p).swaps;
        for (Alt x = 0; x < 5; ++x)
            for (Alt y = Alt(x + 1); y < 5; ++y)
                for (Alt c = 0; c < 5; ++c) {
                    if (c == x || c == y)
                        continue;
                    auto rs = restrict_seq(switch_seq(p), AltSet((1u << x) | (1u << y) | (1u << c))).swaps;
                    SwitchingPair q(x, y);
                    CHECK(std::count(s.begin(), s.end(), q) == std::count(rs.begin(), rs.end(), q));
                }
    }
}

TEST_CASE("equivalence agrees with commutation closure")
{
    std::mt19937_64 rng(5);
    auto all = all_orders(full_set(5));
    int equal = 0, differ = 0;
    for (int trial = 0; trial < 200; ++trial) {
        LinearOrder r = all[uniform_below(rng, all.size())], t = all[uniform_below(rng, all.size())];
        if (kendall_distance(r, t) > 9)
            continue;
        Path a = random_geodesic(r, t, rng), b = random_geodesic(r, t, rng);
        bool fast = paths_equivalent(a, b);
        CHECK(fast == commutation_equivalent(switch_seq(a), switch_seq(b)));
        (fast ? equal : differ)++;
    }
    CHECK(equal > 0);
    CHECK(differ > 0);
}

TEST_CASE("splicing an equivalent piece keeps an equivalent geodesic")
{
    std::mt19937_64 rng(17);
    auto all = all_orders(full_set(5));
    for (int trial = 0; trial < 200; ++trial) {
        LinearOrder r = all[uniform_below(rng, all.size())], t = all[uniform_below(rng, all.size())];
        Path a = random_geodesic(r, t, rng);
        if (a.length() < 3)
            continue;
        std::size_t i = uniform_below(rng, a.length()), j = uniform_below(rng, a.length());
        if (i > j)
            std::swap(i, j);
        Path piece = random_geodesic(a[i], a[j], rng);
        std::vector<LinearOrder> v(a.orders().begin(), a.orders().begin() + std::ptrdiff_t(i));
        v.insert(v.end(), piece.orders().begin(), piece.orders().end());
        v.insert(v.end(), a.orders().begin() + std::ptrdiff_t(j) + 1, a.orders().end());
        Path spliced(v);
        CHECK(is_geodesic(spliced));
        Path sub(std::vector<LinearOrder>(a.orders().begin() + std::ptrdiff_t(i), a.orders().begin() + std::ptrdiff_t(j) + 1));
        CHECK(paths_equivalent(spliced, a) == paths_equivalent(piece, sub));
    }
}

TEST_CASE("equivalent geodesics carry the same never-conditions")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        Domain d = random_peak_pit_domain(5, rng(), 2 + uniform_below(rng, 10));
        const auto& o = d.orders();
        LinearOrder r = o[uniform_below(rng, o.size())], t = o[uniform_below(rng, o.size())];
        auto valid = valid_geodesics(d, r, t);
        for (const auto& a : valid) {
            Domain da = domain_with_path(d, a);
            SwitchSeq s = switch_seq(a);
            for (std::size_t i = 0; i + 1 < s.swaps.size(); ++i) {
                if (!s.swaps[i].disjoint(s.swaps[i + 1]))
                    continue;
                Path b = commute_adjacent_disjoint(a, i);
                CHECK(classify(domain_with_path(d, b)).conditions == classify(da).conditions);
            }
        }
    }
}

}
