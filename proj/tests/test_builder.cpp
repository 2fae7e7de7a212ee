#include "checks.hpp"
#include "support.hpp"

#include "cdom/builder.hpp"
#include "cdom/enumerate.hpp"

#include <doctest.h>

#include <set>

using namespace cdom;
using namespace cdom::test;

namespace {

const Domain d3t = D({"abc", "acb", "cab", "cba"});

Path descent(const LinearOrder& r, const LinearOrder& t, std::mt19937_64& rng)
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

// Every valid geodesic on B \ z fed into one induction step.
struct StepStats {
    std::size_t states = 0, case1 = 0, moved_a2 = 0, moved_a3 = 0, moved_a4 = 0;
};

void exercise_state(const Domain& d, const LinearOrder& r, const LinearOrder& t, StepStats& st, LemmaTally* lemmas)
{
    BuilderState s = make_state(d, r, t, d.universe());
    AltSet rest = AltSet(s.B & ~(1u << s.z));
    Domain sub = restrict_domain(s.base, rest);
    for (const auto& g : valid_geodesics(sub, restrict_order(r, rest), restrict_order(t, rest))) {
        BuilderState v = s;
        v.current = switch_seq(g);
        ++st.states;
        REQUIRE(satisfies_a1(v));
        if (lemmas)
            check_step_lemmas(v.base, v.R, v.T, v.z, v.current, *lemmas);
        SwitchSeq out = extend_step(v);
        Path p = path_from_seq(out);
        CHECK(is_geodesic(p));
        CHECK(p.back() == v.T);
        CHECK(is_peak_pit(domain_with_path(v.base, p)));
        if (!first_cnt_index(v)) {
            ++st.case1;
            continue;
        }
        BuilderState a2 = normalize_a2(v);
        CHECK(satisfies_a2(a2));
        CHECK(satisfies_a1(a2));
        CHECK(paths_equivalent(path_from_seq(a2.current), g));
        st.moved_a2 += !(a2.current == v.current);
        CHECK(normalize_a2(a2).current == a2.current);
        BuilderState a3 = normalize_a3(a2);
        CHECK(satisfies_a3(a3));
        CHECK(paths_equivalent(path_from_seq(a3.current), g));
        st.moved_a3 += !(a3.current == a2.current);
        BuilderState a4 = normalize_a4(a3);
        CHECK(satisfies_a4(a4));
        CHECK(satisfies_a1(a4));
        CHECK(paths_equivalent(path_from_seq(a4.current), g));
        st.moved_a4 += !(a4.current == a3.current);
        CHECK(normalize_a4(a4).current == a4.current);
    }
}

}

TEST_SUITE("builder") {

TEST_CASE("swap closure of a wiring example")
{
    Alphabet a({"a", "b", "d", "e", "h", "w"});
    SwitchSeq g{a.parse_order("habwde"), a.parse_swaps("(d,e),(a,b),(h,b),(h,a),(h,w),(h,e)")};
    SwapClosure cl = swap_closure(g, a.id("w"));
    CHECK(cl.H == std::vector<Alt>{a.id("h")});
    CHECK(cl.K1 == a.parse_swaps("(a,b),(h,b),(h,a),(h,w)"));
    CHECK(cl.K2 == a.parse_swaps("(d,e),(h,e)"));

    // Starting at (h,b) drops (a,b).
    CHECK(swap_closure(g, a.id("w"), 2).K1 == a.parse_swaps("(h,b),(h,a),(h,w)"));
    CHECK(kind_of([&] { swap_closure(g, a.id("w"), 5); }) == ErrorKind::EmptySwapSet);
    CHECK(kind_of([&] { swap_closure(g, a.id("d"), 1); }) == ErrorKind::EmptySwapSet);
}

TEST_CASE("a single swap is its own closure")
{
    SwitchSeq g{O("abc"), swaps("(a,b)")};
    auto cl = swap_closure(g, A('b'));
    CHECK(cl.K1 == swaps("(a,b)"));
    CHECK(cl.K2.empty());
}

TEST_CASE("closure pairs never follow a touching pair outside the closure")
{
    // swap_closure throws ConstructionBug if they do.
    std::mt19937_64 rng(61);
    auto all = all_orders(full_set(6));
    std::size_t closures = 0;
    for (int trial = 0; trial < 300; ++trial) {
        LinearOrder r = all[uniform_below(rng, all.size())], t = all[uniform_below(rng, all.size())];
        SwitchSeq g = switch_seq(descent(r, t, rng));
        for (std::size_t from = 0; from < g.swaps.size(); ++from)
            for (Alt w = 0; w < 6; ++w) {
                bool swaps_w = std::any_of(g.swaps.begin() + std::ptrdiff_t(from), g.swaps.end(),
                                           [&](SwitchingPair p) { return p.involves(w); });
                if (!swaps_w)
                    continue;
                SwapClosure cl;
                CHECK_NOTHROW(cl = swap_closure(g, w, from));
                ++closures;
                CHECK(cl.K1.size() + cl.K2.size() == g.swaps.size() - from);
                for (Alt h : cl.H)
                    CHECK(std::find(cl.K1.begin(), cl.K1.end(), SwitchingPair(h, w)) != cl.K1.end());
            }
    }
    CHECK(closures > 1000);
}

TEST_CASE("build_geodesic on three alternatives")
{
    Path g = build_geodesic(d3t, O("abc"), O("cba"), S("abc"));
    CHECK(g == P({"abc", "acb", "cab", "cba"}));
    CHECK(build_geodesic(d3t, O("acb"), O("acb"), S("abc")) == P({"acb"}));
}

TEST_CASE("equal restricted endpoints give a single order")
{
    Domain d = D({"abcd", "abdc"});
    CHECK(build_geodesic(d, O("abcd"), O("abdc"), S("abc")) == P({"abc"}));
}

TEST_CASE("build_geodesic preconditions")
{
    Domain d = D({"abcd", "dcba"});
    CHECK(kind_of([&] { build_geodesic(d, O("abcd"), O("dcba"), S("ab")); }) == ErrorKind::InvalidSubset);
    CHECK(kind_of([&] { build_geodesic(d, O("abcd"), O("dcba"), S("abe")); }) == ErrorKind::InvalidSubset);
    CHECK(kind_of([&] { build_geodesic(d, O("abcd"), O("bacd"), S("abcd")); }) == ErrorKind::Precondition);
    Domain disconnected = D({"abc", "bac", "cab", "cba"});
    CHECK(kind_of([&] { build_geodesic(disconnected, O("abc"), O("cba"), S("abc")); }) == ErrorKind::Precondition);
    CHECK(kind_of([&] { make_state(d, O("abcd"), O("dcba"), S("abc")); }) == ErrorKind::Precondition);
}

TEST_CASE("trace stages")
{
    Domain d = D({"abcd", "dcba"});
    std::vector<TraceLine> lines;
    BuildOptions bo;
    bo.trace = &lines;
    Path g = build_geodesic(d, O("abcd"), O("dcba"), S("abcd"), bo);
    CHECK(g.length() == 7);
    REQUIRE(lines.size() >= 3);
    CHECK(lines.front().stage == "base");
    CHECK(lines.front().B == S("abc"));
    CHECK(lines[1].stage == "recurse");
    std::set<std::string> known{"base", "recurse", "case1", "a2", "a3", "a4", "insert"};
    for (const auto& l : lines)
        CHECK(known.count(l.stage));
    CHECK((lines.back().stage == "case1" || lines.back().stage == "insert"));
    CHECK(path_from_seq(lines.back().seq) == g);
}

TEST_CASE("move_swap_left")
{
    SwitchSeq s{O("abcd"), swaps("(a,b),(a,c),(b,c),(a,d),(b,d)")};
    CHECK(move_swap_left(s, 3, 2).swaps == swaps("(a,b),(a,c),(a,d),(b,c),(b,d)"));
    CHECK(kind_of([&] { move_swap_left(s, 2, 0); }) == ErrorKind::Precondition);
    CHECK(kind_of([&] { move_swap_left(s, 1, 3); }) == ErrorKind::Index);
}

TEST_CASE("every valid sub-geodesic extends, normalizations are fixpoints and equivalences")
{
    StepStats st;
    const auto domains = all_peak_pit_domains_4();
    for (const auto& d : domains) {
        for (const auto& r : d)
            for (const auto& t : d)
                if (!(r == t))
                    exercise_state(d, r, t, st, nullptr);
    }
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 600; ++trial) {
        Domain d = random_peak_pit_domain(trial % 3 == 2 ? 6 : 5, rng(), 2 + uniform_below(rng, 19));
        const auto& o = d.orders();
        exercise_state(d, o[uniform_below(rng, o.size())], o[uniform_below(rng, o.size())], st, nullptr);
    }
    MESSAGE("states " << st.states << " case1 " << st.case1 << " a2 moved " << st.moved_a2 << " a3 moved "
                      << st.moved_a3 << " a4 moved " << st.moved_a4);
    CHECK(st.states > 1000);
    CHECK(st.case1 > 0);
    CHECK(st.moved_a2 > 0);
    CHECK(st.moved_a3 > 0);
    CHECK(st.moved_a4 > 0);
}

TEST_CASE("step lemmas on every peak-pit domain of four alternatives")
{
    LemmaTally tally;
    StepStats st;
    for (const auto& d : all_peak_pit_domains_4())
        for (const auto& r : d)
            for (const auto& t : d)
                if (!(r == t))
                    exercise_state(d, r, t, st, &tally);
    for (int k = 0; k < kRuleCount; ++k) {
        INFO(rule_name(k));
        MESSAGE(std::string(rule_name(k)) << " hits " << tally.hits[k]);
        CHECK(tally.violations[k] == 0);
    }
    for (const auto& n : tally.notes)
        MESSAGE(n);
    CHECK(tally.hits[PairAbvz] > 0);
    CHECK(tally.hits[ClosureAbz] > 0);
    CHECK(tally.hits[Fgsz] > 0);
    CHECK(tally.hits[Fguz] > 0);
    CHECK(tally.hits[Sfgz] > 0);
    CHECK(tally.hits[FsgzA] > 0);
    CHECK(tally.hits[FsgzB] > 0);
}

TEST_CASE("step lemmas on states reached by the builder at five and six alternatives")
{
    LemmaTally tally;
    StepStats st;
    std::mt19937_64 rng(71);
    BuildOptions bo;
    bo.on_state = [&](const BuilderState& s) { check_step_lemmas(s.base, s.R, s.T, s.z, s.current, tally); };
    for (int trial = 0; trial < 200; ++trial) {
        int n = trial % 4 == 3 ? 6 : 5;
        Domain d = random_peak_pit_domain(n, rng(), 2 + uniform_below(rng, 19));
        const auto& o = d.orders();
        LinearOrder r = o[uniform_below(rng, o.size())], t = o[uniform_below(rng, o.size())];
        build_geodesic(d, r, t, d.universe(), bo);
        if (n == 5)
            exercise_state(d, r, t, st, &tally);
    }
    for (int k = 0; k < kRuleCount; ++k) {
        INFO(rule_name(k));
        MESSAGE(std::string(rule_name(k)) << " hits " << tally.hits[k]);
        CHECK(tally.violations[k] == 0);
    }
    for (std::size_t i = 0; i < std::min<std::size_t>(tally.notes.size(), 10); ++i)
        MESSAGE(tally.notes[i]);
    std::size_t total = 0;
    for (auto h : tally.hits)
        total += h;
    CHECK(total > 0);
}

TEST_CASE("step lemmas at five alternatives, endpoints that reverse the top three")
{
    // T ranks z above r3 > r2 > r1: the only pairs where every rule can match.
    LemmaTally tally;
    std::mt19937_64 rng(1);
    std::size_t states = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        Domain d = random_peak_pit_domain(5, rng(), 2 + uniform_below(rng, 19));
        for (const auto& r : d)
            for (const auto& t : d) {
                Alt z = r.at(4);
                if (!(t.prefers(z, r.at(2)) && t.prefers(r.at(2), r.at(1)) && t.prefers(r.at(1), r.at(0))))
                    continue;
                AltSet rest = AltSet(d.universe() & ~(1u << z));
                Domain sub = restrict_domain(d, rest);
                for (const auto& g : valid_geodesics(sub, restrict_order(r, rest), restrict_order(t, rest))) {
                    ++states;
                    check_step_lemmas(d, r, t, z, switch_seq(g), tally);
                }
            }
    }
    for (int k = 0; k < kRuleCount; ++k) {
        INFO(rule_name(k));
        MESSAGE(std::string(rule_name(k)) << " hits " << tally.hits[k]);
        CHECK(tally.violations[k] == 0);
        CHECK(tally.hits[k] > 0);
    }
    CHECK(states > 1000);
}

TEST_CASE("builder output on random domains")
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + int(uniform_below(rng, 3));
        Domain d = random_peak_pit_domain(n, rng(), 2 + uniform_below(rng, 19));
        const auto& o = d.orders();
        LinearOrder r = o[uniform_below(rng, o.size())], t = o[uniform_below(rng, o.size())];
        AltSet b = 0;
        while (set_size(b) < 3)
            b = AltSet(uniform_below(rng, 1u << n));
        Path g = build_geodesic(d, r, t, b);
        CHECK(is_geodesic(g));
        CHECK(g.front() == restrict_order(r, b));
        CHECK(g.back() == restrict_order(t, b));
        CHECK(is_peak_pit(domain_with_path(restrict_domain(d, b), g)));
    }
}

}
