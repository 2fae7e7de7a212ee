#pragma once

#include "cdom/io.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cdom::test {

// Letters a..p name ids 0..15 in every test.
inline const Alphabet& letters()
{
    static const Alphabet a = Alphabet::standard(kMaxAlternatives);
    return a;
}

inline LinearOrder O(std::string_view s) { return letters().parse_order(s); }
inline AltSet S(std::string_view s) { return letters().parse_subset(s); }
inline SwitchingPair SP(char a, char b) { return SwitchingPair(Alt(a - 'a'), Alt(b - 'a')); }
inline Alt A(char c) { return Alt(c - 'a'); }

inline Domain D(std::initializer_list<const char*> orders)
{
    std::vector<LinearOrder> v;
    for (auto o : orders)
        v.push_back(O(o));
    return Domain(std::move(v));
}

inline Path P(std::initializer_list<const char*> orders)
{
    std::vector<LinearOrder> v;
    for (auto o : orders)
        v.push_back(O(o));
    return Path(std::move(v));
}

inline std::vector<SwitchingPair> swaps(std::string_view text) { return letters().parse_swaps(text); }

inline std::string str(const LinearOrder& r) { return letters().format(r); }
inline std::string str(const Path& p) { return letters().format(p); }
inline std::string str(const SwitchSeq& s) { return letters().format(s); }
inline std::string str(const Domain& d) { return format_domain_inline(d, letters()); }

template <class F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected a cdom::Error");
}

// Condition xN_{t}k as a mask bit for the triple containing x.
inline ConditionMask bit(const char* triple, char x, int k)
{
    Triple t{A(triple[0]), A(triple[1]), A(triple[2])};
    std::sort(t.begin(), t.end());
    return ConditionMask(1u << condition_bit(NeverCondition{t, A(x), k}));
}

inline ConditionMask np_mask(const Domain& d, const char* triple)
{
    Triple t{A(triple[0]), A(triple[1]), A(triple[2])};
    std::sort(t.begin(), t.end());
    return ConditionMask(satisfied_conditions(triple_mask(d, t)) & kPeakPitConditions);
}

} // namespace cdom::test
