#include "cdom/paths.hpp"
#include "cdom/domains.hpp"

#include <algorithm>
#include <set>

namespace cdom {

Path::Path(std::vector<LinearOrder> orders) : orders_(std::move(orders))
{
    if (orders_.empty())
        throw Error(ErrorKind::MalformedSequence, "a path needs at least one order");
    for (std::size_t i = 0; i + 1 < orders_.size(); ++i)
        if (!alike(orders_[i], orders_[i + 1]))
            throw Error(ErrorKind::MalformedSequence,
                        "orders " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not alike");
}

SwitchSeq switch_seq(const Path& p)
{
    SwitchSeq s{p.front(), {}};
    s.swaps.reserve(p.num_swaps());
    for (std::size_t i = 0; i + 1 < p.length(); ++i)
        s.swaps.push_back(*alike(p[i], p[i + 1]));
    return s;
}

Path path_from_seq(const SwitchSeq& s)
{
    std::vector<LinearOrder> out{s.start};
    out.reserve(s.swaps.size() + 1);
    for (std::size_t i = 0; i < s.swaps.size(); ++i) {
        try {
            out.push_back(swap_pair(out.back(), s.swaps[i]));
        } catch (const Error&) {
            throw Error(ErrorKind::MalformedSequence, "swap " + std::to_string(i) + " is not adjacent at its turn");
        }
    }
    return Path(std::move(out));
}

LinearOrder seq_end(const SwitchSeq& s) { return path_from_seq(s).back(); }

bool is_geodesic(const Path& p)
{
    auto s = switch_seq(p);
    std::set<SwitchingPair> seen(s.swaps.begin(), s.swaps.end());
    return seen.size() == s.swaps.size();
}

Path restrict_path(const Path& p, AltSet b)
{
    std::vector<LinearOrder> out;
    for (const auto& r : p.orders()) {
        auto x = restrict_order(r, b);
        if (out.empty() || !(out.back() == x))
            out.push_back(x);
    }
    return Path(std::move(out));
}

SwitchSeq restrict_seq(const SwitchSeq& s, AltSet b)
{
    SwitchSeq out{restrict_order(s.start, b), {}};
    for (const auto& p : s.swaps)
        if (has(b, p.lo) && has(b, p.hi))
            out.swaps.push_back(p);
    return out;
}

Path concat_geodesics(const Path& a, const Path& b)
{
    if (!(a.back() == b.front()))
        throw Error(ErrorKind::Precondition, "geodesics do not meet at a common order");
    if (!is_geodesic(a) || !is_geodesic(b))
        throw Error(ErrorKind::Precondition, "both parts must be geodesics");
    auto sa = switch_seq(a), sb = switch_seq(b);
    std::set<SwitchingPair> pa(sa.swaps.begin(), sa.swaps.end());
    for (const auto& p : sb.swaps)
        if (pa.count(p))
            throw Error(ErrorKind::Precondition, "geodesics share a switching pair");
    std::vector<LinearOrder> out = a.orders();
    out.insert(out.end(), b.orders().begin() + 1, b.orders().end());
    return Path(std::move(out));
}

namespace {

struct GeodesicSearch {
    const LinearOrder& target;
    const Domain* within;
    const std::function<bool(const Path&)>& visit;
    std::vector<LinearOrder> stack;

    bool run()
    {
        const LinearOrder u = stack.back();
        if (u == target)
            return visit(Path(stack));
        for (int i = 0; i + 1 < u.size(); ++i) {
            if (!target.prefers(u.at(i + 1), u.at(i)))
                continue;
            LinearOrder v = apply_swap(u, i);
            if (within && !within->contains(v))
                continue;
            stack.push_back(v);
            bool more = run();
            stack.pop_back();
            if (!more)
                return false;
        }
        return true;
    }
};

} // namespace

void enumerate_geodesics(const LinearOrder& r, const LinearOrder& t, const Domain* within,
                         const std::function<bool(const Path&)>& visit)
{
    if (r.universe() != t.universe())
        throw Error(ErrorKind::InvalidPair, "endpoints are over different universes");
    if (within && (!within->contains(r) || !within->contains(t)))
        throw Error(ErrorKind::Precondition, "endpoints must belong to the domain");
    GeodesicSearch search{t, within, visit, {r}};
    search.run();
}

std::vector<Path> all_geodesics(const LinearOrder& r, const LinearOrder& t, const Domain* within,
                                std::size_t limit)
{
    std::vector<Path> out;
    if (limit == 0)
        return out;
    enumerate_geodesics(r, t, within, [&](const Path& p) {
        out.push_back(p);
        return out.size() < limit;
    });
    return out;
}

GeodesicKind triple_dichotomy(const Path& g)
{
    if (set_size(g.universe()) != 3 || !(g.back() == reversed(g.front())))
        throw Error(ErrorKind::Precondition, "dichotomy needs a full reversal on three alternatives");
    if (!is_geodesic(g))
        throw Error(ErrorKind::Precondition, "dichotomy needs a geodesic");
    const LinearOrder& r = g.front();
    Alt y = r.at(1);
    auto s = switch_seq(g);
    bool bottom_first = s.swaps.front() == SwitchingPair(r.at(0), r.at(1));
    Domain k(g.orders());
    auto tri = triples_of(k.universe()).front();
    ConditionMask bits = satisfied_conditions(triple_mask(k, tri));
    int expect = bottom_first ? 3 : 1;
    if (bits != ConditionMask(1u << condition_bit(NeverCondition{tri, y, expect})))
        throw Error(ErrorKind::ConstructionBug, "reversal geodesic on a triple did not satisfy a unique peak-pit condition");
    return bottom_first ? GeodesicKind::NeverBottom : GeodesicKind::NeverTop;
}

SwitchSeq commute_adjacent_disjoint(const SwitchSeq& s, std::size_t i)
{
    if (i + 1 >= s.swaps.size())
        throw Error(ErrorKind::Index, "no adjacent switching pairs at " + std::to_string(i));
    if (!s.swaps[i].disjoint(s.swaps[i + 1]))
        throw Error(ErrorKind::Precondition, "switching pairs at " + std::to_string(i) + " are not disjoint");
    SwitchSeq out = s;
    std::swap(out.swaps[i], out.swaps[i + 1]);
    return out;
}

Path commute_adjacent_disjoint(const Path& p, std::size_t i)
{
    return path_from_seq(commute_adjacent_disjoint(switch_seq(p), i));
}

bool paths_equivalent(const Path& a, const Path& b)
{
    if (a.universe() != b.universe() || !(a.front() == b.front()) || !(a.back() == b.back()))
        return false;
    if (set_size(a.universe()) < 3)
        return a == b;
    for (const auto& t : triples_of(a.universe())) {
        AltSet s = set_of({t[0], t[1], t[2]});
        if (!(restrict_path(a, s) == restrict_path(b, s)))
            return false;
    }
    return true;
}

std::optional<std::size_t> index_of(const SwitchSeq& s, SwitchingPair p)
{
    auto it = std::find(s.swaps.begin(), s.swaps.end(), p);
    if (it == s.swaps.end())
        return std::nullopt;
    return std::size_t(it - s.swaps.begin());
}

bool precedes(const SwitchSeq& s, SwitchingPair p, SwitchingPair q)
{
    auto i = index_of(s, p), j = index_of(s, q);
    return i && j && *i < *j;
}

} // namespace cdom
