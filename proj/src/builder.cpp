#include "cdom/builder.hpp"

#include <algorithm>
#include <set>

namespace cdom {

namespace {

[[noreturn]] void bug(const BuilderState& s, const std::string& what)
{
    std::string msg = what + " [B=";
    for (Alt a : members(s.B))
        msg += char('a' + a);
    msg += " z=" + std::string(1, char('a' + s.z)) + " swaps=";
    for (const auto& p : s.current.swaps)
        msg += "(" + std::string(1, char('a' + p.lo)) + "," + std::string(1, char('a' + p.hi)) + ")";
    msg += "]";
    throw Error(ErrorKind::ConstructionBug, msg);
}

bool contains_pair(const std::vector<SwitchingPair>& v, SwitchingPair p)
{
    return std::find(v.begin(), v.end(), p) != v.end();
}

void record(const BuildOptions& opts, AltSet b, const char* stage, const SwitchSeq& seq)
{
    if (opts.trace)
        opts.trace->push_back(TraceLine{b, stage, seq});
}

// Wraps a commutation so that a rejected move surfaces as a construction bug.
SwitchSeq checked_move(const BuilderState& s, const SwitchSeq& seq, std::size_t from, std::size_t to)
{
    try {
        return move_swap_left(seq, from, to);
    } catch (const Error& e) {
        bug(s, std::string("commutation failed: ") + e.what());
    }
}

} // namespace

SwapClosure swap_closure(const SwitchSeq& g, Alt w, std::size_t from)
{
    const auto& sw = g.swaps;
    SwapClosure out;
    out.w = w;
    std::vector<std::size_t> hw_pos(kMaxAlternatives, sw.size());
    for (std::size_t i = from; i < sw.size(); ++i)
        if (sw[i].involves(w)) {
            Alt h = sw[i].lo == w ? sw[i].hi : sw[i].lo;
            out.H.push_back(h);
            hw_pos[h] = i;
        }
    if (out.H.empty())
        throw Error(ErrorKind::EmptySwapSet, "alternative never swaps in the examined suffix");
    std::sort(out.H.begin(), out.H.end());

    std::vector<char> in_k1(sw.size(), 0);
    for (std::size_t p = from; p < sw.size(); ++p) {
        for (Alt h : out.H) {
            // Some (h,u) at q with p <= q <= pos(h,w) touching sw[p].
            for (std::size_t q = p; q <= hw_pos[h] && !in_k1[p]; ++q)
                if (sw[q].involves(h) && !sw[q].disjoint(sw[p]))
                    in_k1[p] = 1;
            if (in_k1[p])
                break;
        }
    }
    for (std::size_t p = from; p < sw.size(); ++p)
        (in_k1[p] ? out.K1 : out.K2).push_back(sw[p]);

    for (std::size_t p = from; p < sw.size(); ++p) {
        if (!in_k1[p])
            continue;
        for (std::size_t q = from; q < p; ++q)
            if (!in_k1[q] && !sw[q].disjoint(sw[p]))
                throw Error(ErrorKind::ConstructionBug, "a closure pair meets an earlier pair outside the closure");
    }
    return out;
}

SwitchSeq move_swap_left(const SwitchSeq& s, std::size_t from, std::size_t to)
{
    if (from >= s.swaps.size() || to > from)
        throw Error(ErrorKind::Index, "bad move range");
    SwitchSeq out = s;
    for (std::size_t k = from; k > to; --k)
        out = commute_adjacent_disjoint(out, k - 1);
    return out;
}

bool in_C(const BuilderState& s, SwitchingPair p) { return contains_pair(s.C, p); }
bool in_C_NT(const BuilderState& s, SwitchingPair p) { return contains_pair(s.C_NT, p); }

std::optional<std::size_t> first_cnt_index(const BuilderState& s)
{
    for (std::size_t i = 0; i < s.current.swaps.size(); ++i)
        if (in_C_NT(s, s.current.swaps[i]))
            return i;
    return std::nullopt;
}

bool satisfies_a1(const BuilderState& s)
{
    AltSet rest = AltSet(s.B & ~(1u << s.z));
    Domain d = domain_with_path(restrict_domain(s.base, rest), path_from_seq(s.current));
    return is_peak_pit(d);
}

bool satisfies_a2(const BuilderState& s)
{
    auto j = first_cnt_index(s);
    if (!j)
        return false;
    Path p = path_from_seq(s.current);
    const LinearOrder& l = p[*j];
    std::size_t q = s.tail.size();
    AltSet last = 0, want = 0;
    for (std::size_t i = 0; i < q; ++i)
        last |= AltSet(1u << l.at(int(l.size() - 1 - i)));
    for (Alt t : s.tail)
        want |= AltSet(1u << t);
    return last == want;
}

bool satisfies_a3(const BuilderState& s)
{
    auto j = first_cnt_index(s);
    if (!j)
        return false;
    for (std::size_t k = *j + 1; k < s.current.swaps.size(); ++k)
        if (!in_C(s, s.current.swaps[k]))
            return false;
    return true;
}

bool satisfies_a4(const BuilderState& s)
{
    auto j = first_cnt_index(s);
    if (!j)
        return false;
    const auto& sw = s.current.swaps;
    for (std::size_t k = *j + 1; k < sw.size(); ++k) {
        if (in_C_NT(s, sw[k]))
            continue;
        bool touches = false;
        for (std::size_t l = *j; l < k && !touches; ++l)
            touches = !sw[l].disjoint(sw[k]);
        if (!touches)
            return false;
    }
    return true;
}

BuilderState normalize_a2(const BuilderState& s)
{
    auto j = first_cnt_index(s);
    if (!j)
        throw Error(ErrorKind::Precondition, "normalization needs a pair of C_NT in the geodesic");
    if (satisfies_a2(s))
        return s;
    int zpos = s.T.position(s.z);
    if (zpos == 0)
        bug(s, "tail covers every alternative but the tail condition fails");
    Alt w = s.T.at(zpos - 1);
    SwapClosure cl;
    try {
        cl = swap_closure(s.current, w, *j);
    } catch (const Error& e) {
        bug(s, std::string("swap closure: ") + e.what());
    }
    SwitchingPair de = s.current.swaps[*j];
    if (contains_pair(cl.K1, de))
        bug(s, "first C_NT pair fell into the swap closure");
    for (const auto& p : cl.K1)
        if (in_C_NT(s, p))
            bug(s, "swap closure contains a C_NT pair");

    BuilderState out = s;
    std::size_t target = *j;
    for (const auto& p : cl.K1) {
        std::size_t at = *index_of(out.current, p);
        out.current = checked_move(s, out.current, at, target);
        ++target;
    }
    if (!satisfies_a2(out))
        bug(out, "tail condition still fails after moving the swap closure");
    return out;
}

BuilderState normalize_a3(const BuilderState& s)
{
    if (!satisfies_a2(s))
        throw Error(ErrorKind::Precondition, "A3 normalization needs the tail condition");
    BuilderState out = s;
    std::size_t target = *first_cnt_index(s);
    for (std::size_t k = target + 1; k < out.current.swaps.size(); ++k)
        if (!in_C(out, out.current.swaps[k])) {
            out.current = checked_move(s, out.current, k, target);
            ++target;
        }
    if (!satisfies_a2(out) || !satisfies_a3(out))
        bug(out, "A3 normalization broke an invariant");
    return out;
}

BuilderState normalize_a4(const BuilderState& s)
{
    if (!satisfies_a2(s) || !satisfies_a3(s))
        throw Error(ErrorKind::Precondition, "A4 normalization needs A2 and A3");
    const std::size_t j = *first_cnt_index(s);
    const auto& sw = s.current.swaps;
    std::vector<std::size_t> moved;      // offsets m in M, ascending
    std::vector<std::size_t> kept{0};    // offsets not in M, including (d,e)
    for (std::size_t m = 1; j + m < sw.size(); ++m) {
        const auto& p = sw[j + m];
        bool ok = !in_C_NT(s, p);
        for (std::size_t l : kept)
            ok = ok && p.disjoint(sw[j + l]);
        (ok ? moved : kept).push_back(m);
    }
    BuilderState out = s;
    std::size_t target = j;
    for (std::size_t m : moved) {
        out.current = checked_move(s, out.current, j + m, target);
        ++target;
    }
    if (!satisfies_a2(out) || !satisfies_a3(out) || !satisfies_a4(out))
        bug(out, "A4 normalization broke an invariant");
    return out;
}

namespace {

SwitchSeq build_rec(const Domain& d, const LinearOrder& r, const LinearOrder& t, AltSet b,
                    const BuildOptions& opts);

} // namespace

SwitchSeq extend_step(const BuilderState& s0, const BuildOptions& opts)
{
    if (opts.on_state)
        opts.on_state(s0);
    SwitchSeq result{s0.R, {}};
    auto j = first_cnt_index(s0);
    if (!j) {
        result.swaps = s0.current.swaps;
        for (auto it = s0.tail.rbegin(); it != s0.tail.rend(); ++it)
            result.swaps.emplace_back(*it, s0.z);
        record(opts, s0.B, "case1", result);
    } else {
        BuilderState s = normalize_a2(s0);
        record(opts, s.B, "a2", s.current);
        s = normalize_a3(s);
        record(opts, s.B, "a3", s.current);
        s = normalize_a4(s);
        record(opts, s.B, "a4", s.current);
        std::size_t at = *first_cnt_index(s);
        Path p = path_from_seq(s.current);
        const LinearOrder& l = p[at];
        const auto& sw = s.current.swaps;
        result.swaps.assign(sw.begin(), sw.begin() + std::ptrdiff_t(at));
        // t'_q first, t'_1 last: z climbs from the bottom of L.
        for (std::size_t i = 0; i < s.tail.size(); ++i)
            result.swaps.emplace_back(l.at(int(l.size() - 1 - i)), s.z);
        result.swaps.insert(result.swaps.end(), sw.begin() + std::ptrdiff_t(at), sw.end());
        record(opts, s.B, "insert", result);
    }
    Path out = [&] {
        try {
            return path_from_seq(result);
        } catch (const Error& e) {
            bug(s0, std::string("inserted swaps do not replay: ") + e.what());
        }
    }();
    if (!is_geodesic(out) || !(out.back() == s0.T))
        bug(s0, "result is not a geodesic between the restricted endpoints");
    if (!is_peak_pit(domain_with_path(s0.base, out)))
        bug(s0, "result breaks the peak-pit property");
    return result;
}

namespace {

SwitchSeq build_rec(const Domain& d, const LinearOrder& r, const LinearOrder& t, AltSet b,
                    const BuildOptions& opts)
{
    if (set_size(b) == 3) {
        Path g = extend_with_geodesic_triple(restrict_domain(d, b), restrict_order(r, b), restrict_order(t, b));
        auto s = switch_seq(g);
        record(opts, b, "base", s);
        return s;
    }
    return extend_step(make_state(d, r, t, b, opts), opts);
}

} // namespace

BuilderState make_state(const Domain& d, const LinearOrder& r, const LinearOrder& t, AltSet b,
                        const BuildOptions& opts)
{
    if (set_size(b) < 4)
        throw Error(ErrorKind::Precondition, "an induction step needs at least four alternatives");
    LinearOrder rb = restrict_order(r, b), tb = restrict_order(t, b);
    Alt z = rb.at(rb.size() - 1);
    BuilderState s{restrict_domain(d, b), rb, tb, b, z, {}, {}, {}, SwitchSeq{}};
    for (int i = tb.position(z) + 1; i < tb.size(); ++i)
        s.tail.push_back(tb.at(i));
    std::vector<Alt> by_r = s.tail;
    std::sort(by_r.begin(), by_r.end(), [&](Alt x, Alt y) { return rb.prefers(x, y); });
    for (std::size_t i = 0; i < by_r.size(); ++i)
        for (std::size_t k = i + 1; k < by_r.size(); ++k) {
            Alt a = by_r[i], c = by_r[k]; // a before c in R
            if (!tb.prefers(c, a))
                continue;
            SwitchingPair p(a, c);
            s.C.push_back(p);
            Triple tri{a, c, z};
            std::sort(tri.begin(), tri.end());
            ConditionMask np = satisfied_conditions(triple_mask(s.base, tri)) & kPeakPitConditions;
            if (np == ConditionMask(1u << condition_bit(NeverCondition{tri, c, 1})))
                s.C_NT.push_back(p);
        }
    AltSet rest = AltSet(b & ~(1u << z));
    s.current = build_rec(d, r, t, rest, opts);
    record(opts, rest, "recurse", s.current);
    return s;
}

Path build_geodesic(const Domain& d, const LinearOrder& r, const LinearOrder& t, AltSet b,
                    const BuildOptions& opts)
{
    if (set_size(b) < 3 || (b & ~d.universe()) != 0)
        throw Error(ErrorKind::InvalidSubset, "subset must have at least three alternatives of the universe");
    if (!d.contains(r) || !d.contains(t))
        throw Error(ErrorKind::Precondition, "endpoints must belong to the domain");
    if (!is_peak_pit(d))
        throw Error(ErrorKind::Precondition, "the domain must be peak-pit");
    LinearOrder rb = restrict_order(r, b), tb = restrict_order(t, b);
    if (rb == tb)
        return Path(rb);
    Path out = path_from_seq(build_rec(d, r, t, b, opts));
    if (!is_geodesic(out) || !(out.front() == rb) || !(out.back() == tb)
        || !is_peak_pit(domain_with_path(restrict_domain(d, b), out)))
        throw Error(ErrorKind::ConstructionBug, "final geodesic failed its postcondition");
    return out;
}

} // namespace cdom
