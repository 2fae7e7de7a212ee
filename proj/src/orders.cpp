#include "cdom/orders.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cdom {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidSubset: return "invalid-subset";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::Index: return "index";
    case ErrorKind::MalformedSequence: return "malformed-sequence";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::TooSmallUniverse: return "too-small-universe";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::GenerationFailure: return "generation-failure";
    case ErrorKind::ConstructionBug: return "construction-bug";
    case ErrorKind::EmptySwapSet: return "empty-swap-set";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

AltSet full_set(int n)
{
    if (n < 0 || n > kMaxAlternatives)
        throw Error(ErrorKind::UnsupportedSize, "universe size " + std::to_string(n));
    return n == kMaxAlternatives ? AltSet(0xFFFF) : AltSet((1u << n) - 1);
}

int set_size(AltSet s) { return std::popcount(unsigned(s)); }

std::vector<Alt> members(AltSet s)
{
    std::vector<Alt> out;
    for (int a = 0; a < kMaxAlternatives; ++a)
        if (has(s, Alt(a)))
            out.push_back(Alt(a));
    return out;
}

AltSet set_of(std::initializer_list<Alt> alts)
{
    AltSet s = 0;
    for (Alt a : alts)
        s |= AltSet(1u << a);
    return s;
}

int pair_index(Alt a, Alt b)
{
    if (a > b)
        std::swap(a, b);
    return b * (b - 1) / 2 + a;
}

SwitchingPair::SwitchingPair(Alt a, Alt b)
{
    if (a == b || a >= kMaxAlternatives || b >= kMaxAlternatives)
        throw Error(ErrorKind::InvalidPair, "switching pair needs two distinct alternatives");
    lo = std::min(a, b);
    hi = std::max(a, b);
}

LinearOrder::LinearOrder(const std::vector<Alt>& ranking)
{
    if (ranking.empty() || ranking.size() > kMaxAlternatives)
        throw Error(ErrorKind::InvalidSubset, "order must rank between 1 and 16 alternatives");
    pos_.fill(-1);
    n_ = std::uint8_t(ranking.size());
    for (int i = 0; i < n_; ++i) {
        Alt a = ranking[i];
        if (a >= kMaxAlternatives || has(universe_, a))
            throw Error(ErrorKind::InvalidSubset, "order repeats or exceeds alternative ids");
        universe_ |= AltSet(1u << a);
        seq_[i] = a;
        pos_[a] = std::int8_t(i);
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (seq_[i] > seq_[j])
                bits_ |= PairBits(1) << pair_index(seq_[i], seq_[j]);
}

LinearOrder LinearOrder::identity(int n)
{
    std::vector<Alt> r(n);
    std::iota(r.begin(), r.end(), Alt(0));
    return LinearOrder(r);
}

std::vector<Alt> LinearOrder::ranking() const
{
    return std::vector<Alt>(seq_.begin(), seq_.begin() + n_);
}

std::strong_ordering operator<=>(const LinearOrder& x, const LinearOrder& y)
{
    if (auto c = x.seq_ <=> y.seq_; c != 0)
        return c;
    return x.n_ <=> y.n_;
}

LinearOrder restrict_order(const LinearOrder& r, AltSet b)
{
    if (b == 0 || (b & ~r.universe()) != 0)
        throw Error(ErrorKind::InvalidSubset, "restriction set must be a nonempty subset of the universe");
    std::vector<Alt> out;
    out.reserve(set_size(b));
    for (int i = 0; i < r.size(); ++i)
        if (has(b, r.at(i)))
            out.push_back(r.at(i));
    return LinearOrder(out);
}

static void require_same_universe(const LinearOrder& r, const LinearOrder& t)
{
    if (r.universe() != t.universe())
        throw Error(ErrorKind::InvalidPair, "orders are over different universes");
}

static int popcount128(PairBits x)
{
    return std::popcount(std::uint64_t(x)) + std::popcount(std::uint64_t(x >> 64));
}

int kendall_distance(const LinearOrder& r, const LinearOrder& t)
{
    require_same_universe(r, t);
    return popcount128(r.pair_bits() ^ t.pair_bits());
}

std::optional<SwitchingPair> alike(const LinearOrder& r, const LinearOrder& t)
{
    require_same_universe(r, t);
    if (popcount128(r.pair_bits() ^ t.pair_bits()) != 1)
        return std::nullopt;
    for (int i = 0; i + 1 < r.size(); ++i)
        if (r.at(i) != t.at(i))
            return SwitchingPair(r.at(i), r.at(i + 1));
    return std::nullopt;
}

LinearOrder apply_swap(const LinearOrder& r, int i)
{
    if (i < 0 || i + 1 >= r.size())
        throw Error(ErrorKind::Index, "swap position " + std::to_string(i) + " out of range");
    auto v = r.ranking();
    std::swap(v[i], v[i + 1]);
    return LinearOrder(v);
}

bool between(const LinearOrder& u, const LinearOrder& r, const LinearOrder& t)
{
    require_same_universe(u, r);
    require_same_universe(u, t);
    PairBits bu = u.pair_bits();
    return ((bu ^ r.pair_bits()) & (bu ^ t.pair_bits())) == 0;
}

LinearOrder swap_pair(const LinearOrder& r, SwitchingPair p)
{
    if (!has(r.universe(), p.lo) || !has(r.universe(), p.hi))
        throw Error(ErrorKind::MalformedSequence, "pair not in universe");
    int i = r.position(p.lo), j = r.position(p.hi);
    if (std::abs(i - j) != 1)
        throw Error(ErrorKind::MalformedSequence, "pair is not adjacent");
    return apply_swap(r, std::min(i, j));
}

std::vector<LinearOrder> all_orders(AltSet universe)
{
    auto v = members(universe);
    std::vector<LinearOrder> out;
    if (v.empty())
        return out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

LinearOrder relabel(const LinearOrder& r, const std::array<Alt, kMaxAlternatives>& perm)
{
    auto v = r.ranking();
    for (auto& a : v)
        a = perm[a];
    return LinearOrder(v);
}

LinearOrder reversed(const LinearOrder& r)
{
    auto v = r.ranking();
    std::reverse(v.begin(), v.end());
    return LinearOrder(v);
}

} // namespace cdom

std::size_t std::hash<cdom::LinearOrder>::operator()(const cdom::LinearOrder& r) const noexcept
{
    std::size_t h = r.universe();
    for (int i = 0; i < r.size(); ++i)
        h = h * 31 + r.at(i);
    return h;
}
