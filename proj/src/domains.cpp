#include "cdom/domains.hpp"

#include <algorithm>
#include <numeric>

namespace cdom {

namespace {

// Slot sequence of each triple pattern.
constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

struct Tables {
    std::uint8_t violated_by[9]{}; // patterns that break each condition
    ConditionMask satisfied[64]{};

    Tables()
    {
        for (int k = 0; k < 3; ++k)
            for (int slot = 0; slot < 3; ++slot)
                for (int p = 0; p < 6; ++p)
                    if (kPerm[p][k] == slot)
                        violated_by[k * 3 + slot] |= std::uint8_t(1u << p);
        for (int m = 0; m < 64; ++m)
            for (int c = 0; c < 9; ++c)
                if ((m & violated_by[c]) == 0)
                    satisfied[m] |= ConditionMask(1u << c);
    }
};

const Tables& tables()
{
    static const Tables t;
    return t;
}

} // namespace

int triple_pattern(const LinearOrder& r, const Triple& t)
{
    int p0 = r.position(t[0]), p1 = r.position(t[1]), p2 = r.position(t[2]);
    int first = (p0 < p1 && p0 < p2) ? 0 : (p1 < p2 ? 1 : 2);
    int lo_rest = first == 0 ? 1 : 0;
    int hi_rest = first == 2 ? 1 : 2;
    int pos[3] = {p0, p1, p2};
    return first * 2 + (pos[lo_rest] < pos[hi_rest] ? 0 : 1);
}

ConditionMask satisfied_conditions(std::uint8_t pattern_mask) { return tables().satisfied[pattern_mask & 63]; }
bool condorcet_mask(std::uint8_t pattern_mask) { return satisfied_conditions(pattern_mask) != 0; }
bool peak_pit_mask(std::uint8_t pattern_mask) { return (satisfied_conditions(pattern_mask) & kPeakPitConditions) != 0; }

NeverCondition condition_from_bit(const Triple& t, int bit)
{
    return NeverCondition{t, t[bit % 3], bit / 3 + 1};
}

int condition_bit(const NeverCondition& c)
{
    int slot = int(std::find(c.triple.begin(), c.triple.end(), c.banned) - c.triple.begin());
    return (c.position - 1) * 3 + slot;
}

Domain::Domain(std::vector<LinearOrder> orders)
{
    if (orders.empty())
        throw Error(ErrorKind::Precondition, "a domain needs at least one order");
    universe_ = orders.front().universe();
    for (const auto& r : orders)
        if (r.universe() != universe_)
            throw Error(ErrorKind::Precondition, "orders of a domain must share one universe");
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    orders_ = std::move(orders);
}

bool Domain::contains(const LinearOrder& r) const
{
    return std::binary_search(orders_.begin(), orders_.end(), r);
}

std::size_t Domain::index_of(const LinearOrder& r) const
{
    auto it = std::lower_bound(orders_.begin(), orders_.end(), r);
    if (it == orders_.end() || !(*it == r))
        return orders_.size();
    return std::size_t(it - orders_.begin());
}

std::vector<Triple> triples_of(AltSet universe)
{
    auto m = members(universe);
    std::vector<Triple> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (std::size_t k = j + 1; k < m.size(); ++k)
                out.push_back({m[i], m[j], m[k]});
    return out;
}

Domain restrict_domain(const Domain& d, AltSet b)
{
    if (b == 0 || (b & ~d.universe()) != 0)
        throw Error(ErrorKind::InvalidSubset, "restriction set must be a nonempty subset of the universe");
    std::vector<LinearOrder> out;
    out.reserve(d.size());
    for (const auto& r : d)
        out.push_back(restrict_order(r, b));
    return Domain(std::move(out));
}

Domain domain_union(const Domain& d, const std::vector<LinearOrder>& extra)
{
    std::vector<LinearOrder> all = d.orders();
    all.insert(all.end(), extra.begin(), extra.end());
    return Domain(std::move(all));
}

Domain domain_with_path(const Domain& d, const Path& p) { return domain_union(d, p.orders()); }

static void require_triple(const Domain& d, const Triple& t)
{
    AltSet s = set_of({t[0], t[1], t[2]});
    if (set_size(s) != 3 || (s & ~d.universe()) != 0 || !(t[0] < t[1] && t[1] < t[2]))
        throw Error(ErrorKind::InvalidSubset, "triple must be three ascending alternatives of the universe");
}

std::uint8_t triple_mask(const Domain& d, const Triple& t)
{
    require_triple(d, t);
    std::uint8_t m = 0;
    for (const auto& r : d)
        m |= std::uint8_t(1u << triple_pattern(r, t));
    return m;
}

static std::vector<NeverCondition> conditions_in(const Triple& t, ConditionMask bits)
{
    std::vector<NeverCondition> out;
    for (int c = 0; c < 9; ++c)
        if ((bits >> c) & 1u)
            out.push_back(condition_from_bit(t, c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NeverCondition> never_conditions_of_triple(const Domain& d, const Triple& t)
{
    return conditions_in(t, satisfied_conditions(triple_mask(d, t)));
}

std::vector<NeverCondition> peak_pit_conditions_of_triple(const Domain& d, const Triple& t)
{
    return conditions_in(t, satisfied_conditions(triple_mask(d, t)) & kPeakPitConditions);
}

Classification classify(const Domain& d)
{
    if (d.universe_size() < 3)
        throw Error(ErrorKind::TooSmallUniverse, "classification needs at least three alternatives");
    Classification c;
    for (const auto& t : triples_of(d.universe())) {
        ConditionMask bits = satisfied_conditions(triple_mask(d, t));
        TripleReport tr;
        tr.triple = t;
        tr.satisfied = conditions_in(t, bits);
        tr.is_condorcet = bits != 0;
        tr.is_peak_pit = (bits & kPeakPitConditions) != 0;
        c.is_condorcet &= tr.is_condorcet;
        c.is_peak_pit &= tr.is_peak_pit;
        c.is_never_top &= (bits & 0x007) != 0;
        c.is_never_middle &= (bits & 0x038) != 0;
        c.is_never_bottom &= (bits & 0x1C0) != 0;
        for (const auto& nc : tr.satisfied) {
            c.conditions.push_back(nc);
            if (nc.position != 2)
                c.peak_pit_conditions.push_back(nc);
        }
        c.triples.push_back(std::move(tr));
    }
    return c;
}

bool is_condorcet(const Domain& d)
{
    return TripleProfile(d).condorcet();
}

bool is_peak_pit(const Domain& d)
{
    return TripleProfile(d).peak_pit();
}

Maximality is_maximal_condorcet(const Domain& d)
{
    TripleProfile prof(d);
    if (!prof.condorcet())
        throw Error(ErrorKind::Precondition, "maximality is defined for Condorcet domains");
    for (const auto& r : all_orders(d.universe())) {
        if (d.contains(r))
            continue;
        if (prof.condorcet_with(prof.patterns(r)))
            return {false, r};
    }
    return {true, std::nullopt};
}

Maximality is_maximal_peak_pit(const Domain& d)
{
    TripleProfile prof(d);
    if (!prof.peak_pit())
        throw Error(ErrorKind::Precondition, "peak-pit maximality is defined for peak-pit domains");
    for (const auto& r : all_orders(d.universe())) {
        if (d.contains(r))
            continue;
        if (prof.peak_pit_with(prof.patterns(r)))
            return {false, r};
    }
    return {true, std::nullopt};
}

const char* to_string(TripleClass c)
{
    switch (c) {
    case TripleClass::NeverTop: return "T";
    case TripleClass::NeverMiddle: return "M";
    case TripleClass::NeverBottom: return "B";
    }
    return "?";
}

TripleClass classify_triple_domain(const Domain& d)
{
    if (d.universe_size() != 3)
        throw Error(ErrorKind::Precondition, "triple classification needs exactly three alternatives");
    if (!is_condorcet(d) || !is_maximal_condorcet(d).maximal)
        throw Error(ErrorKind::Precondition, "triple classification needs a maximal Condorcet domain");
    auto t = triples_of(d.universe()).front();
    ConditionMask bits = satisfied_conditions(triple_mask(d, t));
    if (bits & 0x007)
        return TripleClass::NeverTop;
    if (bits & 0x038)
        return TripleClass::NeverMiddle;
    return TripleClass::NeverBottom;
}

Path extend_with_geodesic_triple(const Domain& d, const LinearOrder& r, const LinearOrder& t)
{
    if (d.universe_size() != 3)
        throw Error(ErrorKind::Precondition, "triple extension needs exactly three alternatives");
    if (!d.contains(r) || !d.contains(t))
        throw Error(ErrorKind::Precondition, "endpoints must belong to the domain");
    if (!is_peak_pit(d))
        throw Error(ErrorKind::Precondition, "triple extension needs a peak-pit domain");
    if (r == t)
        return Path(r);
    int dist = kendall_distance(r, t);
    if (dist < 3) {
        auto g = all_geodesics(r, t, nullptr, 2);
        if (g.size() != 1)
            throw Error(ErrorKind::ConstructionBug, "short geodesic on a triple is not unique");
        return g.front();
    }
    Alt y = r.at(1);
    auto tri = triples_of(d.universe()).front();
    ConditionMask bits = satisfied_conditions(triple_mask(d, tri));
    auto holds = [&](int k) { return (bits >> condition_bit(NeverCondition{tri, y, k})) & 1u; };
    std::vector<LinearOrder> p{r};
    std::array<int, 3> steps{};
    if (holds(3))
        steps = {0, 1, 0};
    else if (holds(1))
        steps = {1, 0, 1};
    else
        throw Error(ErrorKind::Precondition, "reversed endpoints in a peak-pit triple must ban the middle alternative at the top or bottom");
    for (int i : steps)
        p.push_back(apply_swap(p.back(), i));
    return Path(std::move(p));
}

Domain relabel_domain(const Domain& d, const std::array<Alt, kMaxAlternatives>& perm)
{
    std::vector<LinearOrder> out;
    out.reserve(d.size());
    for (const auto& r : d)
        out.push_back(relabel(r, perm));
    return Domain(std::move(out));
}

Domain canonical_form(const Domain& d)
{
    int n = d.universe_size();
    if (d.universe() != full_set(n))
        throw Error(ErrorKind::Precondition, "canonical form needs a universe {0..n-1}");
    std::array<Alt, kMaxAlternatives> perm{};
    std::iota(perm.begin(), perm.end(), Alt(0));
    std::optional<Domain> best;
    do {
        Domain c = relabel_domain(d, perm);
        if (!best || c < *best)
            best = std::move(c);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return *best;
}

TripleProfile::TripleProfile(AltSet universe)
    : triples_(triples_of(universe)), masks_(triples_.size(), 0)
{
}

TripleProfile::TripleProfile(const Domain& d) : TripleProfile(d.universe())
{
    for (const auto& r : d)
        add(r);
}

std::vector<std::uint8_t> TripleProfile::patterns(const LinearOrder& r) const
{
    std::vector<std::uint8_t> out(triples_.size());
    for (std::size_t i = 0; i < triples_.size(); ++i)
        out[i] = std::uint8_t(triple_pattern(r, triples_[i]));
    return out;
}

void TripleProfile::add(const LinearOrder& r) { add_patterns(patterns(r)); }

void TripleProfile::add_patterns(const std::vector<std::uint8_t>& pats)
{
    for (std::size_t i = 0; i < masks_.size(); ++i)
        masks_[i] |= std::uint8_t(1u << pats[i]);
}

bool TripleProfile::condorcet() const
{
    return std::all_of(masks_.begin(), masks_.end(), [](std::uint8_t m) { return condorcet_mask(m); });
}

bool TripleProfile::peak_pit() const
{
    return std::all_of(masks_.begin(), masks_.end(), [](std::uint8_t m) { return peak_pit_mask(m); });
}

bool TripleProfile::condorcet_with(const std::vector<std::uint8_t>& pats) const
{
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (!condorcet_mask(std::uint8_t(masks_[i] | (1u << pats[i]))))
            return false;
    return true;
}

bool TripleProfile::peak_pit_with(const std::vector<std::uint8_t>& pats) const
{
    for (std::size_t i = 0; i < masks_.size(); ++i)
        if (!peak_pit_mask(std::uint8_t(masks_[i] | (1u << pats[i]))))
            return false;
    return true;
}

} // namespace cdom
