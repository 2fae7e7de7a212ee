#include "cdom/enumerate.hpp"
#include "cdom/io.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace cdom {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    // Rejection sampling keeps the draw unbiased and independent of the
    // standard library's distribution implementation.
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

namespace {

template <class T>
void shuffle_portable(std::vector<T>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

struct Universe {
    int n = 0;
    std::vector<LinearOrder> orders;
    std::vector<Triple> triples;
    std::vector<std::vector<std::uint8_t>> pat; // [order][triple]
    std::uint8_t allowed[9]{};                  // patterns allowed by each condition

    explicit Universe(int n_) : n(n_), orders(all_orders(full_set(n_))), triples(triples_of(full_set(n_)))
    {
        TripleProfile prof(full_set(n));
        for (const auto& r : orders)
            pat.push_back(prof.patterns(r));
        for (int p = 0; p < 6; ++p) {
            ConditionMask s = satisfied_conditions(std::uint8_t(1u << p));
            for (int c = 0; c < 9; ++c)
                if ((s >> c) & 1u)
                    allowed[c] |= std::uint8_t(1u << p);
        }
    }

    std::size_t index(const LinearOrder& r) const
    {
        return std::size_t(std::lower_bound(orders.begin(), orders.end(), r) - orders.begin());
    }
};

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    bool any() const
    {
        for (auto x : w)
            if (x)
                return true;
        return false;
    }
    Bits operator&(const Bits& o) const
    {
        Bits r;
        for (int i = 0; i < W; ++i)
            r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool intersects(const Bits& o) const
    {
        for (int i = 0; i < W; ++i)
            if (w[i] & o.w[i])
                return true;
        return false;
    }
    friend auto operator<=>(const Bits&, const Bits&) = default;
};

template <int W>
class MaximalSearch {
public:
    MaximalSearch(const Universe& u, bool peak_pit_only) : u_(u)
    {
        for (int c = 0; c < 9; ++c)
            if (!peak_pit_only || ((kPeakPitConditions >> c) & 1u))
                conds_.push_back(c);
        accept_ = peak_pit_only ? &peak_pit_mask : &condorcet_mask;
        std::size_t nt = u.triples.size();
        pat_bits_.assign(nt, std::array<Bits<W>, 6>{});
        cond_bits_.assign(nt, std::array<Bits<W>, 9>{});
        for (std::size_t x = 0; x < u.orders.size(); ++x)
            for (std::size_t t = 0; t < nt; ++t) {
                int p = u.pat[x][t];
                pat_bits_[t][p].set(x);
                for (int c = 0; c < 9; ++c)
                    if ((u.allowed[c] >> p) & 1u)
                        cond_bits_[t][c].set(x);
            }
        for (std::size_t x = 0; x < u.orders.size(); ++x)
            all_.set(x);
    }

    // Children of the root, one task each.
    std::vector<Bits<W>> roots() const
    {
        std::vector<Bits<W>> out;
        for (int c : children(all_, 0))
            out.push_back(all_ & cond_bits_[0][c]);
        return out;
    }

    void run(const Bits<W>& start, std::vector<Bits<W>>& found) const { dfs(start, 1, found); }

private:
    std::uint8_t pattern_mask(const Bits<W>& s, std::size_t t) const
    {
        std::uint8_t m = 0;
        for (int p = 0; p < 6; ++p)
            if (s.intersects(pat_bits_[t][p]))
                m |= std::uint8_t(1u << p);
        return m;
    }

    // Conditions whose surviving set is not dominated by a sibling; any
    // completion of a dominated child is a subset of the same completion of
    // the dominating one.
    std::vector<int> children(const Bits<W>& s, std::size_t t) const
    {
        std::uint8_t P = pattern_mask(s, t);
        std::vector<int> out;
        for (int c : conds_) {
            std::uint8_t m = P & u_.allowed[c];
            if (!m)
                continue;
            bool keep = true;
            for (int c2 : conds_) {
                if (c2 == c)
                    continue;
                std::uint8_t m2 = P & u_.allowed[c2];
                bool superset = (m & ~m2) == 0;
                if (superset && (m != m2 || c2 < c)) {
                    keep = false;
                    break;
                }
            }
            if (keep)
                out.push_back(c);
        }
        return out;
    }

    void dfs(const Bits<W>& s, std::size_t t, std::vector<Bits<W>>& found) const
    {
        if (t == u_.triples.size()) {
            if (maximal(s))
                found.push_back(s);
            return;
        }
        for (int c : children(s, t))
            dfs(s & cond_bits_[t][c], t + 1, found);
    }

    bool maximal(const Bits<W>& s) const
    {
        std::size_t nt = u_.triples.size();
        std::vector<std::uint8_t> masks(nt);
        for (std::size_t t = 0; t < nt; ++t)
            masks[t] = pattern_mask(s, t);
        for (std::size_t x = 0; x < u_.orders.size(); ++x) {
            if (s.test(x))
                continue;
            bool fits = true;
            for (std::size_t t = 0; t < nt && fits; ++t)
                fits = accept_(std::uint8_t(masks[t] | (1u << u_.pat[x][t])));
            if (fits)
                return false;
        }
        return true;
    }

    const Universe& u_;
    std::vector<int> conds_;
    bool (*accept_)(std::uint8_t) = nullptr;
    std::vector<std::array<Bits<W>, 6>> pat_bits_;
    std::vector<std::array<Bits<W>, 9>> cond_bits_;
    Bits<W> all_;
};

template <int W>
std::vector<std::vector<std::uint16_t>> search_maximal(const Universe& u, bool peak_pit_only, int jobs)
{
    MaximalSearch<W> search(u, peak_pit_only);
    auto roots = search.roots();
    std::vector<std::vector<Bits<W>>> per_root(roots.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size())
                return;
            search.run(roots[i], per_root[i]);
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < jobs; ++k)
            pool.emplace_back(work);
    }
    std::vector<Bits<W>> all;
    for (auto& v : per_root)
        all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<std::vector<std::uint16_t>> out;
    for (const auto& b : all) {
        std::vector<std::uint16_t> idx;
        for (std::size_t x = 0; x < u.orders.size(); ++x)
            if (b.test(x))
                idx.push_back(std::uint16_t(x));
        out.push_back(std::move(idx));
    }
    return out;
}

std::vector<std::vector<std::uint16_t>> relabel_maps(const Universe& u)
{
    std::vector<std::vector<std::uint16_t>> maps;
    std::array<Alt, kMaxAlternatives> perm{};
    std::iota(perm.begin(), perm.end(), Alt(0));
    do {
        std::vector<std::uint16_t> m(u.orders.size());
        for (std::size_t x = 0; x < u.orders.size(); ++x)
            m[x] = std::uint16_t(u.index(relabel(u.orders[x], perm)));
        maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.begin() + u.n));
    return maps;
}

std::vector<std::uint16_t> canonical_indices(const std::vector<std::uint16_t>& idx,
                                             const std::vector<std::vector<std::uint16_t>>& maps)
{
    std::vector<std::uint16_t> best, cur(idx.size());
    for (const auto& m : maps) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            cur[i] = m[idx[i]];
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best)
            best = cur;
    }
    return best;
}

Domain to_domain(const Universe& u, const std::vector<std::uint16_t>& idx)
{
    std::vector<LinearOrder> v;
    for (auto i : idx)
        v.push_back(u.orders[i]);
    return Domain(std::move(v));
}

void check_size(int n, bool allow_n6)
{
    if (n < 3 || n > 6 || (n == 6 && !allow_n6))
        throw Error(ErrorKind::UnsupportedSize, "enumeration supports 3 <= n <= 5 (n = 6 needs the explicit flag)");
}

} // namespace

std::vector<Domain> maximal_domains(int n, bool peak_pit_only, const EnumerateOptions& opts)
{
    check_size(n, opts.allow_n6);
    Universe u(n);
    int jobs = opts.jobs <= 0 ? default_jobs() : opts.jobs;
    std::vector<std::vector<std::uint16_t>> found;
    switch (n) {
    case 3:
    case 4: found = search_maximal<1>(u, peak_pit_only, jobs); break;
    case 5: found = search_maximal<2>(u, peak_pit_only, jobs); break;
    default: found = search_maximal<12>(u, peak_pit_only, jobs); break;
    }
    if (opts.fold_iso) {
        auto maps = relabel_maps(u);
        std::set<std::vector<std::uint16_t>> classes;
        for (const auto& idx : found)
            classes.insert(canonical_indices(idx, maps));
        found.assign(classes.begin(), classes.end());
    }
    std::vector<Domain> out;
    for (const auto& idx : found)
        out.push_back(to_domain(u, idx));
    std::sort(out.begin(), out.end());
    return out;
}

CensusRow census_row(const Domain& d, int jobs)
{
    CensusRow row{d};
    row.size = d.size();
    row.peak_pit = is_peak_pit(d);
    row.connected = is_connected(d).holds;
    row.directly_connected = is_directly_connected(d, jobs).holds;
    row.maximal_condorcet = is_condorcet(d) && is_maximal_condorcet(d).maximal;
    row.maximal_peak_pit = row.peak_pit && is_maximal_peak_pit(d).maximal;
    return row;
}

std::vector<CensusRow> enumerate_maximal(int n, const EnumerateOptions& opts)
{
    std::vector<CensusRow> rows;
    for (const auto& d : maximal_domains(n, false, opts)) {
        rows.push_back(census_row(d, opts.jobs));
        if (!rows.back().maximal_condorcet)
            throw Error(ErrorKind::ConstructionBug, "search emitted a domain that fails the maximality scan");
    }
    return rows;
}

namespace {

std::string describe(const Domain& d, const std::string& why)
{
    return why + ": " + format_domain_inline(d, Alphabet::standard(d.universe_size()));
}

void check_range(int n, const VerifyOptions& opts)
{
    if (n < 3 || n > 5)
        throw Error(ErrorKind::UnsupportedSize, "theorem checks support 3 <= n <= 5");
    (void)opts;
}

Domain random_maximal(int n, std::uint64_t seed, bool peak_pit_only)
{
    std::mt19937_64 rng(seed);
    auto orders = all_orders(full_set(n));
    shuffle_portable(orders, rng);
    TripleProfile prof(full_set(n));
    std::vector<LinearOrder> kept;
    for (const auto& r : orders) {
        auto pats = prof.patterns(r);
        if (peak_pit_only ? prof.peak_pit_with(pats) : prof.condorcet_with(pats)) {
            prof.add_patterns(pats);
            kept.push_back(r);
        }
    }
    return Domain(std::move(kept));
}

} // namespace

TheoremReport verify_theorem_3(int n, const VerifyOptions& opts)
{
    check_range(n, opts);
    TheoremReport rep{3, n, "exhaustive", 0, {}};
    std::vector<Domain> doms;
    if (n <= 4) {
        doms = maximal_domains(n, false, {false, opts.jobs, false});
    } else if (opts.exhaustive_n5) {
        doms = maximal_domains(n, false, {true, opts.jobs, false});
    } else {
        rep.mode = "sampled";
        for (std::size_t i = 0; i < opts.samples; ++i)
            doms.push_back(random_maximal(n, opts.seed + i, false));
    }
    for (const auto& d : doms) {
        bool pp = is_peak_pit(d);
        bool c = is_connected(d).holds;
        bool dc = is_directly_connected(d, opts.jobs).holds;
        ++rep.checked;
        if (!(pp == c && c == dc))
            rep.counterexamples.push_back(describe(d, "peak-pit/connected/directly-connected disagree"));
    }
    return rep;
}

TheoremReport verify_theorem_2(int n, const VerifyOptions& opts)
{
    check_range(n, opts);
    TheoremReport rep{2, n, "exhaustive", 0, {}};
    if (n == 5 && !opts.exhaustive_n5) {
        rep.mode = "sampled";
        for (std::size_t i = 0; i < opts.samples; ++i) {
            Domain d = random_maximal(n, opts.seed + i, true);
            ++rep.checked;
            if (!is_maximal_condorcet(d).maximal)
                rep.counterexamples.push_back(describe(d, "maximal peak-pit but not maximal Condorcet"));
            Domain e = random_maximal(n, opts.seed + i, false);
            if (is_peak_pit(e) && !is_maximal_peak_pit(e).maximal)
                rep.counterexamples.push_back(describe(e, "peak-pit maximal Condorcet but not maximal peak-pit"));
        }
        return rep;
    }
    EnumerateOptions eo{n == 5, opts.jobs, false};
    auto pp = maximal_domains(n, true, eo);
    std::vector<Domain> mc_pp;
    for (auto& d : maximal_domains(n, false, eo))
        if (is_peak_pit(d))
            mc_pp.push_back(std::move(d));
    for (const auto& d : pp) {
        ++rep.checked;
        if (!is_maximal_condorcet(d).maximal)
            rep.counterexamples.push_back(describe(d, "maximal peak-pit but not maximal Condorcet"));
    }
    for (const auto& d : mc_pp) {
        ++rep.checked;
        if (!is_maximal_peak_pit(d).maximal)
            rep.counterexamples.push_back(describe(d, "peak-pit maximal Condorcet but not maximal peak-pit"));
    }
    if (pp != mc_pp)
        rep.counterexamples.push_back("the two families differ as sets");
    return rep;
}

TheoremReport verify_theorem_1(int n, const VerifyOptions& opts)
{
    check_range(n, opts);
    TheoremReport rep{1, n, "exhaustive", 0, {}};
    std::vector<Domain> doms;
    if (n <= 4 || opts.exhaustive_n5) {
        doms = maximal_domains(n, true, {n == 5, opts.jobs, false});
    } else {
        rep.mode = "sampled";
        for (std::size_t i = 0; i < opts.samples; ++i)
            doms.push_back(random_maximal(n, opts.seed + i, true));
    }
    for (const auto& d : doms) {
        ++rep.checked;
        if (!is_maximal_peak_pit(d).maximal)
            rep.counterexamples.push_back(describe(d, "sample is not a maximal peak-pit domain"));
        else if (!is_directly_connected(d, opts.jobs).holds)
            rep.counterexamples.push_back(describe(d, "maximal peak-pit but not directly connected"));
    }
    return rep;
}

Domain random_peak_pit_domain(int n, std::uint64_t seed, std::size_t target_size)
{
    if (n < 1 || n > 8)
        throw Error(ErrorKind::UnsupportedSize, "random domains support n <= 8");
    if (target_size < 2)
        throw Error(ErrorKind::Precondition, "target size must be at least 2");
    std::mt19937_64 rng(seed);
    const auto base = all_orders(full_set(n));
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto orders = base;
        shuffle_portable(orders, rng);
        TripleProfile prof(full_set(n));
        std::vector<LinearOrder> kept;
        for (const auto& r : orders) {
            if (kept.size() == target_size)
                break;
            auto pats = prof.patterns(r);
            if (prof.peak_pit_with(pats)) {
                prof.add_patterns(pats);
                kept.push_back(r);
            }
        }
        if (kept.size() >= 2)
            return Domain(std::move(kept));
    }
    throw Error(ErrorKind::GenerationFailure, "could not grow a peak-pit domain to two orders");
}

Domain extend_to_maximal_peak_pit(const Domain& d, std::uint64_t seed)
{
    TripleProfile prof(d);
    if (!prof.peak_pit())
        throw Error(ErrorKind::Precondition, "seed domain must be peak-pit");
    std::mt19937_64 rng(seed);
    auto orders = all_orders(d.universe());
    shuffle_portable(orders, rng);
    std::vector<LinearOrder> kept = d.orders();
    for (const auto& r : orders) {
        if (d.contains(r))
            continue;
        auto pats = prof.patterns(r);
        if (prof.peak_pit_with(pats)) {
            prof.add_patterns(pats);
            kept.push_back(r);
        }
    }
    return Domain(std::move(kept));
}

} // namespace cdom
