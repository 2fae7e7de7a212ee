#include "cdom/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <vector>

namespace cdom {

int default_jobs()
{
    if (const char* env = std::getenv("CDOM_JOBS")) {
        int j = std::atoi(env);
        if (j > 0)
            return j;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(const Domain& d)
{
    std::vector<std::vector<std::size_t>> adj(d.size());
    for (std::size_t u = 0; u < d.size(); ++u) {
        const auto& r = d.orders()[u];
        for (int i = 0; i + 1 < r.size(); ++i) {
            std::size_t v = d.index_of(apply_swap(r, i));
            if (v != d.size())
                adj[u].push_back(v);
        }
    }
    return adj;
}

} // namespace

PairCheck is_connected(const Domain& d)
{
    auto adj = adjacency(d);
    std::vector<char> seen(d.size(), 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (auto v : adj[queue[h]])
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    for (std::size_t v = 0; v < d.size(); ++v)
        if (!seen[v])
            return {false, OrderPair{d.orders()[0], d.orders()[v]}};
    return {};
}

bool directly_connected_pair(const Domain& d, const LinearOrder& r, const LinearOrder& t)
{
    if (r == t)
        return true;
    // Each step swaps an adjacent pair on which r and t disagree, so every
    // visited order lies between r and t.
    std::vector<LinearOrder> frontier{r};
    std::unordered_set<LinearOrder> seen{r};
    while (!frontier.empty()) {
        std::vector<LinearOrder> next;
        for (const auto& u : frontier)
            for (int i = 0; i + 1 < u.size(); ++i) {
                if (!t.prefers(u.at(i + 1), u.at(i)))
                    continue;
                LinearOrder v = apply_swap(u, i);
                if (v == t)
                    return true;
                if (d.contains(v) && seen.insert(v).second)
                    next.push_back(v);
            }
        frontier = std::move(next);
    }
    return false;
}

PairCheck is_directly_connected(const Domain& d, int jobs)
{
    if (jobs <= 0)
        jobs = default_jobs();
    const std::size_t m = d.size();
    std::atomic<std::size_t> next_row{0};
    std::mutex mu;
    std::optional<std::pair<std::size_t, std::size_t>> first_bad;

    auto work = [&] {
        for (;;) {
            std::size_t i = next_row.fetch_add(1);
            if (i >= m)
                return;
            for (std::size_t j = i + 1; j < m; ++j) {
                {
                    std::lock_guard lk(mu);
                    if (first_bad && *first_bad < std::make_pair(i, j))
                        break;
                }
                // Reversing a geodesic gives one in the other direction.
                if (!directly_connected_pair(d, d.orders()[i], d.orders()[j])) {
                    std::lock_guard lk(mu);
                    if (!first_bad || std::make_pair(i, j) < *first_bad)
                        first_bad = std::make_pair(i, j);
                    break;
                }
            }
        }
    };
    if (jobs == 1 || m < 8) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < jobs; ++k)
            pool.emplace_back(work);
    }
    if (first_bad)
        return {false, OrderPair{d.orders()[first_bad->first], d.orders()[first_bad->second]}};
    return {};
}

namespace {

struct StateHash {
    std::size_t operator()(const std::pair<std::size_t, PairBits>& s) const noexcept
    {
        auto lo = std::uint64_t(s.second), hi = std::uint64_t(s.second >> 64);
        return s.first * 0x9E3779B97F4A7C15ull ^ lo ^ (hi * 31);
    }
};

// Search over (order, pairs already swapped) states for a walk from r to t
// that never swaps the same pair twice.
bool no_restoration_pair(const Domain& d, const std::vector<std::vector<std::size_t>>& adj,
                         std::size_t r, std::size_t t)
{
    using State = std::pair<std::size_t, PairBits>;
    std::unordered_set<State, StateHash> seen;
    std::vector<State> stack{{r, 0}};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto [u, used] = stack.back();
        stack.pop_back();
        if (u == t)
            return true;
        for (auto v : adj[u]) {
            auto p = *alike(d.orders()[u], d.orders()[v]);
            PairBits bit = PairBits(1) << pair_index(p.lo, p.hi);
            if (used & bit)
                continue;
            State s{v, used | bit};
            if (seen.insert(s).second)
                stack.push_back(s);
        }
    }
    return false;
}

} // namespace

bool no_restoration_check(const Domain& d)
{
    auto adj = adjacency(d);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (!no_restoration_pair(d, adj, i, j))
                return false;
    return true;
}

ConnectivityReport connectivity_report(const Domain& d, int jobs)
{
    ConnectivityReport rep;
    auto c = is_connected(d);
    rep.connected = c.holds;
    rep.witness_disconnected_pair = c.witness;
    auto dc = is_directly_connected(d, jobs);
    rep.directly_connected = dc.holds;
    rep.witness_non_geodesic_pair = dc.witness;
    return rep;
}

} // namespace cdom
