#pragma once

#include "cdom/orders.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace cdom {

class Domain;

// A sequence of orders in which consecutive entries are alike.
class Path {
public:
    explicit Path(std::vector<LinearOrder> orders);
    explicit Path(const LinearOrder& single) : Path(std::vector<LinearOrder>{single}) {}

    const std::vector<LinearOrder>& orders() const { return orders_; }
    // Number of orders, not the number of swaps.
    std::size_t length() const { return orders_.size(); }
    std::size_t num_swaps() const { return orders_.size() - 1; }
    const LinearOrder& front() const { return orders_.front(); }
    const LinearOrder& back() const { return orders_.back(); }
    const LinearOrder& operator[](std::size_t i) const { return orders_[i]; }
    AltSet universe() const { return orders_.front().universe(); }

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::vector<LinearOrder> orders_;
};

struct SwitchSeq {
    LinearOrder start;
    std::vector<SwitchingPair> swaps;

    friend bool operator==(const SwitchSeq&, const SwitchSeq&) = default;
};

SwitchSeq switch_seq(const Path& p);
Path path_from_seq(const SwitchSeq& s);
LinearOrder seq_end(const SwitchSeq& s);

bool is_geodesic(const Path& p);
Path restrict_path(const Path& p, AltSet b);
SwitchSeq restrict_seq(const SwitchSeq& s, AltSet b);
Path concat_geodesics(const Path& a, const Path& b);

// Depth-first, ascending swap position. The visitor returns false to stop.
void enumerate_geodesics(const LinearOrder& r, const LinearOrder& t, const Domain* within,
                         const std::function<bool(const Path&)>& visit);
std::vector<Path> all_geodesics(const LinearOrder& r, const LinearOrder& t,
                                const Domain* within = nullptr,
                                std::size_t limit = std::numeric_limits<std::size_t>::max());

enum class GeodesicKind { NeverTop, NeverBottom };

// For a geodesic xyz -> zyx on three alternatives.
GeodesicKind triple_dichotomy(const Path& g);

Path commute_adjacent_disjoint(const Path& p, std::size_t i);
SwitchSeq commute_adjacent_disjoint(const SwitchSeq& s, std::size_t i);

bool paths_equivalent(const Path& a, const Path& b);

std::optional<std::size_t> index_of(const SwitchSeq& s, SwitchingPair p);
// p strictly before q, both present.
bool precedes(const SwitchSeq& s, SwitchingPair p, SwitchingPair q);

} // namespace cdom
