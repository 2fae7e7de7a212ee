#pragma once

#include "cdom/domains.hpp"

#include <optional>
#include <utility>

namespace cdom {

using OrderPair = std::pair<LinearOrder, LinearOrder>;

struct ConnectivityReport {
    bool connected = true;
    bool directly_connected = true;
    std::optional<OrderPair> witness_disconnected_pair;
    std::optional<OrderPair> witness_non_geodesic_pair;
};

struct PairCheck {
    bool holds = true;
    std::optional<OrderPair> witness;
};

PairCheck is_connected(const Domain& d);
// jobs <= 0 uses the default worker count.
PairCheck is_directly_connected(const Domain& d, int jobs = 1);
bool no_restoration_check(const Domain& d);

// Whether r and t are joined by a geodesic inside d.
bool directly_connected_pair(const Domain& d, const LinearOrder& r, const LinearOrder& t);

ConnectivityReport connectivity_report(const Domain& d, int jobs = 1);

// Worker count from CDOM_JOBS, else hardware concurrency.
int default_jobs();

} // namespace cdom
