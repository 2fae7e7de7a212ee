#pragma once

#include "cdom/domains.hpp"
#include "cdom/paths.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cdom {

struct SwapClosure {
    Alt w = 0;
    std::vector<Alt> H;            // alternatives h with (h,w) in the suffix
    std::vector<SwitchingPair> K1; // in sequence order
    std::vector<SwitchingPair> K2; // in sequence order
};

// Closure of w over the swaps at positions >= from.
SwapClosure swap_closure(const SwitchSeq& g, Alt w, std::size_t from = 0);

// One induction step: D_B, endpoints and the geodesic on B \ {z}.
struct BuilderState {
    Domain base;          // D restricted to B
    LinearOrder R, T;     // restricted to B
    AltSet B = 0;
    Alt z = 0;            // last alternative of R_B
    std::vector<Alt> tail; // t_1..t_q, after z in T_B
    std::vector<SwitchingPair> C;
    std::vector<SwitchingPair> C_NT;
    SwitchSeq current;    // geodesic on B \ {z}
};

// Index of the first C_NT pair in the current sequence.
std::optional<std::size_t> first_cnt_index(const BuilderState& s);

bool in_C(const BuilderState& s, SwitchingPair p);
bool in_C_NT(const BuilderState& s, SwitchingPair p);

// Predicates on the current geodesic.
bool satisfies_a1(const BuilderState& s);
bool satisfies_a2(const BuilderState& s);
bool satisfies_a3(const BuilderState& s);
bool satisfies_a4(const BuilderState& s);

// Moves the swap at position `from` left to position `to` through
// adjacent disjoint commutations.
SwitchSeq move_swap_left(const SwitchSeq& s, std::size_t from, std::size_t to);

BuilderState normalize_a2(const BuilderState& s);
BuilderState normalize_a3(const BuilderState& s);
BuilderState normalize_a4(const BuilderState& s);

struct TraceLine {
    AltSet B = 0;
    std::string stage; // base, recurse, case1, a2, a3, a4, insert
    SwitchSeq seq;
};

struct BuildOptions {
    std::vector<TraceLine>* trace = nullptr;
    // Called on every induction state before the z swaps are inserted.
    std::function<void(const BuilderState&)> on_state;
};

// The induction state for B, with `current` built recursively on B \ {z}.
BuilderState make_state(const Domain& d, const LinearOrder& r, const LinearOrder& t, AltSet b,
                        const BuildOptions& opts = {});

// Inserts the z swaps into s.current. Any geodesic on B \ {z} that keeps
// D_{B \ z} peak-pit is accepted, not only the one make_state built.
SwitchSeq extend_step(const BuilderState& s, const BuildOptions& opts = {});

Path build_geodesic(const Domain& d, const LinearOrder& r, const LinearOrder& t, AltSet b,
                    const BuildOptions& opts = {});

} // namespace cdom
