#pragma once

#include "cdom/orders.hpp"
#include "cdom/paths.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cdom {

using Triple = std::array<Alt, 3>; // ascending ids

// Orders of a triple (x<y<z) indexed as xyz, xzy, yxz, yzx, zxy, zyx.
int triple_pattern(const LinearOrder& r, const Triple& t);

struct NeverCondition {
    Triple triple{};
    Alt banned = 0;
    int position = 1; // 1 top, 2 middle, 3 bottom

    friend auto operator<=>(const NeverCondition&, const NeverCondition&) = default;
};

// Condition bits: bit (k-1)*3 + slot, slot = index of the banned alternative in the triple.
using ConditionMask = std::uint16_t;
inline constexpr ConditionMask kPeakPitConditions = 0x1C7; // k = 1 and k = 3
ConditionMask satisfied_conditions(std::uint8_t pattern_mask);
bool condorcet_mask(std::uint8_t pattern_mask);
bool peak_pit_mask(std::uint8_t pattern_mask);
NeverCondition condition_from_bit(const Triple& t, int bit);
int condition_bit(const NeverCondition& c);

class Domain {
public:
    explicit Domain(std::vector<LinearOrder> orders);

    AltSet universe() const { return universe_; }
    int universe_size() const { return set_size(universe_); }
    const std::vector<LinearOrder>& orders() const { return orders_; }
    std::size_t size() const { return orders_.size(); }
    bool contains(const LinearOrder& r) const;
    std::size_t index_of(const LinearOrder& r) const; // size() when absent
    auto begin() const { return orders_.begin(); }
    auto end() const { return orders_.end(); }

    friend bool operator==(const Domain&, const Domain&) = default;
    friend auto operator<=>(const Domain& x, const Domain& y) { return x.orders_ <=> y.orders_; }

private:
    AltSet universe_ = 0;
    std::vector<LinearOrder> orders_;
};

std::vector<Triple> triples_of(AltSet universe);

Domain restrict_domain(const Domain& d, AltSet b);
Domain domain_union(const Domain& d, const std::vector<LinearOrder>& extra);
Domain domain_with_path(const Domain& d, const Path& p);

std::uint8_t triple_mask(const Domain& d, const Triple& t);
std::vector<NeverCondition> never_conditions_of_triple(const Domain& d, const Triple& t);

struct TripleReport {
    Triple triple{};
    std::vector<NeverCondition> satisfied;
    bool is_condorcet = false;
    bool is_peak_pit = false;
};

struct Classification {
    bool is_condorcet = true;
    bool is_peak_pit = true;
    bool is_never_top = true;
    bool is_never_bottom = true;
    bool is_never_middle = true;
    std::vector<TripleReport> triples;
    std::vector<NeverCondition> conditions;         // N(D)
    std::vector<NeverCondition> peak_pit_conditions; // N_p(D)
};

Classification classify(const Domain& d);

// Vacuously true below three alternatives.
bool is_condorcet(const Domain& d);
bool is_peak_pit(const Domain& d);

// The k in {1,3} conditions on one triple of d.
std::vector<NeverCondition> peak_pit_conditions_of_triple(const Domain& d, const Triple& t);

struct Maximality {
    bool maximal = false;
    std::optional<LinearOrder> witness; // an order that can be added
};

Maximality is_maximal_condorcet(const Domain& d);
Maximality is_maximal_peak_pit(const Domain& d);

enum class TripleClass { NeverTop, NeverMiddle, NeverBottom };
const char* to_string(TripleClass c);

TripleClass classify_triple_domain(const Domain& d);

Path extend_with_geodesic_triple(const Domain& d, const LinearOrder& r, const LinearOrder& t);

Domain relabel_domain(const Domain& d, const std::array<Alt, kMaxAlternatives>& perm);
// Minimum over all relabelings of a universe {0..n-1}.
Domain canonical_form(const Domain& d);

// Per-triple pattern masks of a growing set of orders.
class TripleProfile {
public:
    explicit TripleProfile(AltSet universe);
    explicit TripleProfile(const Domain& d);

    const std::vector<Triple>& triples() const { return triples_; }
    const std::vector<std::uint8_t>& masks() const { return masks_; }

    void add(const LinearOrder& r);
    void add_patterns(const std::vector<std::uint8_t>& pats);
    std::vector<std::uint8_t> patterns(const LinearOrder& r) const;

    bool condorcet() const;
    bool peak_pit() const;
    bool condorcet_with(const std::vector<std::uint8_t>& pats) const;
    bool peak_pit_with(const std::vector<std::uint8_t>& pats) const;

private:
    std::vector<Triple> triples_;
    std::vector<std::uint8_t> masks_;
};

} // namespace cdom
