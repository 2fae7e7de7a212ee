#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdom {

using Alt = std::uint8_t;
using AltSet = std::uint16_t;
using PairBits = unsigned __int128;

inline constexpr int kMaxAlternatives = 16;

enum class ErrorKind {
    InvalidSubset,
    InvalidPair,
    Index,
    MalformedSequence,
    Precondition,
    TooSmallUniverse,
    UnsupportedSize,
    GenerationFailure,
    ConstructionBug,
    EmptySwapSet,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

AltSet full_set(int n);
int set_size(AltSet s);
inline bool has(AltSet s, Alt a) { return (s >> a) & 1u; }
std::vector<Alt> members(AltSet s);
AltSet set_of(std::initializer_list<Alt> alts);

// Index of the unordered pair {a,b} in a 120-bit pair bitmap.
int pair_index(Alt a, Alt b);

struct SwitchingPair {
    Alt lo = 0;
    Alt hi = 1;

    SwitchingPair() = default;
    SwitchingPair(Alt a, Alt b);

    bool involves(Alt a) const { return lo == a || hi == a; }
    bool disjoint(const SwitchingPair& o) const
    {
        return !involves(o.lo) && !involves(o.hi);
    }
    AltSet as_set() const { return AltSet((1u << lo) | (1u << hi)); }

    friend auto operator<=>(const SwitchingPair&, const SwitchingPair&) = default;
};

class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(const std::vector<Alt>& ranking);

    static LinearOrder identity(int n);

    int size() const { return n_; }
    AltSet universe() const { return universe_; }
    Alt at(int pos) const { return seq_[pos]; }
    int position(Alt a) const { return pos_[a]; }
    bool prefers(Alt a, Alt b) const { return pos_[a] < pos_[b]; }
    // Bit pair_index(a,b) is set when the larger id is ranked first.
    PairBits pair_bits() const { return bits_; }
    std::vector<Alt> ranking() const;

    friend bool operator==(const LinearOrder& x, const LinearOrder& y)
    {
        return x.universe_ == y.universe_ && x.seq_ == y.seq_;
    }
    friend std::strong_ordering operator<=>(const LinearOrder& x, const LinearOrder& y);

private:
    std::array<Alt, kMaxAlternatives> seq_{};
    std::array<std::int8_t, kMaxAlternatives> pos_{};
    std::uint8_t n_ = 0;
    AltSet universe_ = 0;
    PairBits bits_ = 0;
};

LinearOrder restrict_order(const LinearOrder& r, AltSet b);
int kendall_distance(const LinearOrder& r, const LinearOrder& t);
std::optional<SwitchingPair> alike(const LinearOrder& r, const LinearOrder& t);
LinearOrder apply_swap(const LinearOrder& r, int i);
bool between(const LinearOrder& u, const LinearOrder& r, const LinearOrder& t);

// Swaps the adjacent pair p in r; throws MalformedSequence if p is not adjacent.
LinearOrder swap_pair(const LinearOrder& r, SwitchingPair p);

// All orders over the given alternatives, lexicographic by id sequence.
std::vector<LinearOrder> all_orders(AltSet universe);

// perm maps old id -> new id.
LinearOrder relabel(const LinearOrder& r, const std::array<Alt, kMaxAlternatives>& perm);

LinearOrder reversed(const LinearOrder& r);

} // namespace cdom

template <>
struct std::hash<cdom::LinearOrder> {
    std::size_t operator()(const cdom::LinearOrder& r) const noexcept;
};
