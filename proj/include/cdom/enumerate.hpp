#pragma once

#include "cdom/connectivity.hpp"
#include "cdom/domains.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cdom {

struct CensusRow {
    Domain domain;
    std::size_t size = 0;
    bool peak_pit = false;
    bool connected = false;
    bool directly_connected = false;
    bool maximal_condorcet = false;
    bool maximal_peak_pit = false;
};

struct EnumerateOptions {
    bool fold_iso = false;
    int jobs = 1;
    bool allow_n6 = false;
};

// Maximal Condorcet domains on {0..n-1}, sorted. With peak_pit_only the
// maximal peak-pit domains instead.
std::vector<Domain> maximal_domains(int n, bool peak_pit_only, const EnumerateOptions& opts = {});

std::vector<CensusRow> enumerate_maximal(int n, const EnumerateOptions& opts = {});
CensusRow census_row(const Domain& d, int jobs = 1);

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 1;
    std::size_t samples = 100;  // sampled mode only
    bool exhaustive_n5 = false;
};

struct TheoremReport {
    int theorem = 0;
    int n = 0;
    std::string mode; // exhaustive or sampled
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

TheoremReport verify_theorem_1(int n, const VerifyOptions& opts = {});
TheoremReport verify_theorem_2(int n, const VerifyOptions& opts = {});
TheoremReport verify_theorem_3(int n, const VerifyOptions& opts = {});

// Uniform integer in [0, bound) with the same stream on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

Domain random_peak_pit_domain(int n, std::uint64_t seed, std::size_t target_size);
// Greedily adds orders in a seeded random sequence until no order fits.
Domain extend_to_maximal_peak_pit(const Domain& d, std::uint64_t seed);

} // namespace cdom
