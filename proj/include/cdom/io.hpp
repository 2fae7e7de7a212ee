#pragma once

#include "cdom/connectivity.hpp"
#include "cdom/domains.hpp"
#include "cdom/enumerate.hpp"
#include "cdom/paths.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cdom {

// Printable names for alternative ids.
class Alphabet {
public:
    static Alphabet standard(int n);
    explicit Alphabet(std::vector<std::string> labels);

    int size() const { return int(labels_.size()); }
    const std::string& label(Alt a) const;
    Alt id(std::string_view label) const;
    // All labels are one character, so orders print without separators.
    bool compact() const { return compact_; }

    std::string format(const LinearOrder& r) const;
    std::string format(SwitchingPair p) const;
    std::string format(const SwitchSeq& s) const; // swaps only
    std::string format(const Path& p) const;

    LinearOrder parse_order(std::string_view text) const;
    AltSet parse_subset(std::string_view text) const;
    SwitchingPair parse_pair(std::string_view text) const;
    std::vector<SwitchingPair> parse_swaps(std::string_view text) const;
    Path parse_path(std::string_view text) const;

private:
    std::vector<std::string> labels_;
    bool compact_ = true;
};

struct DomainFile {
    Alphabet alphabet;
    Domain domain;
    std::vector<std::string> warnings;
};

DomainFile parse_domain_text(std::string_view text);
DomainFile read_domain_file(const std::string& path);
std::string format_domain_file(const Domain& d, const Alphabet& a);
std::string format_domain_inline(const Domain& d, const Alphabet& a);

nlohmann::json classify_json(const Domain& d, const Alphabet& a, int jobs = 1);

std::string census_csv(const std::vector<CensusRow>& rows, const Alphabet& a);
nlohmann::json census_json(const std::vector<CensusRow>& rows, const Alphabet& a);

nlohmann::json theorem_json(const TheoremReport& rep);

} // namespace cdom
