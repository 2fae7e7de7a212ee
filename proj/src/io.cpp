#include "cdom/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace cdom {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace((unsigned char)s.front()))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace((unsigned char)s.back()))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_tokens(std::string_view s, bool commas)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace((unsigned char)c) || (commas && c == ',')) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool has_space(std::string_view s)
{
    return std::any_of(s.begin(), s.end(), [](char c) { return std::isspace((unsigned char)c); });
}

} // namespace

Alphabet Alphabet::standard(int n)
{
    if (n < 0 || n > kMaxAlternatives)
        throw Error(ErrorKind::UnsupportedSize, "at most 16 alternatives");
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
        v.emplace_back(1, char('a' + i));
    return Alphabet(std::move(v));
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (labels_.size() > std::size_t(kMaxAlternatives))
        throw Error(ErrorKind::Parse, "at most 16 alternatives");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty() || l.find_first_of(" \t\r\n,()-<>#") != std::string::npos)
            throw Error(ErrorKind::Parse, "label '" + l + "' is empty or contains a reserved character");
        if (!seen.insert(l).second)
            throw Error(ErrorKind::Parse, "label '" + l + "' appears twice");
        compact_ = compact_ && l.size() == 1;
    }
}

const std::string& Alphabet::label(Alt a) const
{
    if (a >= labels_.size())
        throw Error(ErrorKind::Index, "no label for alternative " + std::to_string(a));
    return labels_[a];
}

Alt Alphabet::id(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return Alt(i);
    throw Error(ErrorKind::Parse, "unknown label '" + std::string(label) + "'");
}

std::string Alphabet::format(const LinearOrder& r) const
{
    std::string out;
    for (int i = 0; i < r.size(); ++i) {
        if (i && !compact_)
            out += ' ';
        out += label(r.at(i));
    }
    return out;
}

std::string Alphabet::format(SwitchingPair p) const
{
    return "(" + label(p.lo) + "," + label(p.hi) + ")";
}

std::string Alphabet::format(const SwitchSeq& s) const
{
    std::string out;
    for (std::size_t i = 0; i < s.swaps.size(); ++i) {
        if (i)
            out += ',';
        out += format(s.swaps[i]);
    }
    return out;
}

std::string Alphabet::format(const Path& p) const
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += " -> ";
        out += format(p[i]);
    }
    return out;
}

LinearOrder Alphabet::parse_order(std::string_view text) const
{
    text = trim(text);
    std::vector<Alt> ids;
    if (has_space(text) || !compact_) {
        for (const auto& tok : split_tokens(text, false))
            ids.push_back(id(tok));
    } else {
        for (char c : text)
            ids.push_back(id(std::string_view(&c, 1)));
    }
    try {
        return LinearOrder(ids);
    } catch (const Error&) {
        throw Error(ErrorKind::Parse, "'" + std::string(text) + "' is not a linear order");
    }
}

AltSet Alphabet::parse_subset(std::string_view text) const
{
    text = trim(text);
    std::vector<std::string> toks;
    if (text.find_first_of(" \t,") != std::string_view::npos || !compact_)
        toks = split_tokens(text, true);
    else
        for (char c : text)
            toks.emplace_back(1, c);
    AltSet s = 0;
    for (const auto& t : toks) {
        Alt a = id(t);
        if (has(s, a))
            throw Error(ErrorKind::Parse, "subset repeats '" + t + "'");
        s |= AltSet(1u << a);
    }
    if (s == 0)
        throw Error(ErrorKind::Parse, "empty subset");
    return s;
}

SwitchingPair Alphabet::parse_pair(std::string_view text) const
{
    auto v = parse_swaps(text);
    if (v.size() != 1)
        throw Error(ErrorKind::Parse, "expected one switching pair");
    return v.front();
}

std::vector<SwitchingPair> Alphabet::parse_swaps(std::string_view text) const
{
    static const std::regex pair_re(R"(\s*\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)\s*(,|$))");
    std::vector<SwitchingPair> out;
    std::string s(trim(text));
    auto it = s.cbegin();
    std::smatch m;
    while (it != s.cend()) {
        if (!std::regex_search(it, s.cend(), m, pair_re, std::regex_constants::match_continuous))
            throw Error(ErrorKind::Parse, "malformed switching pair list near '" + std::string(it, s.cend()) + "'");
        Alt a = id(m[1].str()), b = id(m[2].str());
        if (a == b)
            throw Error(ErrorKind::Parse, "switching pair repeats an alternative");
        out.emplace_back(a, b);
        it = m[0].second;
        if (m[3].str() == "," && it == s.cend())
            throw Error(ErrorKind::Parse, "trailing comma");
    }
    return out;
}

Path Alphabet::parse_path(std::string_view text) const
{
    std::vector<LinearOrder> orders;
    std::string s(text);
    std::size_t pos = 0;
    for (;;) {
        auto next = s.find("->", pos);
        orders.push_back(parse_order(std::string_view(s).substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
        if (next == std::string::npos)
            break;
        pos = next + 2;
    }
    try {
        return Path(std::move(orders));
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

DomainFile parse_domain_text(std::string_view text)
{
    std::optional<Alphabet> alpha;
    std::vector<LinearOrder> orders;
    std::set<LinearOrder> seen;
    std::vector<std::string> warnings;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty())
            continue;
        if (t.front() == '#') {
            auto body = trim(t.substr(1));
            if (body.rfind("alphabet:", 0) == 0) {
                if (alpha || !orders.empty())
                    fail("alphabet header must come first and only once");
                auto spec = trim(body.substr(9));
                std::vector<std::string> labels;
                if (spec.find_first_of(" \t,") != std::string_view::npos)
                    labels = split_tokens(spec, true);
                else
                    for (char c : spec)
                        labels.emplace_back(1, c);
                try {
                    alpha = Alphabet(labels);
                } catch (const Error& e) {
                    fail(e.what());
                }
            }
            continue;
        }
        if (!alpha) {
            std::size_t n = has_space(t) ? split_tokens(t, false).size() : t.size();
            if (n > std::size_t(kMaxAlternatives))
                fail("more than 16 alternatives");
            alpha = Alphabet::standard(int(n));
        }
        LinearOrder r;
        try {
            r = alpha->parse_order(t);
        } catch (const Error& e) {
            fail(e.what());
        }
        if (r.universe() != full_set(alpha->size()))
            fail("order '" + std::string(t) + "' does not rank every alternative");
        if (!seen.insert(r).second) {
            warnings.push_back("line " + std::to_string(lineno) + ": duplicate order " + std::string(t) + " ignored");
            continue;
        }
        orders.push_back(r);
    }
    if (orders.empty())
        throw Error(ErrorKind::Parse, "domain file has no orders");
    return DomainFile{*alpha, Domain(std::move(orders)), std::move(warnings)};
}

DomainFile read_domain_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_domain_text(ss.str());
}

std::string format_domain_file(const Domain& d, const Alphabet& a)
{
    std::string out = "# alphabet:";
    for (int i = 0; i < a.size(); ++i)
        out += " " + a.label(Alt(i));
    out += "\n";
    for (const auto& r : d)
        out += a.format(r) + "\n";
    return out;
}

std::string format_domain_inline(const Domain& d, const Alphabet& a)
{
    std::string out;
    for (const auto& r : d) {
        if (!out.empty())
            out += a.compact() ? " " : " | ";
        out += a.format(r);
    }
    return out;
}

namespace {

std::string triple_label(const Triple& t, const Alphabet& a)
{
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i && !a.compact())
            s += ' ';
        s += a.label(t[i]);
    }
    return s;
}

nlohmann::json pair_json(const std::optional<OrderPair>& p, const Alphabet& a)
{
    if (!p)
        return nullptr;
    return nlohmann::json::array({a.format(p->first), a.format(p->second)});
}

} // namespace

nlohmann::json classify_json(const Domain& d, const Alphabet& a, int jobs)
{
    Classification c = classify(d);
    auto conn = connectivity_report(d, jobs);
    nlohmann::json j;
    j["condorcet"] = c.is_condorcet;
    j["peak_pit"] = c.is_peak_pit;
    j["never_top"] = c.is_never_top;
    j["never_bottom"] = c.is_never_bottom;
    j["never_middle"] = c.is_never_middle;
    j["maximal"] = c.is_condorcet && is_maximal_condorcet(d).maximal;
    j["maximal_peak_pit"] = c.is_peak_pit && is_maximal_peak_pit(d).maximal;
    j["size"] = d.size();
    auto conds = nlohmann::json::array();
    for (const auto& nc : c.conditions)
        conds.push_back({{"triple", triple_label(nc.triple, a)}, {"banned", a.label(nc.banned)}, {"k", nc.position}});
    j["conditions"] = conds;
    j["connected"] = conn.connected;
    j["directly_connected"] = conn.directly_connected;
    j["witnesses"] = {{"disconnected_pair", pair_json(conn.witness_disconnected_pair, a)},
                      {"non_geodesic_pair", pair_json(conn.witness_non_geodesic_pair, a)}};
    return j;
}

std::string census_csv(const std::vector<CensusRow>& rows, const Alphabet& a)
{
    auto b = [](bool x) { return x ? "true" : "false"; };
    std::string out = "canonical_domain,size,peak_pit,connected,directly_connected,maximal\n";
    for (const auto& r : rows)
        out += format_domain_inline(r.domain, a) + "," + std::to_string(r.size) + "," + b(r.peak_pit) + ","
            + b(r.connected) + "," + b(r.directly_connected) + "," + b(r.maximal_condorcet) + "\n";
    return out;
}

nlohmann::json census_json(const std::vector<CensusRow>& rows, const Alphabet& a)
{
    auto arr = nlohmann::json::array();
    std::size_t pp = 0, max_size = 0;
    for (const auto& r : rows) {
        arr.push_back({{"canonical_domain", format_domain_inline(r.domain, a)},
                       {"size", r.size},
                       {"peak_pit", r.peak_pit},
                       {"connected", r.connected},
                       {"directly_connected", r.directly_connected},
                       {"maximal", r.maximal_condorcet},
                       {"maximal_peak_pit", r.maximal_peak_pit}});
        pp += r.peak_pit;
        max_size = std::max(max_size, r.size);
    }
    return {{"rows", arr}, {"summary", {{"count", rows.size()}, {"peak_pit", pp}, {"max_size", max_size}}}};
}

nlohmann::json theorem_json(const TheoremReport& rep)
{
    return {{"theorem", rep.theorem},
            {"n", rep.n},
            {"mode", rep.mode},
            {"checked", rep.checked},
            {"counterexamples", rep.counterexamples},
            {"pass", rep.pass()}};
}

} // namespace cdom
