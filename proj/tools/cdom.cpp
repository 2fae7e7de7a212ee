#include "cdom/builder.hpp"
#include "cdom/connectivity.hpp"
#include "cdom/domains.hpp"
#include "cdom/enumerate.hpp"
#include "cdom/io.hpp"
#include "cdom/paths.hpp"
#include "cdom/wiring.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cdom;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2;

// Labels come from --labels when given, else a..: sized by the longest order.
Alphabet alphabet_for(const std::string& labels, std::initializer_list<std::string> orders)
{
    if (!labels.empty()) {
        std::vector<std::string> v;
        std::stringstream ss(labels);
        std::string tok;
        while (std::getline(ss, tok, ','))
            v.push_back(tok);
        return Alphabet(v);
    }
    std::size_t n = 0;
    for (const auto& o : orders) {
        std::size_t k = 0;
        for (char c : o)
            k += c != ' ';
        n = std::max(n, k);
    }
    return Alphabet::standard(int(n));
}

std::string subset_text(AltSet b, const Alphabet& a)
{
    std::string s;
    for (Alt x : members(b))
        s += (s.empty() || a.compact() ? "" : " ") + a.label(x);
    return s;
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

DomainFile load_domain(const std::string& path)
{
    DomainFile df = parse_domain_text(read_input(path));
    for (const auto& w : df.warnings)
        std::cerr << "warning: " << w << "\n";
    return df;
}

int jobs_or_default(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Condorcet domain toolkit: classification, enumeration, geodesic construction"};
    app.require_subcommand(1);
    std::function<int()> action;

    int jobs = 0;

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "JSON report for a domain file");
    std::string classify_file;
    classify_cmd->add_option("file", classify_file, "domain file, - for stdin")->required();
    classify_cmd->add_option("--jobs", jobs, "worker threads (default: CDOM_JOBS or all cores)");
    classify_cmd->callback([&] {
        action = [&] {
            DomainFile df = load_domain(classify_file);
            std::cout << classify_json(df.domain, df.alphabet, jobs_or_default(jobs)).dump(2) << "\n";
            return kOk;
        };
    });

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "census of maximal Condorcet domains");
    int enum_n = 0;
    bool fold_iso = false, allow_n6 = false;
    std::string enum_format = "csv";
    enum_cmd->add_option("--n", enum_n, "number of alternatives (3..5)")->required();
    enum_cmd->add_flag("--fold-iso", fold_iso, "one representative per relabeling class");
    enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"csv", "json"}));
    enum_cmd->add_option("--jobs", jobs);
    enum_cmd->add_flag("--allow-n6", allow_n6, "permit n = 6 (slow)");
    enum_cmd->callback([&] {
        action = [&] {
            EnumerateOptions eo{fold_iso, jobs_or_default(jobs), allow_n6};
            auto rows = enumerate_maximal(enum_n, eo);
            Alphabet a = Alphabet::standard(enum_n);
            if (enum_format == "json")
                std::cout << census_json(rows, a).dump(2) << "\n";
            else
                std::cout << census_csv(rows, a);
            return kOk;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a theorem on all (or sampled) maximal domains");
    int verify_n = 0, theorem = 0;
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    bool exhaustive = false, verify_json = false;
    verify_cmd->add_option("--n", verify_n)->required();
    verify_cmd->add_option("--theorem", theorem)->required()->check(CLI::Range(1, 3));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--samples", samples, "n = 5 sampled mode");
    verify_cmd->add_flag("--exhaustive", exhaustive, "full enumeration at n = 5");
    verify_cmd->add_flag("--json", verify_json);
    verify_cmd->add_option("--jobs", jobs);
    verify_cmd->callback([&] {
        action = [&] {
            VerifyOptions vo{jobs_or_default(jobs), seed, samples, exhaustive};
            TheoremReport rep = theorem == 1 ? verify_theorem_1(verify_n, vo)
                : theorem == 2              ? verify_theorem_2(verify_n, vo)
                                            : verify_theorem_3(verify_n, vo);
            if (verify_json) {
                std::cout << theorem_json(rep).dump(2) << "\n";
            } else {
                std::cout << (rep.pass() ? "PASS" : "FAIL") << " theorem " << rep.theorem << " n=" << rep.n << " "
                          << rep.mode << " checked=" << rep.checked
                          << " counterexamples=" << rep.counterexamples.size() << "\n";
                for (const auto& c : rep.counterexamples)
                    std::cout << "  " << c << "\n";
            }
            return rep.pass() ? kOk : kViolation;
        };
    });

    // build
    auto* build_cmd = app.add_subcommand("build", "geodesic whose union with the domain stays peak-pit");
    std::string build_file, from, to, subset;
    bool trace = false;
    build_cmd->add_option("--domain", build_file)->required();
    build_cmd->add_option("--from", from)->required();
    build_cmd->add_option("--to", to)->required();
    build_cmd->add_option("--subset", subset, "restrict to these alternatives (default: all)");
    build_cmd->add_flag("--trace", trace, "print every induction stage");
    build_cmd->callback([&] {
        action = [&] {
            DomainFile df = load_domain(build_file);
            const Alphabet& a = df.alphabet;
            LinearOrder r = a.parse_order(from), t = a.parse_order(to);
            AltSet b = subset.empty() ? df.domain.universe() : a.parse_subset(subset);
            std::vector<TraceLine> lines;
            BuildOptions bo;
            if (trace)
                bo.trace = &lines;
            Path g = build_geodesic(df.domain, r, t, b, bo);
            for (const auto& l : lines)
                std::cout << "trace " << subset_text(l.B, a) << " " << l.stage << " " << a.format(l.seq) << "\n";
            std::cout << "geodesic: " << a.format(g) << "\n";
            std::cout << "swaps: " << a.format(switch_seq(g)) << "\n";
            bool ok = is_geodesic(g) && is_peak_pit(domain_with_path(restrict_domain(df.domain, b), g));
            std::cout << "peak-pit with geodesic: " << (ok ? "yes" : "no") << "\n";
            return ok ? kOk : kViolation;
        };
    });

    // geodesics
    auto* geo_cmd = app.add_subcommand("geodesics", "list geodesics between two orders");
    std::string geo_file, geo_labels;
    std::size_t limit = 0;
    geo_cmd->add_option("--from", from)->required();
    geo_cmd->add_option("--to", to)->required();
    geo_cmd->add_option("--domain", geo_file, "keep only geodesics inside this domain");
    geo_cmd->add_option("--labels", geo_labels, "comma-separated alternative names");
    geo_cmd->add_option("--limit", limit, "stop after this many (0: no limit)");
    geo_cmd->callback([&] {
        action = [&] {
            std::optional<DomainFile> df;
            if (!geo_file.empty())
                df = load_domain(geo_file);
            Alphabet a = df ? df->alphabet : alphabet_for(geo_labels, {from, to});
            LinearOrder r = a.parse_order(from), t = a.parse_order(to);
            auto paths = all_geodesics(r, t, df ? &df->domain : nullptr,
                                       limit ? limit : std::numeric_limits<std::size_t>::max());
            for (const auto& p : paths)
                std::cout << a.format(p) << "\n";
            return kOk;
        };
    });

    // wiring
    auto* wiring_cmd = app.add_subcommand("wiring", "render or parse wiring diagrams");
    wiring_cmd->require_subcommand(1);
    auto* render_cmd = wiring_cmd->add_subcommand("render", "draw a switching sequence");
    std::string start, swaps, wiring_format = "ascii", wiring_labels, wiring_file;
    render_cmd->add_option("--start", start)->required();
    render_cmd->add_option("--swaps", swaps, "e.g. (a,b),(a,c)")->required();
    render_cmd->add_option("--format", wiring_format)->check(CLI::IsMember({"ascii", "svg"}));
    render_cmd->add_option("--labels", wiring_labels);
    render_cmd->callback([&] {
        action = [&] {
            Alphabet a = alphabet_for(wiring_labels, {start});
            SwitchSeq s{a.parse_order(start), a.parse_swaps(swaps)};
            std::cout << render_wiring(s, wiring_format == "svg" ? WiringFormat::Svg : WiringFormat::Ascii, a);
            return kOk;
        };
    });
    auto* parse_cmd = wiring_cmd->add_subcommand("parse", "read an ASCII diagram back");
    parse_cmd->add_option("file", wiring_file, "diagram file, - for stdin")->required();
    parse_cmd->add_option("--labels", wiring_labels);
    parse_cmd->callback([&] {
        action = [&] {
            std::string text = read_input(wiring_file);
            Alphabet a = Alphabet::standard(kMaxAlternatives);
            if (!wiring_labels.empty())
                a = alphabet_for(wiring_labels, {});
            SwitchSeq s = parse_ascii(text, a);
            std::cout << "start: " << a.format(s.start) << "\n";
            std::cout << "swaps: " << a.format(s) << "\n";
            return kOk;
        };
    });

    // equivalent
    auto* eq_cmd = app.add_subcommand("equivalent", "are two geodesics related by commuting disjoint swaps");
    std::string path1, path2, eq_labels;
    eq_cmd->add_option("path1", path1, "orders joined by ->")->required();
    eq_cmd->add_option("path2", path2)->required();
    eq_cmd->add_option("--labels", eq_labels);
    eq_cmd->callback([&] {
        action = [&] {
            std::string first = path1.substr(0, path1.find("->"));
            Alphabet a = alphabet_for(eq_labels, {first});
            Path p = a.parse_path(path1), q = a.parse_path(path2);
            std::cout << (paths_equivalent(p, q) ? "equivalent" : "not equivalent") << "\n";
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ConstructionBug:
        case ErrorKind::GenerationFailure: return kViolation;
        default: return kUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
