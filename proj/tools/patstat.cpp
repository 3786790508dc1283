// patstat: enumerate pattern-avoiding permutations, compute their
// statistics, print joint distributions, apply the bijections f and g, and
// run the verification suite.
//
// Exit status: 0 success, 1 data or verification failure, 2 usage error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "patstat/patstat.hpp"

namespace {

using namespace patstat;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::plain;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw usage_error("unknown format '" + s + "'");
}

Family require_family(const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw usage_error("family must be F or G");
    return *f;
}

nlohmann::json integer_json(const Integer& v) {
    if (v <= Integer(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
    return v.str();
}

std::string csv_quote(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

struct Options {
    std::string pair;
    int n = 0;
    int n_max = -1;
    std::string family = "G";
    std::string format = "plain";
    std::string dump_format = "json";
    std::string which;
    std::string perm;
    std::string scope = "all";
    bool oracle = false;
};

int cmd_count(const Options& o) {
    const auto pair = PatternPair::parse(o.pair);
    const auto count = class_count(pair, o.n);
    switch (parse_format(o.format)) {
        case Format::plain: std::cout << count << '\n'; break;
        case Format::json:
            std::cout << nlohmann::json{{"pair", pair.to_string()}, {"n", o.n}, {"count", integer_json(count)}}.dump()
                      << '\n';
            break;
        case Format::csv: std::cout << "pair,n,count\n" << csv_quote(pair.to_string()) << ',' << o.n << ',' << count << '\n'; break;
    }
    return 0;
}

int cmd_enumerate(const Options& o) {
    const auto pair = PatternPair::parse(o.pair);
    const auto members = enumerate_class(pair, o.n);
    switch (parse_format(o.format)) {
        case Format::plain:
            for (const auto& pi : members) std::cout << pi.to_string() << '\n';
            break;
        case Format::json: {
            auto arr = nlohmann::json::array();
            for (const auto& pi : members) arr.push_back(std::vector<int>(pi.values().begin(), pi.values().end()));
            std::cout << arr.dump() << '\n';
            break;
        }
        case Format::csv:
            for (const auto& pi : members) {
                std::string line;
                for (int v : pi.values()) line += (line.empty() ? "" : ",") + std::to_string(v);
                std::cout << line << '\n';
            }
            break;
    }
    return 0;
}

int cmd_stats(const Options& o) {
    const auto pi = Permutation::parse(o.perm);
    const auto sv = stat_vector(pi);
    switch (parse_format(o.format)) {
        case Format::plain:
            for (Stat s : kAllStats) {
                std::string name(stat_name(s));
                name.resize(6, ' ');
                std::cout << name << sv.get(s) << '\n';
            }
            break;
        case Format::json: std::cout << nlohmann::json(sv).dump() << '\n'; break;
        case Format::csv: {
            std::string header, row;
            for (Stat s : kAllStats) {
                header += (header.empty() ? "" : ",") + std::string(stat_name(s));
                row += (row.empty() ? "" : ",") + std::to_string(sv.get(s));
            }
            std::cout << header << '\n' << row << '\n';
            break;
        }
    }
    return 0;
}

int cmd_table(const Options& o) {
    const auto pair = PatternPair::parse(o.pair);
    const auto family = require_family(o.family);
    const MultiPoly coeff =
        o.oracle ? brute_distribution(pair, o.n, family) : expand(gf_for(pair, family), o.n).coeffs[o.n];
    switch (parse_format(o.format)) {
        case Format::plain: std::cout << to_string(coeff) << '\n'; break;
        case Format::json: std::cout << poly_to_json(coeff).dump() << '\n'; break;
        case Format::csv:
            std::cout << "n,monomial,coefficient\n";
            for (const auto& [e, c] : terms_in_print_order(coeff))
                std::cout << o.n << ',' << monomial_to_string(e) << ',' << c << '\n';
            break;
    }
    return 0;
}

int cmd_map(const Options& o) {
    const auto pi = Permutation::parse(o.perm);
    Permutation image;
    if (o.which == "f") {
        image = map_f(pi);
    } else if (o.which == "g") {
        image = map_g(pi);
    } else {
        throw usage_error("--which must be f or g");
    }
    switch (parse_format(o.format)) {
        case Format::plain: std::cout << image.to_string() << '\n'; break;
        case Format::json:
            std::cout << nlohmann::json{{"which", o.which}, {"input", pi.to_string()}, {"output", image.to_string()}}.dump()
                      << '\n';
            break;
        case Format::csv: std::cout << "input,output\n" << pi.to_string() << ',' << image.to_string() << '\n'; break;
    }
    return 0;
}

int cmd_verify(const Options& o) {
    const auto scope = parse_scope(o.scope);
    if (!scope) throw usage_error("unknown scope '" + o.scope + "'");
    SuiteLimits limits;
    if (o.n_max >= 0) limits = SuiteLimits{o.n_max, o.n_max, o.n_max, o.n_max, o.n_max};
    bool all_pass = true;
    for (const auto& report : run_suite(*scope, limits)) {
        all_pass = all_pass && report.pass();
        std::cout << report_to_json(report).dump() << '\n' << std::flush;
    }
    return all_pass ? 0 : kExitData;
}

int cmd_catalog_dump(const Options& o) {
    switch (parse_format(o.dump_format)) {
        case Format::json: std::cout << catalog_to_json().dump(2) << '\n'; break;
        case Format::plain:
        case Format::csv:
            for (const auto& e : Catalog::instance().joint_entries()) {
                std::cout << family_name(e.family) << '(' << e.pair.to_string() << ") = (" << to_string(e.gf.num())
                          << ") / (" << to_string(e.gf.den()) << ')';
                if (e.correction != Correction::none) std::cout << "  [oracle-corrected: " << correction_name(e.correction) << ']';
                std::cout << '\n';
            }
            for (const auto& e : Catalog::instance().single_stat_entries()) {
                std::cout << stat_name(e.stat) << '(' << e.pair.to_string() << ") = (" << to_string(e.gf.num())
                          << ") / (" << to_string(e.gf.den()) << ')';
                if (e.correction != Correction::none) std::cout << "  [oracle-corrected: " << correction_name(e.correction) << ']';
                std::cout << '\n';
            }
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statistics on permutations avoiding two length-3 patterns"};
    app.require_subcommand(1);
    Options o;

    const auto add_pair = [&](CLI::App* cmd) { cmd->add_option("--pair", o.pair, "two patterns, e.g. 231,312")->required(); };
    const auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", o.n, "permutation length")->required()->check(CLI::NonNegativeNumber);
    };
    const auto add_format = [&](CLI::App* cmd, std::string& target) {
        cmd->add_option("--format", target, "json|csv|plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    auto* count = app.add_subcommand("count", "size of S_n(tau,rho) from the counting formula");
    add_pair(count);
    add_n(count);
    add_format(count, o.format);

    auto* enumerate = app.add_subcommand("enumerate", "list S_n(tau,rho) in lexicographic order");
    add_pair(enumerate);
    add_n(enumerate);
    add_format(enumerate, o.format);

    auto* stats = app.add_subcommand("stats", "the eight statistics of one permutation");
    stats->add_option("--perm", o.perm, "space-separated one-line notation")->required();
    add_format(stats, o.format);

    auto* table = app.add_subcommand("table", "joint distribution over S_n(tau,rho)");
    add_pair(table);
    add_n(table);
    table->add_option("--family", o.family, "F (six statistics) or G (asc,des,mna,mnd)")
        ->check(CLI::IsMember({"F", "G"}));
    add_format(table, o.format);
    table->add_flag("--oracle", o.oracle, "brute-force enumeration instead of the generating function");

    auto* map = app.add_subcommand("map", "apply the bijection f or g");
    map->add_option("--which", o.which, "f or g")->required()->check(CLI::IsMember({"f", "g"}));
    map->add_option("--perm", o.perm, "space-separated one-line notation")->required();
    add_format(map, o.format);

    auto* verify = app.add_subcommand("verify", "run the verification suite, one JSON report per line");
    verify->add_option("--scope", o.scope, "all|counts|G|F|symmetry|single|bijections");
    verify->add_option("--n-max", o.n_max, "override every size limit")->check(CLI::NonNegativeNumber);

    auto* dump = app.add_subcommand("catalog-dump", "print every stored generating function");
    add_format(dump, o.dump_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        if (app.got_subcommand(count)) return cmd_count(o);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
        if (app.got_subcommand(stats)) return cmd_stats(o);
        if (app.got_subcommand(table)) return cmd_table(o);
        if (app.got_subcommand(map)) return cmd_map(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(dump)) return cmd_catalog_dump(o);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const invalid_input& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const not_in_class& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
