#pragma once

/**
 * @file verify.hpp
 * @brief Brute-force distributions over avoidance classes and exact
 * comparisons against the catalog and the bijections.
 *
 * Every comparison is exact polynomial equality. A report fails at the
 * smallest n where the two sides differ and records both sides.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "patstat/bijections.hpp"
#include "patstat/catalog.hpp"
#include "patstat/permutation.hpp"
#include "patstat/polynomial.hpp"
#include "patstat/stats.hpp"

namespace patstat {

/// The family's marker monomial for one permutation, e.g. p^asc q^des y^mna z^mnd.
inline MultiPoly marker_monomial(const StatVector& sv, Family family) {
    Exponents e{};
    const auto mark = [&](Stat s) { exp_of(e, stat_var(s)) = static_cast<std::uint16_t>(sv.get(s)); };
    mark(Stat::asc);
    mark(Stat::des);
    if (family == Family::F) {
        mark(Stat::lrmax);
        mark(Stat::rlmax);
        mark(Stat::lrmin);
        mark(Stat::rlmin);
    } else {
        mark(Stat::mna);
        mark(Stat::mnd);
    }
    return MultiPoly::monomial(e, 1);
}

inline MultiPoly distribution_of(const std::vector<Permutation>& perms, Family family) {
    MultiPoly total;
    for (const auto& pi : perms) total += marker_monomial(stat_vector(pi), family);
    return total;
}

/// Sum over S_n(tau, rho) of the family's marker monomial.
inline MultiPoly brute_distribution(const PatternPair& pair, int n, Family family) {
    return distribution_of(enumerate_class(pair, n), family);
}

struct Discrepancy {
    int n = 0;
    MultiPoly expected;
    MultiPoly actual;
};

struct VerifyReport {
    std::string check;
    std::optional<PatternPair> pair;
    std::optional<Family> family;
    std::string detail;
    int n_min = 0;
    int n_max = 0;
    std::optional<Discrepancy> first_discrepancy;

    bool pass() const noexcept { return !first_discrepancy.has_value(); }
};

inline nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json j{{"check", r.check},
                     {"pair", r.pair ? nlohmann::json(r.pair->to_string()) : nlohmann::json(nullptr)},
                     {"family", r.family ? nlohmann::json(std::string(family_name(*r.family)))
                                         : nlohmann::json(nullptr)},
                     {"n_range", {r.n_min, r.n_max}},
                     {"status", r.pass() ? "pass" : "fail"}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.first_discrepancy) {
        j["first_discrepancy"] = {{"n", r.first_discrepancy->n},
                                  {"expected", to_string(r.first_discrepancy->expected)},
                                  {"actual", to_string(r.first_discrepancy->actual)}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    return j;
}

/// Compares the series of `gf` with the brute-force distribution of `pair`.
inline VerifyReport check_gf_against(const RationalGF& gf, const PatternPair& pair, Family family, int n_max,
                                     std::string check = "gf") {
    VerifyReport report{std::move(check), pair, family, {}, 0, n_max, std::nullopt};
    const auto series = expand(gf, n_max);
    for (int n = 0; n <= n_max; ++n) {
        auto expected = brute_distribution(pair, n, family);
        if (expected != series.coeffs[n]) {
            report.first_discrepancy = Discrepancy{n, std::move(expected), series.coeffs[n]};
            break;
        }
    }
    return report;
}

inline VerifyReport check_gf(const PatternPair& pair, Family family, int n_max) {
    return check_gf_against(gf_for(pair, family), pair, family, n_max);
}

/// The canonical closed form pushed through op's variable recipe must match
/// the image class of op.
inline VerifyReport check_symmetry(const PatternPair& canonical, SymOp op, Family family, int n_max) {
    const auto gf = canonical_gf(canonical, family).rename(var_recipe(family, op));
    auto report = check_gf_against(gf, apply(op, canonical), family, n_max, "symmetry");
    report.detail = canonical.to_string() + " via " + std::string(sym_op_name(op));
    return report;
}

/// The single-statistic form against the joint form specialized to that
/// statistic, as series up to n_max.
inline VerifyReport check_single_stat(const PatternPair& pair, Stat stat, int n_max) {
    const Family family = stat_family(stat);
    VerifyReport report{"single-statistic", pair, family, std::string(stat_name(stat)), 0, n_max, std::nullopt};
    const auto single = expand(single_stat_gf(pair, stat), n_max);
    const auto joint = expand(specialize(canonical_gf(pair, family), family, stat), n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (single.coeffs[n] != joint.coeffs[n]) {
            report.first_discrepancy = Discrepancy{n, joint.coeffs[n], single.coeffs[n]};
            break;
        }
    }
    return report;
}

inline std::vector<VerifyReport> check_single_stats(int n_max) {
    std::vector<VerifyReport> out;
    for (const auto& e : Catalog::instance().single_stat_entries()) out.push_back(check_single_stat(e.pair, e.stat, n_max));
    return out;
}

/// |S_n(tau, rho)| against the counting formula, all 15 pairs.
inline VerifyReport check_counts(int n_max) {
    VerifyReport report{"counts", std::nullopt, std::nullopt, {}, 0, n_max, std::nullopt};
    for (const auto& pair : all_pattern_pairs()) {
        for (int n = 0; n <= n_max; ++n) {
            const Integer actual = enumerate_class(pair, n).size();
            const Integer expected = class_count(pair, n);
            if (actual != expected) {
                report.pair = pair;
                report.first_discrepancy = Discrepancy{n, expected, actual};
                return report;
            }
        }
    }
    return report;
}

namespace detail {

struct Quadruple {
    int asc, des, mna, mnd;
    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

inline Quadruple quadruple(const Permutation& pi) { return {asc(pi), des(pi), mna(pi), mnd(pi)}; }
inline Quadruple swapped(const Quadruple& q) { return {q.des, q.asc, q.mnd, q.mna}; }

inline MultiPoly quadruple_monomial(const Quadruple& q) {
    StatVector sv;
    sv.asc = q.asc;
    sv.des = q.des;
    sv.mna = q.mna;
    sv.mnd = q.mnd;
    return marker_monomial(sv, Family::G);
}

/// Fails at the first n where some member's image under `map` does not
/// carry the expected quadruple.
template <class Map, class Expect>
VerifyReport pointwise(std::string check, const PatternPair& domain, int n_min, int n_max, Map map, Expect expect) {
    VerifyReport report{std::move(check), domain, Family::G, {}, n_min, n_max, std::nullopt};
    for (int n = n_min; n <= n_max; ++n) {
        for (const auto& pi : enumerate_class(domain, n)) {
            const auto image = map(pi);
            const auto want = expect(pi);
            if (quadruple(image) != want) {
                report.first_discrepancy = Discrepancy{n, quadruple_monomial(want), quadruple_monomial(quadruple(image))};
                report.detail = "at " + pi.to_string();
                return report;
            }
        }
    }
    return report;
}

}  // namespace detail

/// The five (asc,des,mna,mnd) equidistributions, each checked through its
/// bijection, plus the structural properties of f and g.
inline std::vector<VerifyReport> check_quadruple_equidistributions(int n_max) {
    const auto layered = PatternPair::parse("231,312");
    const auto runs = PatternPair::parse("213,231");
    const auto unimodal = PatternPair::parse("213,312");
    const auto exchange = [](const Permutation& pi) { return detail::swapped(detail::quadruple(pi)); };
    const auto same = [](const Permutation& pi) { return detail::quadruple(pi); };

    std::vector<VerifyReport> out;
    out.push_back(detail::pointwise("f-exchanges-quadruple", layered, 1, n_max, map_f, exchange));
    out.push_back(detail::pointwise("complement-exchanges-quadruple", runs, 0, n_max,
                                    [](const Permutation& pi) { return complement(pi); }, exchange));
    out.push_back(detail::pointwise("reverse-exchanges-quadruple", unimodal, 0, n_max,
                                    [](const Permutation& pi) { return reverse(pi); }, exchange));
    out.push_back(detail::pointwise("g-exchanges-quadruple", layered, 1, n_max, map_g, exchange));
    out.push_back(detail::pointwise("g-after-f-preserves-quadruple", layered, 1, n_max,
                                    [](const Permutation& pi) { return map_g(map_f(pi)); }, same));

    // Multiset form of the last statement, independent of the maps.
    VerifyReport multiset{"quadruple-equidistributed-231,312-vs-213,231", std::nullopt, Family::G, {}, 0, n_max,
                          std::nullopt};
    for (int n = 0; n <= n_max && multiset.pass(); ++n) {
        auto a = brute_distribution(layered, n, Family::G);
        auto b = brute_distribution(runs, n, Family::G);
        if (a != b) multiset.first_discrepancy = Discrepancy{n, std::move(a), std::move(b)};
    }
    out.push_back(std::move(multiset));

    VerifyReport involution{"f-involution-without-fixed-points", layered, std::nullopt, {}, 1, n_max, std::nullopt};
    for (int n = 1; n <= n_max && involution.pass(); ++n) {
        for (const auto& pi : enumerate_class(layered, n)) {
            const auto image = map_f(pi);
            const bool ok = map_f(image) == pi && (n == 1 || image != pi);
            if (!ok) {
                involution.first_discrepancy = Discrepancy{n, MultiPoly(1), MultiPoly(0)};
                involution.detail = "at " + pi.to_string();
                break;
            }
        }
    }
    out.push_back(std::move(involution));

    VerifyReport bijection{"g-bijection-onto-213,231-with-odd-fixed-point", layered, std::nullopt, {}, 1, n_max,
                           std::nullopt};
    for (int n = 1; n <= n_max && bijection.pass(); ++n) {
        std::vector<Permutation> images;
        int fixed = 0;
        for (const auto& pi : enumerate_class(layered, n)) {
            images.push_back(map_g(pi));
            fixed += images.back() == pi;
        }
        std::sort(images.begin(), images.end());
        const int want_fixed = n % 2;
        if (images != enumerate_class(runs, n) || fixed != want_fixed) {
            bijection.first_discrepancy = Discrepancy{n, MultiPoly(want_fixed), MultiPoly(fixed)};
            bijection.detail = images != enumerate_class(runs, n) ? "image is not S_n(213,231)" : "fixed points";
        }
    }
    out.push_back(std::move(bijection));
    return out;
}

struct SuiteLimits {
    int counts = 12;
    int g_family = 10;
    int f_family = 9;
    int single_statistic = 12;
    int bijections = 12;
};

enum class Scope { all, counts, g_family, f_family, symmetry, single_statistic, bijections };

inline std::optional<Scope> parse_scope(std::string_view s) {
    static const std::map<std::string_view, Scope> names{
        {"all", Scope::all},         {"counts", Scope::counts},
        {"G", Scope::g_family},      {"F", Scope::f_family},
        {"symmetry", Scope::symmetry}, {"single", Scope::single_statistic},
        {"bijections", Scope::bijections}};
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

/// Reports in a fixed order: counts, G per pair, F per pair, symmetries,
/// single-statistic forms, bijections.
inline std::vector<VerifyReport> run_suite(Scope scope, const SuiteLimits& limits = {}) {
    const auto wanted = [&](Scope s) { return scope == Scope::all || scope == s; };
    std::vector<VerifyReport> out;
    if (wanted(Scope::counts)) out.push_back(check_counts(limits.counts));
    for (auto [s, family, n_max] : {std::tuple{Scope::g_family, Family::G, limits.g_family},
                                    std::tuple{Scope::f_family, Family::F, limits.f_family}}) {
        if (!wanted(s)) continue;
        for (const auto& pair : all_pattern_pairs())
            if (!is_finite_pair(pair)) out.push_back(check_gf(pair, family, n_max));
    }
    if (wanted(Scope::symmetry)) {
        for (Family family : {Family::G, Family::F}) {
            const int n_max = family == Family::G ? limits.g_family : limits.f_family;
            for (const auto& canonical : canonical_pairs()) {
                if (is_finite_pair(canonical)) continue;
                for (SymOp op : {SymOp::r, SymOp::c, SymOp::rc}) out.push_back(check_symmetry(canonical, op, family, n_max));
            }
        }
    }
    if (wanted(Scope::single_statistic)) {
        auto reports = check_single_stats(limits.single_statistic);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    if (wanted(Scope::bijections)) {
        auto reports = check_quadruple_equidistributions(limits.bijections);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

}  // namespace patstat
