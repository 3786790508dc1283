#pragma once

/**
 * @file catalog.hpp
 * @brief Closed-form generating functions for permutations avoiding two
 * length-3 patterns, the counting formulas, and the reverse/complement
 * symmetries that carry five canonical pairs to all fifteen.
 *
 *   F(x,p,q,u,v,s,t) marks asc, des, lrmax, rlmax, lrmin, rlmin.
 *   G(x,p,q,y,z)     marks asc, des, mna, mnd.
 *
 * Every printed formula is stored once, verbatim, as text parsed by
 * parse_poly. Two printed forms do not expand to the distribution as they
 * stand; they keep their printed text and carry a Correction that the
 * brute-force oracle determined (see Correction).
 */

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "patstat/error.hpp"
#include "patstat/permutation.hpp"
#include "patstat/polynomial.hpp"
#include "patstat/stats.hpp"

namespace patstat {

enum class Family { F, G };

inline constexpr std::string_view family_name(Family f) { return f == Family::F ? "F" : "G"; }

inline std::optional<Family> parse_family(std::string_view name) {
    if (name == "F" || name == "f") return Family::F;
    if (name == "G" || name == "g") return Family::G;
    return std::nullopt;
}

/// Marker variables of a family, in the order of its argument list.
inline std::vector<Var> family_markers(Family f) {
    if (f == Family::F) return {Var::p, Var::q, Var::u, Var::v, Var::s, Var::t};
    return {Var::p, Var::q, Var::y, Var::z};
}

inline constexpr Var stat_var(Stat s) {
    switch (s) {
        case Stat::asc: return Var::p;
        case Stat::des: return Var::q;
        case Stat::lrmax: return Var::u;
        case Stat::rlmax: return Var::v;
        case Stat::lrmin: return Var::s;
        case Stat::rlmin: return Var::t;
        case Stat::mna: return Var::y;
        case Stat::mnd: return Var::z;
    }
    return Var::x;
}

/// The family whose closed form carries the statistic (asc/des live in both;
/// their single-statistic forms are specializations of G).
inline constexpr Family stat_family(Stat s) {
    switch (s) {
        case Stat::lrmax:
        case Stat::rlmax:
        case Stat::lrmin:
        case Stat::rlmin: return Family::F;
        default: return Family::G;
    }
}

// ---------------------------------------------------------------------------
// Symmetries

enum class SymOp { identity, r, c, rc };

inline constexpr std::array<SymOp, 4> kAllSymOps{SymOp::identity, SymOp::r, SymOp::c, SymOp::rc};

inline constexpr std::string_view sym_op_name(SymOp op) {
    constexpr std::array<std::string_view, 4> names{"identity", "r", "c", "rc"};
    return names[static_cast<int>(op)];
}

inline Permutation apply(SymOp op, const Permutation& pi) {
    switch (op) {
        case SymOp::identity: return pi;
        case SymOp::r: return reverse(pi);
        case SymOp::c: return complement(pi);
        case SymOp::rc: return complement(reverse(pi));
    }
    return pi;
}

inline PatternPair apply(SymOp op, const PatternPair& pair) {
    return PatternPair(apply(op, pair.first()), apply(op, pair.second()));
}

namespace detail {

// GF_{(op tau, op rho)}(x, a1, a2, ...) = GF_{(tau, rho)}(x, b1, b2, ...):
// each row lists the b's, i.e. the substitution applied to the canonical
// form's argument list.
struct RecipeRow {
    Family family;
    SymOp op;
    std::string_view arguments;
};

inline constexpr std::array<RecipeRow, 8> kRecipes{{
    {Family::F, SymOp::identity, "xpquvst"},
    {Family::F, SymOp::r, "xqpvuts"},
    {Family::F, SymOp::c, "xqpstuv"},
    {Family::F, SymOp::rc, "xpqtsvu"},
    {Family::G, SymOp::identity, "xpqyz"},
    {Family::G, SymOp::r, "xqpzy"},
    {Family::G, SymOp::c, "xqpzy"},
    {Family::G, SymOp::rc, "xpqyz"},
}};

}  // namespace detail

inline VarMap var_recipe(Family family, SymOp op) {
    const std::string_view formal = family == Family::F ? "xpquvst" : "xpqyz";
    for (const auto& row : detail::kRecipes) {
        if (row.family != family || row.op != op) continue;
        VarMap map = identity_var_map();
        for (std::size_t i = 0; i < formal.size(); ++i)
            map[static_cast<std::size_t>(*parse_var(formal[i]))] = *parse_var(row.arguments[i]);
        return map;
    }
    return identity_var_map();
}

struct SymmetryTransform {
    SymOp op = SymOp::identity;
    VarMap var_recipe = identity_var_map();
};

struct CanonicalReduction {
    PatternPair canonical_pair;
    SymmetryTransform transform;
};

/// First pair of each class in the counting formula: five with closed forms
/// plus the finite class {123,321}.
inline const std::vector<PatternPair>& canonical_pairs() {
    static const std::vector<PatternPair> pairs{
        PatternPair::parse("123,132"), PatternPair::parse("132,321"), PatternPair::parse("231,312"),
        PatternPair::parse("213,231"), PatternPair::parse("213,312"), PatternPair::parse("123,321"),
    };
    return pairs;
}

inline bool is_finite_pair(const PatternPair& pair) { return pair == canonical_pairs().back(); }

/// Finds the canonical pair and the first op (identity, r, c, rc) that maps
/// it onto `pair`.
inline CanonicalReduction symmetry_reduce(const PatternPair& pair, Family family) {
    for (SymOp op : kAllSymOps) {
        for (const auto& canonical : canonical_pairs()) {
            if (apply(op, canonical) == pair) {
                return CanonicalReduction{canonical, SymmetryTransform{op, var_recipe(family, op)}};
            }
        }
    }
    throw invalid_input("pattern pair " + pair.to_string() + " has no canonical form");
}

// ---------------------------------------------------------------------------
// Catalog entries

enum class Correction {
    none,
    /// The printed form equals (GF - 1)/x; corrected num = den + x * num.
    shifted_down_by_x,
    /// The printed form equals GF - 1; corrected num = num + den.
    missing_constant_term,
};

inline constexpr std::string_view correction_name(Correction c) {
    switch (c) {
        case Correction::none: return "none";
        case Correction::shifted_down_by_x: return "printed = (GF-1)/x; corrected to 1 + x*printed";
        case Correction::missing_constant_term: return "printed = GF-1; corrected to 1 + printed";
    }
    return "";
}

inline RationalGF apply_correction(const RationalGF& printed, Correction c) {
    switch (c) {
        case Correction::none: return printed;
        case Correction::shifted_down_by_x:
            return RationalGF(printed.den() + times_x_power(printed.num(), 1), printed.den());
        case Correction::missing_constant_term:
            return RationalGF(printed.num() + printed.den(), printed.den());
    }
    return printed;
}

struct CatalogEntry {
    PatternPair pair;
    Family family;
    /// Short verbatim fragment of the printed formula, for locating it.
    std::string anchor;
    RationalGF printed;
    Correction correction = Correction::none;
    RationalGF gf;
};

struct SingleStatEntry {
    PatternPair pair;
    Stat stat;
    std::string anchor;
    RationalGF printed;
    Correction correction = Correction::none;
    RationalGF gf;
};

namespace detail {

struct Fraction {
    std::string_view numerator;
    std::vector<std::string_view> denominator_factors;
};

/// Sum of fractions over the product of their distinct denominator factors.
/// Factors are normalized to constant term +1 first, so (-1 + a x) and
/// (1 - a x) are recognized as the same factor.
inline RationalGF sum_of_fractions(const std::vector<Fraction>& fractions) {
    struct Normalized {
        MultiPoly numerator;
        std::vector<MultiPoly> factors;
    };
    std::vector<Normalized> terms;
    std::vector<MultiPoly> common;
    for (const auto& f : fractions) {
        Normalized n{parse_poly(f.numerator), {}};
        for (auto text : f.denominator_factors) {
            MultiPoly factor = parse_poly(text);
            if (factor.constant_term() == -1) {
                factor = -factor;
                n.numerator = -n.numerator;
            }
            if (factor.constant_term() != 1) throw bad_denominator("factor without unit constant term");
            n.factors.push_back(factor);
        }
        for (const auto& factor : n.factors) {
            const auto need = std::count(n.factors.begin(), n.factors.end(), factor);
            const auto have = std::count(common.begin(), common.end(), factor);
            for (auto k = have; k < need; ++k) common.push_back(factor);
        }
        terms.push_back(std::move(n));
    }
    MultiPoly den(1);
    for (const auto& factor : common) den *= factor;
    MultiPoly num;
    for (const auto& t : terms) {
        std::vector<MultiPoly> missing = common;
        for (const auto& factor : t.factors) missing.erase(std::find(missing.begin(), missing.end(), factor));
        MultiPoly piece = t.numerator;
        for (const auto& factor : missing) piece *= factor;
        num += piece;
    }
    return RationalGF(std::move(num), std::move(den));
}

inline RationalGF fraction(std::string_view num, std::string_view den) {
    return RationalGF(parse_poly(num), parse_poly(den));
}

}  // namespace detail

class Catalog {
public:
    static const Catalog& instance() {
        static const Catalog catalog;
        return catalog;
    }

    const std::vector<CatalogEntry>& joint_entries() const noexcept { return joint_; }
    const std::vector<SingleStatEntry>& single_stat_entries() const noexcept { return single_stats_; }

    const CatalogEntry& joint(const PatternPair& pair, Family family) const {
        if (is_finite_pair(pair)) throw finite_class();
        for (const auto& e : joint_)
            if (e.pair == pair && e.family == family) return e;
        throw invalid_input("no closed form stored for " + pair.to_string() + "; not a canonical pair");
    }

    const SingleStatEntry& single_stat(const PatternPair& pair, Stat stat) const {
        if (is_finite_pair(pair)) throw finite_class();
        for (const auto& e : single_stats_)
            if (e.pair == pair && e.stat == stat) return e;
        throw invalid_input("no single-statistic form stored for " + pair.to_string() +
                            "; not a canonical pair");
    }

private:
    Catalog() {
        using detail::fraction;
        const auto pair = [](std::string_view s) { return PatternPair::parse(s); };

        // ---- four-statistic forms (asc, des, mna, mnd) -------------------

        // "1 − 2 q² x² z − p q x² y z"
        add_joint(pair("123,132"), Family::G, "1 - 2 q^2 x^2 z - p q x^2 y z",
                  fraction("1 + x + p x^2 y + q x^2 z - 2 q^2 x^2 z - q^2 x^3 z - p q x^2 y z + "
                           "2 p q x^3 y z - 2 p q^2 x^3 y z - q^3 x^4 z^2 + q^4 x^4 z^2 + "
                           "p q^2 x^4 y z^2 - p q^3 x^4 y z^2",
                           "1 - 2 q^2 x^2 z - p q x^2 y z - 2 p q^2 x^3 y z + q^4 x^4 z^2 - "
                           "p q^3 x^4 y z^2"));
        // "A/(1 − p² x² y)³"
        add_joint(pair("132,321"), Family::G, "A/(1 - p^2 x^2 y)^3",
                  fraction("1 + x + p x^2 y - 3 p^2 x^2 y - 2 p^2 x^3 y - 2 p^3 x^4 y^2 + "
                           "3 p^4 x^4 y^2 + p^4 x^5 y^2 + p^5 x^6 y^3 - p^6 x^6 y^3 + q x^2 z + "
                           "3 p q x^3 y z + p^2 q x^4 y z + 2 p^2 q x^4 y^2 z + p^3 q x^5 y^2 z",
                           "(1 - p^2 x^2 y)^3"));
        // "1 − p² x² y − q² x² z − p q x² y z" (same text for both classes)
        constexpr std::string_view layered_num =
            "1 + x + p x^2 y - p^2 x^2 y + q x^2 z - q^2 x^2 z - p q x^2 y z + p q x^3 y z - "
            "p^2 q x^3 y z - p q^2 x^3 y z";
        constexpr std::string_view layered_den =
            "1 - p^2 x^2 y - q^2 x^2 z - p q x^2 y z - p^2 q x^3 y z - p q^2 x^3 y z";
        add_joint(pair("231,312"), Family::G, "1 - p^2 x^2 y - q^2 x^2 z - p q x^2 y z",
                  fraction(layered_num, layered_den));
        add_joint(pair("213,231"), Family::G, "1 - p^2 x^2 y - q^2 x^2 z - p q x^2 y z",
                  fraction(layered_num, layered_den));
        // "p⁴ x⁴ y² + (−1 + q² x² z)²"
        add_joint(pair("213,312"), Family::G, "p^4 x^4 y^2 + (-1 + q^2 x^2 z)^2",
                  fraction("1 - p^3 x^3 y^2 + q x z - q^2 x^2 z - q^3 x^3 z^2 + "
                           "p^2 x^2 y (-1 + q x z) + p x y (1 + 2 q x z + q^2 x^2 z)",
                           "p^4 x^4 y^2 + (-1 + q^2 x^2 z)^2 - 2 p^2 x^2 y (1 + q^2 x^2 z)"),
                  Correction::shifted_down_by_x);

        // ---- six-statistic forms (asc, des, lrmax, rlmax, lrmin, rlmin) --

        // "1 + q² s² v x² − q s x (1 + v + p v x)"
        add_joint(pair("123,132"), Family::F, "1 + q^2 s^2 v x^2 - q s x (1 + v + p v x)",
                  fraction("1 + q^2 s^2 v x^2 + s t u v x (1 + p t u x) - "
                           "q s x (1 + p u v^2 x^2 s t (-1 + t) (-1 + u) + v (1 + p x + s t u x))",
                           "1 + q^2 s^2 v x^2 - q s x (1 + v + p v x)"));
        // "(1 − p t x)(1 − p u x)(1 − p t u x)"; the printed numerator is
        // missing its final ')', closed at the very end.
        add_joint(pair("132,321"), Family::F, "(1 - p t x) (1 - p u x) (1 - p t u x)",
                  fraction("1 + s t u v x + q s^2 t u v^2 x^2 - p^3 t^2 u^2 x^3 + "
                           "p^2 t u x^2 (1 + t + u + s t u v x) - "
                           "p x (u + s t^2 u v x (1 + q s u (-1 + v) x) + t (1 + u + s u^2 v x))",
                           "(1 - p t x) (1 - p u x) (1 - p t u x)"));
        // "(1 − q s x)(1 − q x − p t u x)(1 − q v x)(1 − q s v x)"
        add_joint(pair("231,312"), Family::F, "(1 - q s x) (1 - q x - p t u x) (1 - q v x) (1 - q s v x)",
                  fraction("1 - p t u x + s t u v x + q^4 s^2 v^2 x^4 + "
                           "q^3 s v x^3 (-1 - v + s (-1 + v (-1 + (-1 + p) t u x))) - "
                           "q x (1 + v - p t u v x + s^2 t u v x (1 + p t u (-1 + v) x) + "
                           "s (1 + v - p t u x - (-1 + p) t u v x + p t^2 u^2 v x^2 + "
                           "t u v^2 x (1 - p t u x))) + "
                           "q^2 x^2 (v + s^2 v (1 + t u (1 - p + v) x) + "
                           "s (1 + v^2 (1 - (-1 + p) t u x) + v (2 - p t u x)))",
                           "(1 - q s x) (1 - q x - p t u x) (1 - q v x) (1 - q s v x)"));
        // "(1 − p t u x)(1 − p t x − q v x)(1 − q s v x)"
        add_joint(pair("213,231"), Family::F, "(1 - p t u x) (1 - p t x - q v x) (1 - q s v x)",
                  fraction("1 - p t x - p t u x - q v x - q s v x + s t u v x + p^2 t^2 u x^2 + "
                           "p q s t v x^2 + p q t u v x^2 + p q s t u v x^2 - p s t^2 u v x^2 + "
                           "q^2 s v^2 x^2 - q s t u v^2 x^2 - p^2 q s t^2 u v x^3 - "
                           "p q^2 s t u v^2 x^3 + p q s^2 t^2 u v^2 x^3 + p q s t^2 u^2 v^2 x^3 - "
                           "p q s^2 t^2 u^2 v^2 x^3",
                           "(1 - p t u x) (1 - p t x - q v x) (1 - q s v x)"));
        // "1 + xuvst + (p q s t² u² v² x³)/…", printed as a sum of fractions.
        add_joint(pair("213,312"), Family::F, "1 + x u v s t + (p q s t^2 u^2 v^2 x^3)/...",
                  detail::sum_of_fractions({
                      {"1", {}},
                      {"x u v s t", {}},
                      {"p q s t^2 u^2 v^2 x^3", {"-1 + p t u x", "-1 + p u x + q v x"}},
                      {"q s^2 t u v^2 x^2", {"1 - q s v x"}},
                      {"p s t^2 u^2 v x^2", {"1 - p t u x"}},
                      {"p q s^2 t u^2 v^2 x^3", {"-1 + p u x + q v x", "-1 + q s v x"}},
                  }));

        // ---- single-statistic forms ---------------------------------------

        add_single_stat(pair("123,132"), Stat::asc, fraction("1 - x", "1 - 2 x + x^2 - p x^2"));
        add_single_stat(pair("123,132"), Stat::des,
                      fraction("1 + x - 2 q x + x^2 - 2 q x^2 + q^2 x^2", "1 - 2 q x - q x^2 + q^2 x^2"));
        add_single_stat(pair("123,132"), Stat::mna, fraction("1 - x", "1 - 2 x + x^2 - x^2 y"));
        add_single_stat(pair("123,132"), Stat::mnd,
                      fraction("1 + x + x^2 - 2 x^2 z - x^3 z", "1 - 3 x^2 z - 2 x^3 z"));
        add_single_stat(pair("123,132"), Stat::lrmax, fraction("1 - 2 x + u x - u x^2 + u^2 x^2", "1 - 2 x"));
        add_single_stat(pair("123,132"), Stat::rlmax, fraction("1 - x", "1 - x - v x"));
        add_single_stat(pair("123,132"), Stat::lrmin, fraction("1 - s x", "1 - 2 s x - s x^2 + s^2 x^2"));
        add_single_stat(pair("123,132"), Stat::rlmin, fraction("1 - 2 x + t x - t x^2 + t^2 x^2", "1 - 2 x"));

        add_single_stat(pair("132,321"), Stat::asc,
                      fraction("1 + x - 3 p x + x^2 - 2 p x^2 + 3 p^2 x^2 + p^2 x^3 - p^3 x^3", "(1 - p x)^3"));
        add_single_stat(pair("132,321"), Stat::des, fraction("1 - 2 x + x^2 + q x^2", "(1 - x)^3"));
        add_single_stat(pair("132,321"), Stat::mna,
                      fraction("1 + x + x^2 - 2 x^2 y + x^3 y + x^4 y + 3 x^4 y^2 + 2 x^5 y^2", "(1 - x^2 y)^3"));
        add_single_stat(pair("132,321"), Stat::mnd, fraction("1 - 2 x + x^2 + x^2 z", "(1 - x)^3"));
        add_single_stat(pair("132,321"), Stat::lrmax, fraction("1 - x - u x + 2 u x^2", "(1 - x) (1 - u x)^2"));
        add_single_stat(pair("132,321"), Stat::rlmax,
                      fraction("1 - 3 x + v x + 3 x^2 - 2 v x^2 + v^2 x^2 - x^3 + 2 v x^3 - v^2 x^3", "(1 - x)^3"));
        add_single_stat(pair("132,321"), Stat::lrmin,
                      fraction("1 - 3 x + s x + 3 x^2 - 2 s x^2 + s^2 x^2 - x^3 + s x^3", "(1 - x)^3"));
        add_single_stat(pair("132,321"), Stat::rlmin, fraction("1 - x - t x + 2 t x^2", "(1 - x) (1 - t x)^2"));

        add_single_stat(pair("231,312"), Stat::asc, fraction("1 - p x", "1 - x - p x"));
        add_single_stat(pair("231,312"), Stat::des, fraction("1 - q x", "1 - x - q x"));
        add_single_stat(pair("231,312"), Stat::mna, fraction("1 - x^2 y", "1 - x - 2 x^2 y"));
        add_single_stat(pair("231,312"), Stat::mnd, fraction("1 - x^2 z", "1 - x - 2 x^2 z"));
        add_single_stat(pair("231,312"), Stat::lrmax, fraction("1 - x", "1 - x - u x"));
        add_single_stat(pair("231,312"), Stat::rlmax, fraction("1 - 2 x + v x^2", "(1 - 2 x) (1 - v x)"));
        add_single_stat(pair("231,312"), Stat::lrmin, fraction("1 - 2 x + s x^2", "(1 - 2 x) (1 - s x)"));
        add_single_stat(pair("231,312"), Stat::rlmin, fraction("1 - x", "1 - x - t x"));

        add_single_stat(pair("213,231"), Stat::asc, fraction("1 - p x", "1 - x - p x"));
        add_single_stat(pair("213,231"), Stat::des, fraction("1 - q x", "1 - x - q x"));
        add_single_stat(pair("213,231"), Stat::mna, fraction("1 - x^2 y", "1 - x - 2 x^2 y"));
        add_single_stat(pair("213,231"), Stat::mnd, fraction("1 - x^2 z", "1 - x - 2 x^2 z"));
        add_single_stat(pair("213,231"), Stat::lrmax, fraction("1 - 2 x + u x^2", "(1 - 2 x) (1 - u x)"));
        add_single_stat(pair("213,231"), Stat::rlmax, fraction("1 - x", "1 - x - v x"));
        add_single_stat(pair("213,231"), Stat::lrmin, fraction("1 - 2 x + s x^2", "(1 - 2 x) (1 - s x)"));
        add_single_stat(pair("213,231"), Stat::rlmin, fraction("1 - x", "1 - x - t x"));

        add_single_stat(pair("213,312"), Stat::asc, fraction("1 - p x", "1 - x - p x"));
        add_single_stat(pair("213,312"), Stat::des, fraction("1 - q x", "1 - x - q x"));
        // Printed numerators start at x^1: the empty permutation's 1 is missing.
        add_single_stat(pair("213,312"), Stat::mna, fraction("x - x^2 + x^2 y", "1 - 2 x + x^2 - x^2 y"),
                      Correction::missing_constant_term);
        add_single_stat(pair("213,312"), Stat::mnd, fraction("x - x^2 + x^2 z", "1 - 2 x + x^2 - x^2 z"),
                      Correction::missing_constant_term);
        add_single_stat(pair("213,312"), Stat::lrmax, fraction("1 - x", "1 - x - u x"));
        add_single_stat(pair("213,312"), Stat::rlmax, fraction("1 - x", "1 - x - v x"));
        add_single_stat(pair("213,312"), Stat::lrmin, fraction("1 - 2 x + s x^2", "(1 - 2 x) (1 - s x)"));
        add_single_stat(pair("213,312"), Stat::rlmin, fraction("1 - 2 x + t x^2", "(1 - 2 x) (1 - t x)"));
    }

    void add_joint(PatternPair pair, Family family, std::string anchor, RationalGF printed,
                   Correction correction = Correction::none) {
        RationalGF gf = apply_correction(printed, correction);
        joint_.push_back(CatalogEntry{std::move(pair), family, std::move(anchor), std::move(printed),
                                      correction, std::move(gf)});
    }

    void add_single_stat(PatternPair pair, Stat stat, RationalGF printed,
                       Correction correction = Correction::none) {
        std::string anchor = to_string(printed.num()) + " / " + to_string(printed.den());
        RationalGF gf = apply_correction(printed, correction);
        single_stats_.push_back(SingleStatEntry{std::move(pair), stat, std::move(anchor), std::move(printed),
                                              correction, std::move(gf)});
    }

    std::vector<CatalogEntry> joint_;
    std::vector<SingleStatEntry> single_stats_;
};

// ---------------------------------------------------------------------------
// Queries

/// Closed form for a canonical pair, with any oracle correction applied.
inline RationalGF canonical_gf(const PatternPair& pair, Family family) {
    return Catalog::instance().joint(pair, family).gf;
}

/// Single-statistic closed form for a canonical pair, corrected.
inline RationalGF single_stat_gf(const PatternPair& pair, Stat stat) {
    return Catalog::instance().single_stat(pair, stat).gf;
}

/// Closed form for any of the 14 infinite classes.
inline RationalGF gf_for(const PatternPair& pair, Family family) {
    if (is_finite_pair(pair)) throw finite_class();
    const auto reduction = symmetry_reduce(pair, family);
    return canonical_gf(reduction.canonical_pair, family).rename(reduction.transform.var_recipe);
}

/// Sets every marker of `family` other than the one carrying `keep` to 1.
inline RationalGF specialize(const RationalGF& gf, Family family, Stat keep) {
    RationalGF out = gf;
    for (Var v : family_markers(family))
        if (v != stat_var(keep)) out = out.substitute_one(v);
    return out;
}

/// |S_n(tau, rho)| from the counting formula.
inline Integer class_count(const PatternPair& pair, int n) {
    if (n < 0) throw invalid_input("n must be non-negative");
    if (n == 0) return 1;
    if (is_finite_pair(pair)) {
        if (n <= 2) return n;
        if (n <= 4) return 4;
        return 0;
    }
    static const std::array<PatternPair, 4> quadratic{
        PatternPair::parse("132,321"), PatternPair::parse("123,231"),
        PatternPair::parse("123,312"), PatternPair::parse("213,321")};
    if (std::find(quadratic.begin(), quadratic.end(), pair) != quadratic.end()) {
        return 1 + Integer(n) * (n - 1) / 2;
    }
    return Integer(1) << (n - 1);
}

inline nlohmann::json gf_to_json(const RationalGF& gf) {
    return {{"num", poly_to_json(gf.num())}, {"den", poly_to_json(gf.den())}};
}

/// Every stored formula, printed and corrected, for audit.
inline nlohmann::json catalog_to_json() {
    const auto& catalog = Catalog::instance();
    auto joint = nlohmann::json::array();
    for (const auto& e : catalog.joint_entries()) {
        joint.push_back({{"pair", e.pair.to_string()},
                         {"family", std::string(family_name(e.family))},
                         {"anchor", e.anchor},
                         {"printed", gf_to_json(e.printed)},
                         {"oracle_corrected", e.correction != Correction::none},
                         {"correction", std::string(correction_name(e.correction))},
                         {"gf", gf_to_json(e.gf)}});
    }
    auto single = nlohmann::json::array();
    for (const auto& e : catalog.single_stat_entries()) {
        single.push_back({{"pair", e.pair.to_string()},
                          {"stat", std::string(stat_name(e.stat))},
                          {"printed", gf_to_json(e.printed)},
                          {"oracle_corrected", e.correction != Correction::none},
                          {"correction", std::string(correction_name(e.correction))},
                          {"gf", gf_to_json(e.gf)}});
    }
    return {{"joint", joint}, {"single_statistic", single}};
}

}  // namespace patstat
