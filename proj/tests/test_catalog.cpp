#include "catch_printers.hpp"

#include <set>

#include "oracles.hpp"
#include "patstat/catalog.hpp"
#include "patstat/verify.hpp"

using namespace patstat;

namespace {

PatternPair pp(const char* s) { return PatternPair::parse(s); }

}  // namespace

TEST_CASE("S_3(231,312) four-statistic coefficient", "[catalog]")
{
    const auto table = expand(gf_for(pp("231,312"), Family::G), 3);
    CHECK(to_string(table.coeffs[3]) == "p^2 y + 2 p q y z + q^2 z");
}

TEST_CASE("(123,132) right-to-left maxima series", "[catalog]")
{
    const auto table = expand(single_stat_gf(pp("123,132"), Stat::rlmax), 3);
    CHECK(table.coeffs[0] == parse_poly("1"));
    CHECK(table.coeffs[1] == parse_poly("v"));
    CHECK(table.coeffs[2] == parse_poly("v + v^2"));
    CHECK(table.coeffs[3] == parse_poly("v + 2 v^2 + v^3"));
}

TEST_CASE("layered and run classes share one four-statistic form", "[catalog]")
{
    CHECK(canonical_gf(pp("231,312"), Family::G) == canonical_gf(pp("213,231"), Family::G));
}

TEST_CASE("class sizes", "[catalog]")
{
    CHECK(class_count(pp("231,312"), 5) == 16);
    CHECK(class_count(pp("132,321"), 5) == 11);
    CHECK(class_count(pp("123,321"), 4) == 4);
    CHECK(class_count(pp("123,321"), 5) == 0);
    CHECK(class_count(pp("123,321"), 0) == 1);
    CHECK(class_count(pp("213,312"), 40) == Integer(1) << 39);
    CHECK_THROWS_AS(class_count(pp("123,132"), -1), invalid_input);
    for (const auto& pair : all_pattern_pairs()) {
        for (int n = 0; n <= 8; ++n) {
            const auto brute = oracle::filter_class(oracle::values(pair.first()), oracle::values(pair.second()), n);
            INFO(pair.to_string() << " n=" << n);
            CHECK(class_count(pair, n) == brute.size());
        }
    }
}

TEST_CASE("symmetry reduction", "[catalog]")
{
    std::set<std::string> seen;
    for (const auto& pair : all_pattern_pairs()) {
        const auto reduction = symmetry_reduce(pair, Family::G);
        CHECK(apply(reduction.transform.op, reduction.canonical_pair) == pair);
        seen.insert(reduction.canonical_pair.to_string());
    }
    CHECK(seen.size() == canonical_pairs().size());
    CHECK(symmetry_reduce(pp("231,321"), Family::F).transform.op == SymOp::r);
    for (Family family : {Family::F, Family::G}) {
        CHECK(var_recipe(family, SymOp::identity) == identity_var_map());
        for (SymOp op : kAllSymOps) {
            const auto m = var_recipe(family, op);
            CHECK(m[static_cast<std::size_t>(Var::x)] == Var::x);
        }
    }
    CHECK(var_recipe(Family::G, SymOp::rc) == identity_var_map());
}

TEST_CASE("symmetries act on statistics as the recipes say", "[catalog]")
{
    // Recipe for op: GF_{op class}(args) = GF_{class}(recipe(args)). Applied
    // to a single permutation, the monomial of op(pi) renamed by the recipe
    // is the monomial of pi.
    for (Family family : {Family::F, Family::G}) {
        for (SymOp op : kAllSymOps) {
            const auto recipe = var_recipe(family, op);
            for (const auto& pi : enumerate_class(pp("123,321"), 4)) {
                CHECK(marker_monomial(stat_vector(apply(op, pi)), family).rename(recipe) ==
                      marker_monomial(stat_vector(pi), family));
            }
            std::vector<int> v{1, 2, 3, 4, 5, 6};
            do {
                const auto pi = Permutation(v);
                CHECK(marker_monomial(stat_vector(apply(op, pi)), family).rename(recipe) ==
                      marker_monomial(stat_vector(pi), family));
            } while (std::next_permutation(v.begin(), v.end()));
        }
    }
}

TEST_CASE("finite class has no stored form", "[catalog]")
{
    CHECK_THROWS_AS(gf_for(pp("123,321"), Family::G), finite_class);
    CHECK_THROWS_AS(single_stat_gf(pp("123,321"), Stat::asc), finite_class);
    CHECK_THROWS_AS(canonical_gf(pp("231,321"), Family::G), invalid_input);
}

TEST_CASE("every stored denominator has unit constant term", "[catalog]")
{
    for (const auto& e : Catalog::instance().joint_entries()) {
        CHECK(e.gf.den().constant_term() == 1);
        CHECK(e.gf.den().x_slice(0) == MultiPoly(1));
    }
    CHECK(Catalog::instance().joint_entries().size() == 10);
    CHECK(Catalog::instance().single_stat_entries().size() == 40);
}

TEST_CASE("forms use only their own markers", "[catalog]")
{
    for (const auto& e : Catalog::instance().joint_entries()) {
        const auto markers = family_markers(e.family);
        for (Var v : e.gf.variables()) {
            CHECK((v == Var::x || std::find(markers.begin(), markers.end(), v) != markers.end()));
        }
    }
    for (const auto& e : Catalog::instance().single_stat_entries()) {
        CHECK(e.gf.variables() == std::set<Var>{Var::x, stat_var(e.stat)});
    }
}

TEST_CASE("marker degree of the x^k coefficient is at most k", "[catalog]")
{
    for (const auto& e : Catalog::instance().joint_entries()) {
        const auto table = expand(e.gf, 10);
        for (int k = 0; k <= 10; ++k)
            for (Var v : family_markers(e.family)) CHECK(table.coeffs[k].degree(v) <= k);
    }
}

TEST_CASE("coefficients sum to the class size", "[catalog]")
{
    for (Family family : {Family::F, Family::G}) {
        for (const auto& pair : all_pattern_pairs()) {
            if (is_finite_pair(pair)) continue;
            const auto table = expand(gf_for(pair, family), 12);
            for (int n = 0; n <= 12; ++n) CHECK(table.coeffs[n].sum_of_coefficients() == class_count(pair, n));
        }
    }
}

TEST_CASE("expansion satisfies the defining recurrence", "[catalog]")
{
    for (const auto& e : Catalog::instance().joint_entries()) {
        const int n_max = 12;
        const auto table = expand(e.gf, n_max);
        MultiPoly series;
        for (int k = 0; k <= n_max; ++k) series += times_x_power(table.coeffs[k], k);
        CHECK((series * e.gf.den()).truncate_x(n_max) == e.gf.num().truncate_x(n_max));
    }
}

TEST_CASE("printed forms that needed an oracle correction", "[catalog]")
{
    const auto& catalog = Catalog::instance();
    int corrected = 0;
    for (const auto& e : catalog.joint_entries()) {
        if (e.correction == Correction::none) {
            CHECK(e.gf == e.printed);
            continue;
        }
        ++corrected;
        CHECK(e.pair == pp("213,312"));
        CHECK(e.family == Family::G);
        CHECK(e.correction == Correction::shifted_down_by_x);
        // Printed form is (G - 1)/x: its x^k coefficient is the true x^{k+1}.
        const auto printed = expand(e.printed, 9);
        const auto brute_next = [&](int k) { return brute_distribution(e.pair, k + 1, Family::G); };
        for (int k = 0; k <= 8; ++k) CHECK(printed.coeffs[k] == brute_next(k));
    }
    CHECK(corrected == 1);

    int single_stat_corrected = 0;
    for (const auto& e : catalog.single_stat_entries()) {
        if (e.correction == Correction::none) continue;
        ++single_stat_corrected;
        CHECK(e.pair == pp("213,312"));
        CHECK((e.stat == Stat::mna || e.stat == Stat::mnd));
        CHECK(e.correction == Correction::missing_constant_term);
        CHECK(e.printed.num().constant_term() == 0);
        const auto printed = expand(e.printed, 8);
        const auto corrected_table = expand(e.gf, 8);
        CHECK(corrected_table.coeffs[0] == MultiPoly(1));
        for (int n = 1; n <= 8; ++n) CHECK(printed.coeffs[n] == corrected_table.coeffs[n]);
    }
    CHECK(single_stat_corrected == 2);
}

TEST_CASE("a flipped coefficient is detected", "[catalog][mutation]")
{
    for (const auto& e : Catalog::instance().joint_entries()) {
        // Negate one numerator term at a time; the oracle check must fail.
        const int n_max = e.family == Family::F ? 6 : 7;
        for (const auto& [exps, coeff] : e.gf.num().terms()) {
            if (exps[static_cast<std::size_t>(Var::x)] > n_max) continue;
            MultiPoly mutated = e.gf.num();
            mutated.add_term(exps, -2 * coeff);
            const RationalGF bad(mutated, e.gf.den());
            INFO(e.pair.to_string() << ' ' << family_name(e.family) << " term " << monomial_to_string(exps));
            CHECK_FALSE(check_gf_against(bad, e.pair, e.family, n_max).pass());
        }
    }
}

TEST_CASE("specialization keeps one marker", "[catalog]")
{
    const auto g = specialize(gf_for(pp("231,312"), Family::G), Family::G, Stat::asc);
    CHECK(g.variables() == std::set<Var>{Var::x, Var::p});
    CHECK(expand(g, 8) == expand(single_stat_gf(pp("231,312"), Stat::asc), 8));
}

TEST_CASE("catalog json", "[catalog]")
{
    const auto j = catalog_to_json();
    CHECK(j.at("joint").size() == 10);
    CHECK(j.at("single_statistic").size() == 40);
    int flagged = 0;
    for (const auto& e : j.at("joint")) flagged += e.at("oracle_corrected").get<bool>();
    for (const auto& e : j.at("single_statistic")) flagged += e.at("oracle_corrected").get<bool>();
    CHECK(flagged == 3);
    const auto& first = j.at("joint").at(0);
    CHECK(poly_from_json(first.at("gf").at("den")) == canonical_gf(pp("123,132"), Family::G).den());
}
