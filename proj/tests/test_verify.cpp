#include "catch_printers.hpp"

#include "patstat/verify.hpp"

using namespace patstat;

namespace {

PatternPair pp(const char* s) { return PatternPair::parse(s); }

}  // namespace

TEST_CASE("marker monomials", "[verify]")
{
    const auto sv = stat_vector(Permutation::parse("3 4 1 5 2"));
    CHECK(marker_monomial(sv, Family::G) == parse_poly("p^2 q^2 y^2 z^2"));
    CHECK(marker_monomial(sv, Family::F) == parse_poly("p^2 q^2 u^3 v^2 s^2 t^2"));
}

TEST_CASE("brute-force distribution of S_3(231,312)", "[verify]")
{
    CHECK(to_string(brute_distribution(pp("231,312"), 3, Family::G)) == "p^2 y + 2 p q y z + q^2 z");
    CHECK(brute_distribution(pp("123,132"), 0, Family::F) == MultiPoly(1));
    CHECK(brute_distribution(pp("123,321"), 5, Family::G).is_zero());
}

TEST_CASE("every suite check passes at reduced sizes", "[verify]")
{
    const SuiteLimits limits{8, 7, 6, 8, 8};
    const auto reports = run_suite(Scope::all, limits);
    CHECK(reports.size() == 1 + 14 + 14 + 30 + 40 + 8);
    for (const auto& r : reports) {
        INFO(report_to_json(r).dump());
        CHECK(r.pass());
    }
}

TEST_CASE("scopes select their checks", "[verify]")
{
    const SuiteLimits limits{5, 5, 5, 5, 5};
    CHECK(run_suite(Scope::counts, limits).size() == 1);
    CHECK(run_suite(Scope::g_family, limits).size() == 14);
    CHECK(run_suite(Scope::f_family, limits).size() == 14);
    CHECK(run_suite(Scope::symmetry, limits).size() == 30);
    CHECK(run_suite(Scope::single_statistic, limits).size() == 40);
    CHECK(run_suite(Scope::bijections, limits).size() == 8);
    CHECK(parse_scope("G") == Scope::g_family);
    CHECK(parse_scope("single") == Scope::single_statistic);
    CHECK_FALSE(parse_scope("everything"));
}

TEST_CASE("a wrong form yields a located discrepancy", "[verify]")
{
    const RationalGF wrong(parse_poly("1 - x"), parse_poly("1 - 2 x"));
    const auto report = check_gf_against(wrong, pp("231,312"), Family::G, 6);
    REQUIRE_FALSE(report.pass());
    CHECK(report.first_discrepancy->n == 2);
    CHECK(report.first_discrepancy->expected == parse_poly("p y + q z"));
    CHECK(report.first_discrepancy->actual == MultiPoly(2));

    const auto j = report_to_json(report);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("first_discrepancy").at("n") == 2);
    CHECK(j.at("first_discrepancy").at("expected") == "p y + q z");
}

TEST_CASE("printed (213,312) four-statistic form fails against the oracle", "[verify]")
{
    const auto& entry = Catalog::instance().joint(pp("213,312"), Family::G);
    const auto report = check_gf_against(entry.printed, entry.pair, Family::G, 4);
    REQUIRE_FALSE(report.pass());
    CHECK(report.first_discrepancy->n == 1);
    CHECK(check_gf_against(entry.gf, entry.pair, Family::G, 8).pass());
}

TEST_CASE("passing report json", "[verify]")
{
    const auto j = report_to_json(check_counts(6));
    CHECK(j.at("status") == "pass");
    CHECK(j.at("first_discrepancy").is_null());
    CHECK(j.at("n_range") == nlohmann::json::array({0, 6}));
}
