#include "catch_printers.hpp"

#include <random>

#include "patstat/error.hpp"
#include "patstat/polynomial.hpp"

using namespace patstat;

namespace {

MultiPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 4);
    std::uniform_int_distribution<int> var(0, static_cast<int>(kVarCount) - 1);
    std::uniform_int_distribution<int> power(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    MultiPoly out;
    for (int k = terms(rng); k > 0; --k) {
        Exponents e{};
        for (int j = 0; j < 3; ++j) e[var(rng)] += static_cast<std::uint16_t>(power(rng));
        out.add_term(e, coeff(rng));
    }
    return out;
}

std::array<Integer, kVarCount> random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> value(-4, 4);
    std::array<Integer, kVarCount> point;
    for (auto& c : point) c = value(rng);
    return point;
}

}  // namespace

TEST_CASE("parse and print", "[polynomial]")
{
    CHECK(to_string(parse_poly("q^2 z + p^2 y + 2 p q y z")) == "p^2 y + 2 p q y z + q^2 z");
    CHECK(to_string(parse_poly("(1 - x)(1 + x)")) == "-x^2 + 1");
    CHECK(to_string(parse_poly("x - x")) == "0");
    CHECK(to_string(parse_poly("-3")) == "-3");
    CHECK(parse_poly("2*p*q") == parse_poly("2 p q"));
    CHECK(parse_poly("(p + q)^3") == parse_poly("p^3 + 3 p^2 q + 3 p q^2 + q^3"));
    CHECK(parse_poly("x^0") == MultiPoly(1));
    CHECK(MultiPoly::variable(Var::p, 2) == parse_poly("p^2"));
}

TEST_CASE("parse errors", "[polynomial]")
{
    CHECK_THROWS_AS(parse_poly("(1 + x"), invalid_input);
    CHECK_THROWS_AS(parse_poly("1 + w"), invalid_input);
    CHECK_THROWS_AS(parse_poly("x^"), invalid_input);
    CHECK_THROWS_AS(parse_poly(""), invalid_input);
    CHECK_THROWS_AS(parse_poly("1 +"), invalid_input);
}

TEST_CASE("ring laws on random polynomials", "[polynomial]")
{
    std::mt19937 rng(20240501);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly{});
        CHECK(a * MultiPoly(1) == a);
        CHECK((a * MultiPoly{}).is_zero());
        const auto point = random_point(rng);
        CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
        CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    }
}

TEST_CASE("degree, slices and substitution", "[polynomial]")
{
    const auto a = parse_poly("1 + 2 p x + q x^3 y");
    CHECK(a.degree(Var::x) == 3);
    CHECK(a.degree(Var::z) == 0);
    CHECK(MultiPoly{}.degree(Var::x) == -1);
    CHECK(a.uses(Var::y));
    CHECK(a.x_slice(1) == parse_poly("2 p"));
    CHECK(a.x_slices().size() == 4);
    CHECK(a.x_slices()[2].is_zero());
    CHECK(a.truncate_x(1) == parse_poly("1 + 2 p x"));
    CHECK(a.substitute_one(Var::p) == parse_poly("1 + 2 x + q x^3 y"));
    CHECK(a.sum_of_coefficients() == 4);
    CHECK(a.constant_term() == 1);

    VarMap swap_pq = identity_var_map();
    swap_pq[static_cast<std::size_t>(Var::p)] = Var::q;
    swap_pq[static_cast<std::size_t>(Var::q)] = Var::p;
    CHECK(a.rename(swap_pq) == parse_poly("1 + 2 q x + p x^3 y"));
    CHECK(a.rename(swap_pq).rename(swap_pq) == a);
}

TEST_CASE("coefficients are exact beyond 64 bits", "[polynomial]")
{
    Exponents x50{};
    exp_of(x50, Var::x) = 50;
    CHECK(parse_poly("(1 + x)^100").coefficient(x50).str() == "100891344545564193334812497256");
}

TEST_CASE("series expansion", "[polynomial]")
{
    const RationalGF gf(parse_poly("1 - q x"), parse_poly("1 - x - q x"));
    const auto table = expand(gf, 3);
    REQUIRE(table.coeffs.size() == 4);
    CHECK(table.coeffs[0] == parse_poly("1"));
    CHECK(table.coeffs[1] == parse_poly("1"));
    CHECK(table.coeffs[2] == parse_poly("1 + q"));
    CHECK(table.coeffs[3] == parse_poly("1 + 2 q + q^2"));

    const auto powers_of_two = expand(RationalGF(parse_poly("1 - x"), parse_poly("1 - 2 x")), 10);
    for (int n = 1; n <= 10; ++n) CHECK(powers_of_two.coeffs[n] == MultiPoly(Integer(1) << (n - 1)));
}

TEST_CASE("expansion times denominator recovers numerator", "[polynomial]")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto den = random_poly(rng);
        den = den - MultiPoly(den.x_slice(0)) + MultiPoly(1);
        const auto num = random_poly(rng);
        const RationalGF gf(num, den);
        const int n_max = 8;
        const auto table = expand(gf, n_max);
        MultiPoly series;
        for (int k = 0; k <= n_max; ++k) series += times_x_power(table.coeffs[k], k);
        CHECK((series * den).truncate_x(n_max) == num.truncate_x(n_max));
    }
}

TEST_CASE("bad denominators", "[polynomial]")
{
    CHECK_THROWS_AS(RationalGF(MultiPoly(1), parse_poly("2 - x")), bad_denominator);
    CHECK_THROWS_AS(RationalGF(MultiPoly(1), parse_poly("x")), bad_denominator);
    CHECK_THROWS_AS(expand(RationalGF(MultiPoly(1), parse_poly("1 + p - x")), 3), bad_denominator);
    CHECK_THROWS_AS(expand(RationalGF(MultiPoly(1), parse_poly("1 - x")), -1), invalid_input);
}

TEST_CASE("json round trip", "[polynomial]")
{
    const auto a = parse_poly("p^2 y - 2 p q y z + 123456789012345678901234567890 q^2 z");
    CHECK(poly_from_json(poly_to_json(a)) == a);
    CHECK(poly_to_json(a)[0]["exponents"]["p"] == 2);

    const auto table = expand(RationalGF(parse_poly("1 - q x"), parse_poly("1 - x - q x")), 6);
    CHECK(series_from_json(series_to_json(table)) == table);
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"([{"exponents":{"w":1},"coeff":"1"}])")), invalid_input);
}
