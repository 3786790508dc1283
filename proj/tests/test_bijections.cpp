#include "catch_printers.hpp"

#include "patstat/bijections.hpp"
#include "patstat/stats.hpp"

using namespace patstat;

namespace {

Permutation P(const char* s) { return Permutation::parse_compact(s); }

const PatternPair kLayered = PatternPair::parse("231,312");
const PatternPair kRuns = PatternPair::parse("213,231");

}  // namespace

TEST_CASE("worked example", "[bijections]")
{
    const auto pi = P("124358769(14)(13)(12)(11)(10)");
    CHECK(layered_decompose(pi).parts() == std::vector<int>{1, 1, 2, 1, 3, 1, 5});
    CHECK(map_f(pi) == P("3216547(10)98(11)(12)(13)(14)"));
    CHECK(map_g(pi) == P("1234(14)(13)56(12)(11)7(10)98"));
    CHECK(map_g(P("12")) == P("21"));
    CHECK(map_f(P("1")) == P("1"));
}

TEST_CASE("compositions and line sets", "[bijections]")
{
    const Composition c({1, 1, 2, 1, 3, 1, 5});
    CHECK(c.n() == 14);
    CHECK(c.line_set() == std::set<int>{1, 2, 4, 5, 8, 9});
    CHECK(Composition::from_line_set(14, c.line_set()) == c);
    CHECK(c.reversed().parts() == std::vector<int>{5, 1, 3, 1, 2, 1, 1});
    CHECK(Composition::from_line_set(3, {}).parts() == std::vector<int>{3});
    CHECK_THROWS_AS(Composition({2, 0}), invalid_input);
    CHECK_THROWS_AS(Composition::from_line_set(3, {3}), invalid_input);
}

TEST_CASE("codecs round trip", "[bijections]")
{
    for (int n = 1; n <= 10; ++n) {
        for (const auto& pi : enumerate_class(kLayered, n)) {
            CHECK(layered_compose(layered_decompose(pi)) == pi);
        }
        for (const auto& sigma : enumerate_class(kRuns, n)) {
            CHECK(runs_compose_213_231(runs_decompose_213_231(sigma)) == sigma);
        }
    }
}

TEST_CASE("f and g on every member up to n = 12", "[bijections]")
{
    for (int n = 1; n <= 12; ++n) {
        const auto domain = enumerate_class(kLayered, n);
        std::vector<Permutation> g_images;
        int g_fixed = 0;
        for (const auto& pi : domain) {
            const auto f = map_f(pi);
            CHECK(map_f(f) == pi);
            if (n >= 2) CHECK(f != pi);
            CHECK(asc(f) == des(pi));
            CHECK(des(f) == asc(pi));
            CHECK(mna(f) == mnd(pi));
            CHECK(mnd(f) == mna(pi));

            const auto g = map_g(pi);
            g_images.push_back(g);
            g_fixed += g == pi;
            CHECK(avoids_pair(g, kRuns));
            CHECK(asc(g) == des(pi));
            CHECK(mna(g) == mnd(pi));
            CHECK(mnd(g) == mna(pi));
        }
        std::sort(g_images.begin(), g_images.end());
        CHECK(g_images == enumerate_class(kRuns, n));
        CHECK(g_fixed == n % 2);
    }
}

TEST_CASE("inputs outside the class are rejected with the occurrence", "[bijections]")
{
    try {
        map_f(P("231"));
        FAIL("expected not_in_class");
    } catch (const not_in_class& e) {
        CHECK(e.pattern() == "231");
        CHECK(e.positions() == std::vector<int>{1, 2, 3});
    }
    CHECK_THROWS_AS(map_g(P("1423")), not_in_class);
    CHECK_THROWS_AS(runs_decompose_213_231(P("213")), not_in_class);
    CHECK_THROWS_AS(map_f(Permutation()), invalid_input);
    CHECK_THROWS_AS(map_g(Permutation()), invalid_input);
}
