// Exact rational arithmetic and interval set algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyent/errors.hpp"
#include "polyent/interval.hpp"
#include "polyent/rational.hpp"

using namespace polyent;

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(0, 5).num() == 0);
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-2, 4).den() == 2); // denominator stays positive
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parse and str round trip") {
    for (const char* s : {"0", "5", "-5", "3/4", "-2/7",
                          "123456789012345678901234567891/7"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("-2/6").str() == "-1/3");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
}

TEST_CASE("field operations are exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK((a + b) * Rational(2) == Rational(1)); // no drift
    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("ordering helpers") {
    CHECK(rat_cmp(Rational(1, 3), Rational(1, 2)) == -1);
    CHECK(rat_cmp(Rational(1, 2), Rational(1, 3)) == 1);
    CHECK(rat_cmp(Rational(2, 4), Rational(1, 2)) == 0);
    CHECK(min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(midpoint(Rational(0), Rational(1, 2)) == Rational(1, 4));
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("interval membership honors openness") {
    const RInterval open01 = RInterval::open(Rational(0), Rational(1));
    CHECK(open01.contains(Rational(1, 2)));
    CHECK_FALSE(open01.contains(Rational(0)));
    CHECK_FALSE(open01.contains(Rational(1)));

    const RInterval pt = RInterval::point(Rational(1, 3));
    CHECK(pt.is_point());
    CHECK(pt.contains(Rational(1, 3)));
    CHECK(pt.length() == Rational(0));

    CHECK(RInterval::closed(Rational(0), Rational(1, 2)).mid() == Rational(1, 4));
    CHECK_THROWS_AS(RInterval(Rational(1), Rational(0), true, true), DomainError);
    CHECK_THROWS_AS(RInterval(Rational(1, 2), Rational(1, 2), false, true), DomainError);
}

TEST_CASE("subset and intersection track endpoint openness exactly") {
    const RInterval closed01 = RInterval::closed(Rational(0), Rational(1));
    const RInterval open01 = RInterval::open(Rational(0), Rational(1));
    CHECK(interval_subset(open01, closed01));
    CHECK_FALSE(interval_subset(closed01, open01));
    CHECK(interval_subset(closed01, closed01));

    const RInterval left = RInterval::closed(Rational(0), Rational(1, 2));
    const RInterval right = RInterval::closed(Rational(1, 2), Rational(1));
    const auto meet = interval_intersect(left, right);
    REQUIRE(meet.has_value());
    CHECK(meet->is_point());
    CHECK(meet->lo == Rational(1, 2));

    // half-open neighbours miss each other
    const RInterval left_open(Rational(0), Rational(1, 2), true, false);
    CHECK_FALSE(interval_intersect(left_open, right).has_value());
    CHECK(intervals_overlap(left, right));
    CHECK_FALSE(intervals_overlap(left_open, right));

    CHECK(interval_hull(left, RInterval::closed(Rational(3, 4), Rational(1))) ==
          closed01);
}

TEST_CASE("component lists merge and subtract exactly") {
    auto merged =
        normalize_components({RInterval::closed(Rational(1, 2), Rational(1)),
                              RInterval::closed(Rational(0), Rational(1, 2))});
    REQUIRE(merged.size() == 1);
    CHECK(merged[0] == RInterval::closed(Rational(0), Rational(1)));

    // complementary openness still glues; a genuine gap does not
    auto glued =
        normalize_components({RInterval(Rational(0), Rational(1, 2), true, false),
                              RInterval(Rational(1, 2), Rational(1), true, true)});
    REQUIRE(glued.size() == 1);
    CHECK(glued[0] == RInterval::closed(Rational(0), Rational(1)));
    auto apart =
        normalize_components({RInterval(Rational(0), Rational(1, 2), true, false),
                              RInterval(Rational(1, 2), Rational(1), false, true)});
    CHECK(apart.size() == 2);

    auto diff = subtract_components(
        {RInterval::closed(Rational(0), Rational(1))},
        {RInterval::open(Rational(1, 4), Rational(3, 4))});
    REQUIRE(diff.size() == 2);
    CHECK(diff[0] == RInterval::closed(Rational(0), Rational(1, 4)));
    CHECK(diff[1] == RInterval::closed(Rational(3, 4), Rational(1)));

    CHECK(components_contain(diff, Rational(1, 4)));
    CHECK_FALSE(components_contain(diff, Rational(1, 2)));
}
