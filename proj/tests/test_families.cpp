// Built-in families and the doubling operator, including the exact
// self-similarity that drives the doubling law.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "polyent/errors.hpp"
#include "polyent/families.hpp"
#include "polyent/plmap.hpp"

using namespace polyent;

TEST_CASE("family constructors produce the expected breakpoints") {
    const PLMap f0 = make_f0();
    CHECK(f0.breakpoints() ==
          std::vector<Breakpoint>{{Rational(0), Rational(1)},
                                  {Rational(1), Rational(0)}});

    const PLMap p = make_plateau();
    CHECK(p.breakpoints() ==
          std::vector<Breakpoint>{{Rational(0), Rational(0)},
                                  {Rational(1, 2), Rational(1)},
                                  {Rational(1), Rational(1)}});

    const PLMap g2 = make_gn(2);
    CHECK(g2.breakpoints() ==
          std::vector<Breakpoint>{{Rational(0), Rational(0)},
                                  {Rational(1, 4), Rational(1)},
                                  {Rational(1, 2), Rational(1, 2)},
                                  {Rational(3, 4), Rational(1)},
                                  {Rational(1), Rational(1)}});

    CHECK(make_gn(0) == make_identity());
    CHECK(make_gn(1) == make_plateau());
    CHECK(make_identity() == PLMap::identity());
}

TEST_CASE("staircase maps fix every cell edge and climb inside cells") {
    for (unsigned n = 1; n <= 6; ++n) {
        const PLMap g = make_gn(n);
        for (unsigned i = 0; i <= n; ++i) {
            const Rational edge(i, n);
            CHECK(g(edge) == edge);
        }
        for (unsigned i = 0; i < n; ++i) {
            const Rational mid(2 * i + 1, 2 * n);
            CHECK(g(mid) > mid);
        }
    }
}

TEST_CASE("doubling squeezes the base map into the top third") {
    const PLMap d = double_map(make_f0());
    CHECK(d.breakpoints() ==
          std::vector<Breakpoint>{{Rational(0), Rational(1)},
                                  {Rational(1, 3), Rational(2, 3)},
                                  {Rational(2, 3), Rational(0)},
                                  {Rational(1), Rational(1, 3)}});
    CHECK(double_map(make_f0(), 0) == make_f0());
    CHECK(double_map(make_f0(), 2) == double_map(double_map(make_f0())));
}

TEST_CASE("the square of a doubled map is conjugate to the base map") {
    const PLMap bases[] = {make_f0(), make_gn(1), make_gn(2), make_plateau(),
                           make_gn(3)};
    for (const PLMap& f : bases) {
        const PLMap d = double_map(f);
        // 3 * d(d(t/3)) == f(t) on a rational sample of [0,1]
        for (int k = 0; k <= 50; ++k) {
            const Rational t(k, 50);
            CHECK(Rational(3) * d(d(t / Rational(3))) == f(t));
        }
    }
}

TEST_CASE("family names parse") {
    CHECK(make_family("f0") == make_f0());
    CHECK(make_family("plateau") == make_plateau());
    CHECK(make_family("identity") == make_identity());
    CHECK(make_family("id") == make_identity());
    CHECK(make_family("g3") == make_gn(3));
    CHECK(make_family("g12") == make_gn(12));
    CHECK(make_family("double(f0)") == double_map(make_f0()));
    CHECK(make_family("double^2(g1)") == double_map(make_gn(1), 2));
    CHECK(make_family("double(double(f0))") == double_map(make_f0(), 2));
    CHECK_THROWS_AS(make_family("gx"), ParseError);
    CHECK_THROWS_AS(make_family("double^(f0)"), ParseError);
    CHECK_THROWS_AS(make_family("nonsense"), ParseError);
    CHECK_THROWS_AS(make_family("double^2"), ParseError);
}
