// Fixed-point structure: type-1 detection, essential intervals, orbit
// closures with attainment analysis, covering DAG and its longest chain.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyent/errors.hpp"
#include "polyent/families.hpp"
#include "polyent/fixstruct.hpp"

using namespace polyent;

namespace {

PLMap tent() {
    return PLMap({{Rational(0), Rational(0)},
                  {Rational(1, 2), Rational(1)},
                  {Rational(1), Rational(0)}});
}

} // namespace

TEST_CASE("type-1 detection") {
    CHECK(is_type1(PLMap::identity()).verdict == Tri::YES);
    CHECK(is_type1(make_plateau()).verdict == Tri::YES);
    CHECK(is_type1(make_gn(3)).verdict == Tri::YES);

    const PLMap f0 = make_f0();
    const auto r = is_type1(f0);
    CHECK(r.verdict == Tri::NO);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_period == 2);
    CHECK(f0(*r.witness) != *r.witness);
    CHECK(f0(f0(*r.witness)) == *r.witness);

    CHECK(is_type1(tent()).verdict == Tri::NO);
}

TEST_CASE("essential intervals of the staircase maps") {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto dec = essential_intervals(make_gn(n));
        REQUIRE(dec.essential.size() == n);
        CHECK(dec.boundary_excluded.empty());
        CHECK(dec.fixed_components.size() == n + 1);
        for (unsigned i = 0; i < n; ++i) {
            CHECK(dec.essential[i].dir == Orientation::UP);
            CHECK(dec.essential[i].a() == Rational(i, n));
            CHECK(dec.essential[i].b() == Rational(i + 1, n));
            CHECK(dec.essential[i].source == Rational(i, n));
        }
    }
    CHECK(essential_intervals(PLMap::identity()).essential.empty());
}

TEST_CASE("downward interval has its source at the right end") {
    PLMap m({{Rational(0), Rational(0)},
             {Rational(1, 2), Rational(0)},
             {Rational(1), Rational(1)}});
    const auto dec = essential_intervals(m);
    REQUIRE(dec.essential.size() == 1);
    CHECK(dec.essential[0].dir == Orientation::DOWN);
    CHECK(dec.essential[0].source == Rational(1));
    CHECK(dec.essential[0].a() == Rational(0));
    CHECK(dec.essential[0].b() == Rational(1));
}

TEST_CASE("components touching a non-fixed endpoint are excluded") {
    // strictly increasing, the only fixed point is 1
    PLMap h({{Rational(0), Rational(1, 2)}, {Rational(1), Rational(1)}});
    const auto dec = essential_intervals(h);
    CHECK(dec.essential.empty());
    REQUIRE(dec.boundary_excluded.size() == 1);
    CHECK(dec.boundary_excluded[0].lo == Rational(0));
    CHECK(dec.boundary_excluded[0].hi == Rational(1));

    // no fixed endpoint at all
    const auto df = essential_intervals(make_f0());
    CHECK(df.essential.empty());
    CHECK(df.boundary_excluded.size() == 2);
}

TEST_CASE("orbit closures report attained and avoided far ends") {
    const PLMap P = make_plateau();
    const auto decP = essential_intervals(P);
    REQUIRE(decP.essential.size() == 1);
    const auto ocP = orbit_closure(P, decP.essential[0]);
    CHECK(ocP.far_end == Rational(1));
    CHECK(ocP.attained); // the plateau reaches 1 in one step
    CHECK(ocP.orbit.hi == Rational(1));
    CHECK(ocP.orbit.hi_closed);
    CHECK(ocP.orbit.lo == Rational(0));
    CHECK_FALSE(ocP.orbit.lo_closed); // pinned at the source, source excluded

    // strictly below the far fixed point: 1 approached but never attained
    PLMap S({{Rational(0), Rational(0)},
             {Rational(1, 2), Rational(3, 4)},
             {Rational(1), Rational(1)}});
    const auto decS = essential_intervals(S);
    REQUIRE(decS.essential.size() == 1);
    const auto ocS = orbit_closure(S, decS.essential[0]);
    CHECK(ocS.far_end == Rational(1));
    CHECK_FALSE(ocS.attained);
    CHECK_FALSE(ocS.orbit.hi_closed);
}

TEST_CASE("cover dag and longest chain of the staircase family") {
    for (unsigned n = 0; n <= 5; ++n) {
        const auto dag = cover_dag(make_gn(n));
        CHECK(dag.nodes.size() == n);
        CHECK(dag.orbits.size() == n);
        CHECK(dag.edges.size() == n * (n - 1) / 2); // everything covers rightward
        const auto ch = max_chain(dag);
        CHECK(ch.length == static_cast<int>(n));
        REQUIRE(ch.chain.size() == n);
        for (unsigned i = 0; i < n; ++i)
            CHECK(ch.chain[i] == static_cast<int>(i));
    }
}

TEST_CASE("a single self-covering interval is a chain of length one") {
    PLMap S({{Rational(0), Rational(0)},
             {Rational(1, 2), Rational(3, 4)},
             {Rational(1), Rational(1)}});
    const auto dag = cover_dag(S);
    REQUIRE(dag.nodes.size() == 1);
    CHECK(dag.edges.empty());
    CHECK(max_chain(dag).length == 1);
}

TEST_CASE("cover dag refuses maps with higher periods") {
    CHECK_THROWS_AS(cover_dag(make_f0()), NotType1);
    CHECK_THROWS_AS(cover_dag(tent()), NotType1);
}
