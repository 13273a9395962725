#include <doctest.h>

#include <random>

#include "prym/projective.hpp"

using namespace prym;

namespace {

// Independent oracle: send (a, c) to (0, inf) with an elementary map, then
// rescale so b lands on 1. Shares no code path with cross_ratio.
ProjPoint cross_ratio_oracle(const ProjPoint& p, const ProjPoint& a, const ProjPoint& b,
                             const ProjPoint& c) {
    Mobius first;
    if (a.infinite) {
        first = Mobius{Complex(0.0), Complex(1.0), Complex(1.0), -c.value};
    } else if (c.infinite) {
        first = Mobius{Complex(1.0), -a.value, Complex(0.0), Complex(1.0)};
    } else {
        first = Mobius{Complex(1.0), -a.value, Complex(1.0), -c.value};
    }
    const ProjPoint at_b = first.apply(b);
    REQUIRE(!at_b.infinite);
    const Mobius rescale{Complex(1.0), Complex(0.0), Complex(0.0), at_b.value};
    return rescale.compose(first).apply(p);
}

std::mt19937_64 rng(20240801);

Complex random_complex(double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return Complex(d(rng), d(rng));
}

Mobius random_mobius() {
    for (;;) {
        Mobius g{random_complex(), random_complex(), random_complex(), random_complex()};
        if (std::abs(g.a * g.d - g.b * g.c) > 0.1) return g;
    }
}

}  // namespace

TEST_CASE("cross ratio frame conventions") {
    const ProjPoint a(Complex(0.3, -1.2)), b(Complex(2.0, 0.4)), c(Complex(-1.0, 0.1));
    CHECK(cross_ratio(a, a, b, c).value == Complex(0.0));
    CHECK(std::abs(cross_ratio(b, a, b, c).value - Complex(1.0)) < 1e-15);
    CHECK(cross_ratio(c, a, b, c).infinite);

    // frame (0,1,inf) induces the identity
    const ProjPoint p(Complex(5.0, 2.0));
    const auto r = cross_ratio(p, ProjPoint(0.0), ProjPoint(1.0), ProjPoint::infinity());
    CHECK(std::abs(r.value - Complex(5.0, 2.0)) < 1e-15);

    // ((2-1)(0-inf)) / ((2-inf)(0-1)) = -1 by the limit conventions
    const auto q = cross_ratio(ProjPoint(2.0), ProjPoint(1.0), ProjPoint(0.0), ProjPoint::infinity());
    CHECK(std::abs(q.value - Complex(-1.0)) < 1e-15);
    const auto qo =
        cross_ratio_oracle(ProjPoint(2.0), ProjPoint(1.0), ProjPoint(0.0), ProjPoint::infinity());
    CHECK(std::abs(q.value - qo.value) < 1e-14);
}

TEST_CASE("cross ratio agrees with the composition oracle") {
    for (int it = 0; it < 200; ++it) {
        const ProjPoint p(random_complex()), a(random_complex()), b(random_complex()),
            c(random_complex());
        if (coincident(a, b) || coincident(b, c) || coincident(a, c)) continue;
        const auto r1 = cross_ratio(p, a, b, c);
        const auto r2 = cross_ratio_oracle(p, a, b, c);
        REQUIRE(r1.infinite == r2.infinite);
        if (!r1.infinite) CHECK(std::abs(r1.value - r2.value) < 1e-9 * (1.0 + std::abs(r1.value)));
    }
}

TEST_CASE("cross ratio is a Moebius invariant") {
    int tested = 0;
    for (int it = 0; it < 120; ++it) {
        const ProjPoint p(random_complex()), a(random_complex()), b(random_complex()),
            c(random_complex());
        if (coincident(a, b) || coincident(b, c) || coincident(a, c)) continue;
        const Mobius g = random_mobius();
        const auto ga = g.apply(a), gb = g.apply(b), gc = g.apply(c);
        if (coincident(ga, gb) || coincident(gb, gc) || coincident(ga, gc)) continue;
        const auto before = cross_ratio(p, a, b, c);
        const auto after = cross_ratio(g.apply(p), ga, gb, gc);
        if (before.infinite || after.infinite) {
            CHECK(chordal_distance(before, after) < 1e-9);
        } else {
            CHECK(std::abs(before.value - after.value) <=
                  1e-12 * std::max(1.0, std::max(std::abs(before.value), std::abs(after.value))));
        }
        ++tested;
    }
    CHECK(tested > 80);
}

TEST_CASE("degenerate frames are rejected") {
    const ProjPoint a(Complex(1.0));
    CHECK_THROWS_WITH_AS(cross_ratio(ProjPoint(0.0), a, a, ProjPoint::infinity()),
                         "degenerate frame", std::invalid_argument);
    CHECK_THROWS_AS(cross_ratio(ProjPoint(0.0), ProjPoint::infinity(), a, ProjPoint::infinity()),
                    std::invalid_argument);
    // nearly coincident under the chordal metric
    CHECK_THROWS_AS(cross_ratio(ProjPoint(0.0), a, ProjPoint(Complex(1.0, 1e-12)), ProjPoint(2.0)),
                    std::invalid_argument);
}

TEST_CASE("chordal metric") {
    CHECK(chordal_distance(ProjPoint::infinity(), ProjPoint::infinity()) == 0.0);
    CHECK(chordal_distance(ProjPoint(0.0), ProjPoint::infinity()) == doctest::Approx(2.0));
    // large points approach infinity on the sphere
    CHECK(chordal_distance(ProjPoint(Complex(1e9, 0.0)), ProjPoint::infinity()) < 1e-8);
    CHECK(chordal_distance(ProjPoint(0.0), ProjPoint(1.0)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Moebius frame sends the references to 0, 1, infinity") {
    for (int it = 0; it < 60; ++it) {
        ProjPoint pts[3] = {ProjPoint(random_complex()), ProjPoint(random_complex()),
                            ProjPoint(random_complex())};
        if (it % 4 == 1) pts[0] = ProjPoint::infinity();
        if (it % 4 == 2) pts[1] = ProjPoint::infinity();
        if (it % 4 == 3) pts[2] = ProjPoint::infinity();
        if (coincident(pts[0], pts[1]) || coincident(pts[1], pts[2]) || coincident(pts[0], pts[2]))
            continue;
        const Mobius g = Mobius::frame(pts[0], pts[1], pts[2]);
        CHECK(chordal_distance(g.apply(pts[0]), ProjPoint(0.0)) < 1e-9);
        CHECK(chordal_distance(g.apply(pts[1]), ProjPoint(1.0)) < 1e-9);
        CHECK(chordal_distance(g.apply(pts[2]), ProjPoint::infinity()) < 1e-9);
    }
}
