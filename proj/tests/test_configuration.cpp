#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "prym/configuration.hpp"

using namespace prym;

namespace {

std::mt19937_64 rng(77001);

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

MarkedConfiguration random_configuration(MarkingKind kind) {
    for (;;) {
        MarkedConfiguration cfg;
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i) {
            cfg.points[i] = ProjPoint(random_complex());
            for (int j = 0; j < i; ++j)
                ok = ok && chordal_distance(cfg.points[i], cfg.points[j]) > 0.05;
        }
        if (!ok) continue;
        if (kind == MarkingKind::triple)
            cfg.marking = TripleMarking{{0, 1, 2}};
        else
            cfg.marking = PairPartitionMarking{{{{0, 1}, {2, 3}, {4, 5}}}};
        return cfg;
    }
}

MarkedConfiguration reference_points_config(MarkingKind kind) {
    MarkedConfiguration cfg;
    cfg.points = {ProjPoint(0.0), ProjPoint(1.0), ProjPoint::infinity(),
                  ProjPoint(2.0), ProjPoint(3.0), ProjPoint(4.0)};
    if (kind == MarkingKind::triple)
        cfg.marking = TripleMarking{{0, 1, 2}};
    else
        cfg.marking = PairPartitionMarking{{{{0, 3}, {1, 4}, {2, 5}}}};
    return cfg;
}

bool close(const Complex& x, const Complex& y, double tol = 1e-12) {
    return std::abs(x - y) <= tol * std::max(1.0, std::abs(x));
}

}  // namespace

TEST_CASE("normalize: points already in reference position, triple") {
    // The canonical frame is the lexicographically least over all 6 marked
    // orderings; for (0,1,inf | 2,3,4) the winner is the frame 1->0, 0->1,
    // inf->inf, i.e. z -> 1-z applied to (2,3,4).
    const auto n = normalize(reference_points_config(MarkingKind::triple));
    CHECK(n.kind == MarkingKind::triple);
    CHECK(close(n.b[0], Complex(-3.0)));
    CHECK(close(n.b[1], Complex(-2.0)));
    CHECK(close(n.b[2], Complex(-1.0)));

    // exactly 6 distinct candidate tuples (one per frame ordering), and
    // (2,3,4) from the identity frame is among them
    const auto cands = normalization_candidates(reference_points_config(MarkingKind::triple));
    REQUIRE(cands.size() == 6);
    std::set<std::array<long long, 6>> distinct;
    bool has_identity = false;
    for (const auto& c : cands) {
        distinct.insert({llround(c[0].real() * 1e6), llround(c[0].imag() * 1e6),
                         llround(c[1].real() * 1e6), llround(c[1].imag() * 1e6),
                         llround(c[2].real() * 1e6), llround(c[2].imag() * 1e6)});
        has_identity = has_identity ||
                       (close(c[0], Complex(2.0)) && close(c[1], Complex(3.0)) && close(c[2], Complex(4.0)));
    }
    CHECK(distinct.size() == 6);
    CHECK(has_identity);
}

TEST_CASE("normalize: pair partition in reference position") {
    const auto cfg = reference_points_config(MarkingKind::pair_partition);
    const auto cands = normalization_candidates(cfg);
    REQUIRE(cands.size() == 48);
    // the identity frame (partners of 0,1,inf in order) yields (2,3,4)
    bool has_identity = false;
    for (const auto& c : cands)
        has_identity = has_identity ||
                       (close(c[0], Complex(2.0)) && close(c[1], Complex(3.0)) && close(c[2], Complex(4.0)));
    CHECK(has_identity);
    // canonical form frozen from the candidate enumeration
    const auto n = normalize(cfg);
    CHECK(n.kind == MarkingKind::pair_partition);
    CHECK(close(n.b[0], Complex(-8.0)));
    CHECK(close(n.b[1], Complex(-2.0)));
    CHECK(close(n.b[2], Complex(4.0)));
}

TEST_CASE("normalize: generic triple via cross ratios") {
    MarkedConfiguration cfg;
    cfg.points = {ProjPoint(1.0), ProjPoint(2.0), ProjPoint(3.0),
                  ProjPoint(4.0), ProjPoint(5.0), ProjPoint(6.0)};
    cfg.marking = TripleMarking{{0, 1, 2}};
    const auto n = normalize(cfg);
    // cross_ratio(4;1,2,3) = -3, and the canonical frame keeps it least
    CHECK(close(n.b[0], Complex(-3.0)));
    CHECK(close(n.b[1], Complex(-2.0)));
    CHECK(close(n.b[2], Complex(-5.0 / 3.0)));

    // idempotence: normalizing the embedded normal form returns it unchanged
    const auto again = normalize(embed(n));
    for (int i = 0; i < 3; ++i) CHECK(close(again.b[i], n.b[i], 1e-9));
}

TEST_CASE("normalization is invariant under marked projective transport") {
    for (int it = 0; it < 30; ++it) {
        const auto kind = it % 2 ? MarkingKind::triple : MarkingKind::pair_partition;
        const auto cfg = random_configuration(kind);
        const Mobius g = random_mobius();
        const auto moved = transport(cfg, g);
        bool still_ok = true;
        for (int i = 0; i < 6 && still_ok; ++i)
            for (int j = i + 1; j < 6 && still_ok; ++j)
                still_ok = chordal_distance(moved.points[i], moved.points[j]) > 1e-6;
        if (!still_ok) continue;
        const auto n1 = normalize(cfg);
        const auto n2 = normalize(moved);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(n1.b[i] - n2.b[i]) < 1e-7 * std::max(1.0, std::abs(n1.b[i])));
    }
}

TEST_CASE("equivalent") {
    const auto cfg = random_configuration(MarkingKind::triple);
    CHECK(equivalent(cfg, cfg));

    // image under z -> 2z + 1 with the marking transported
    const Mobius g{Complex(2.0), Complex(1.0), Complex(0.0), Complex(1.0)};
    CHECK(equivalent(cfg, transport(cfg, g)));

    MarkedConfiguration a = reference_points_config(MarkingKind::triple);
    MarkedConfiguration b = a;
    b.points[5] = ProjPoint(5.0);
    CHECK_FALSE(equivalent(a, b));

    MarkedConfiguration pairs = reference_points_config(MarkingKind::pair_partition);
    CHECK_THROWS_AS((void)equivalent(a, pairs), std::invalid_argument);

    const Mobius h = random_mobius();
    const auto moved = transport(pairs, h);
    CHECK(equivalent(pairs, moved, 1e-7));
}

TEST_CASE("validation rejects bad configurations") {
    MarkedConfiguration cfg = reference_points_config(MarkingKind::triple);
    cfg.points[4] = cfg.points[3];
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

    cfg = reference_points_config(MarkingKind::triple);
    cfg.marking = TripleMarking{{0, 0, 2}};
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

    cfg.marking = TripleMarking{{0, 1, 7}};
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

    cfg.marking = PairPartitionMarking{{{{0, 1}, {1, 2}, {4, 5}}}};
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

    // nearly coincident points fail the chordal distinctness gate
    cfg = reference_points_config(MarkingKind::triple);
    cfg.points[4] = ProjPoint(Complex(2.0, 1e-11));
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}
