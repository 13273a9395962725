#include <doctest.h>

#include "prym/json_io.hpp"

using namespace prym;

namespace {

MarkedConfiguration sample_config(MarkingKind kind) {
    MarkedConfiguration cfg;
    cfg.points = {ProjPoint(Complex(0.0, 0.0)),  ProjPoint(Complex(1.0, 0.0)),
                  ProjPoint::infinity(),          ProjPoint(Complex(2.0, 0.5)),
                  ProjPoint(Complex(3.0, -0.25)), ProjPoint(Complex(0.4, 1.5))};
    if (kind == MarkingKind::triple)
        cfg.marking = TripleMarking{{0, 1, 2}};
    else
        cfg.marking = PairPartitionMarking{{{{0, 3}, {1, 4}, {2, 5}}}};
    return cfg;
}

}  // namespace

TEST_CASE("configuration round trip through JSON") {
    for (auto kind : {MarkingKind::triple, MarkingKind::pair_partition}) {
        const auto cfg = sample_config(kind);
        const Json j = to_json(cfg);
        const auto back = configuration_from_json(j);
        CHECK(back.kind() == kind);
        for (int i = 0; i < 6; ++i) {
            CHECK(back.points[i].infinite == cfg.points[i].infinite);
            if (!back.points[i].infinite) CHECK(back.points[i].value == cfg.points[i].value);
        }
        // wrapped form parses identically (schema closure with CLI output)
        const Json wrapped{{"configuration", j}};
        CHECK(configuration_from_json(wrapped).kind() == kind);
    }
}

TEST_CASE("normalized configuration and period matrix round trips") {
    const auto n = normalize(sample_config(MarkingKind::triple));
    const auto n2 = normalized_from_json(to_json(n));
    CHECK(n2.kind == n.kind);
    for (int i = 0; i < 3; ++i) CHECK(n2.b[i] == n.b[i]);

    const auto result = prym_forward(n);
    const auto P2 = period_matrix_from_json(to_json(result.torus));
    CHECK(P2.D == result.torus.D);
    CHECK((P2.Z - result.torus.Z).cwiseAbs().maxCoeff() == 0.0);

    // full result JSON carries the matrix under "period_matrix"
    const Json rj = to_json(result);
    const auto P3 = period_matrix_from_json(rj["period_matrix"]);
    CHECK(P3.D == result.torus.D);
}

TEST_CASE("serialization is deterministic") {
    const auto result = prym_forward(normalize(sample_config(MarkingKind::pair_partition)));
    CHECK(to_json(result).dump(2) == to_json(result).dump(2));
    const auto report = verify_prym(result);
    CHECK(to_json(report)["all_pass"].get<bool>());
}

TEST_CASE("parse errors carry schema context") {
    CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"points": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(Json::parse(
                        R"({"points": [[0,0],[1,0],"inf",[2,0],[3,0],[4,0]], "marking": {}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(point_from_json(Json("infinity")), std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(Json::parse("[1]")), std::invalid_argument);
    CHECK_THROWS_AS(period_matrix_from_json(Json::parse(R"({"Z": [], "D": [1,1,4]})")),
                    std::invalid_argument);
}

TEST_CASE("subgroup serialization uses sorted 1-based index arrays") {
    const auto g = subgroup_from_triple({1, 2, 3});
    const Json j = to_json(g);
    CHECK(j["elements"][0] == Json::array());
    CHECK(j["elements"][1] == Json::array({1, 2}));
    CHECK(j["isotropic"] == false);
    CHECK(j["triple"] == Json::array({1, 2, 3}));

    const auto iso = subgroup_from_pairs({{{1, 2}, {3, 4}, {5, 6}}});
    const Json ji = to_json(iso);
    CHECK(ji["isotropic"] == true);
    CHECK(ji["pairs"][0] == Json::array({1, 2}));
}
