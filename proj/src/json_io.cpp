#include "prym/json_io.hpp"

#include <stdexcept>

namespace prym {

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ProjPoint& p) {
    if (p.infinite) return Json("inf");
    return to_json(p.value);
}

Json to_json(const MarkedConfiguration& cfg) {
    Json j;
    j["points"] = Json::array();
    for (const auto& p : cfg.points) j["points"].push_back(to_json(p));
    if (const auto* t = std::get_if<TripleMarking>(&cfg.marking)) {
        j["marking"] = Json{{"triple", t->indices}};
    } else {
        const auto& pp = std::get<PairPartitionMarking>(cfg.marking);
        j["marking"] = Json{{"pairs", pp.pairs}};
    }
    return j;
}

Json to_json(const NormalizedConfiguration& cfg) {
    Json j;
    j["b"] = Json::array();
    for (const auto& z : cfg.b) j["b"].push_back(to_json(z));
    j["marking_kind"] = cfg.kind == MarkingKind::triple ? "triple" : "pair_partition";
    return j;
}

Json to_json(const PolarizedPeriodMatrix& P) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(to_json(P.Z(r, c)));
        rows.push_back(row);
    }
    return Json{{"Z", rows}, {"D", P.D.d}};
}

Json to_json(const KleinSubgroup& g) {
    Json elements = Json::array();
    for (const auto& e : g.elements) elements.push_back(e.indices());
    Json j{{"elements", elements}, {"isotropic", g.isotropic}};
    const auto cls = classify_subgroup(g);
    if (cls.isotropic)
        j["pairs"] = cls.pairs;
    else
        j["triple"] = cls.triple;
    return j;
}

Json to_json(const IsogenyKernelReport& k) {
    Json gens = Json::array();
    for (const auto& g : k.generators) {
        Json coords = Json::array();
        for (const auto& r : g.source_coords) coords.push_back(Json::array({r.num, r.den}));
        Json point = Json::array();
        for (int i = 0; i < 3; ++i) point.push_back(to_json(Complex(g.point(i))));
        gens.push_back(Json{{"order", g.order},
                            {"source_coords", coords},
                            {"image_coords", g.image_coords},
                            {"point", point}});
    }
    return Json{{"order", k.order},
                {"elementary_divisors", k.elementary_divisors},
                {"generators", gens}};
}

Json to_json(const PrymResult& r) {
    Json j;
    j["case"] = r.kind == PrymCase::non_isotropic ? "non_isotropic" : "isotropic";
    j["period_matrix"] = to_json(r.torus);
    j["half_periods"] = Json::array();
    for (const auto& z : r.half_periods) j["half_periods"].push_back(to_json(z));
    j["restricted_types"] = r.restricted_types;
    j["kernel"] = to_json(r.kernel);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json checks;
    for (const auto& c : r.checks) checks[c.name] = Json{{"pass", c.pass}, {"detail", c.detail}};
    return Json{{"checks", checks}, {"all_pass", r.all_pass()}};
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("bad input: " + what); }

double number_from_json(const Json& j) {
    if (!j.is_number()) fail("expected a number");
    return j.get<double>();
}

}  // namespace

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail("complex numbers are [re, im] pairs");
    return Complex(number_from_json(j[0]), number_from_json(j[1]));
}

ProjPoint point_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ProjPoint::infinity();
        fail("the only string point is \"inf\"");
    }
    return ProjPoint(complex_from_json(j));
}

MarkedConfiguration configuration_from_json(const Json& j) {
    const Json& src = j.is_object() && j.contains("configuration") ? j["configuration"] : j;
    if (!src.is_object() || !src.contains("points") || !src.contains("marking"))
        fail("configuration needs \"points\" and \"marking\"");
    const Json& pts = src["points"];
    if (!pts.is_array() || pts.size() != 6) fail("expected exactly 6 points");
    MarkedConfiguration cfg;
    for (int i = 0; i < 6; ++i) cfg.points[i] = point_from_json(pts[i]);

    const Json& m = src["marking"];
    if (m.is_object() && m.contains("triple")) {
        const Json& t = m["triple"];
        if (!t.is_array() || t.size() != 3) fail("triple marking needs 3 indices");
        TripleMarking tm;
        for (int i = 0; i < 3; ++i) tm.indices[i] = t[i].get<int>();
        cfg.marking = tm;
    } else if (m.is_object() && m.contains("pairs")) {
        const Json& p = m["pairs"];
        if (!p.is_array() || p.size() != 3) fail("pair marking needs 3 pairs");
        PairPartitionMarking pm;
        for (int i = 0; i < 3; ++i) {
            if (!p[i].is_array() || p[i].size() != 2) fail("each pair needs 2 indices");
            pm.pairs[i] = {p[i][0].get<int>(), p[i][1].get<int>()};
        }
        cfg.marking = pm;
    } else {
        fail("marking must contain \"triple\" or \"pairs\"");
    }
    validate(cfg);
    return cfg;
}

NormalizedConfiguration normalized_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("b") || !j.contains("marking_kind"))
        fail("normalized configuration needs \"b\" and \"marking_kind\"");
    const Json& b = j["b"];
    if (!b.is_array() || b.size() != 3) fail("expected 3 free points");
    NormalizedConfiguration cfg;
    for (int i = 0; i < 3; ++i) cfg.b[i] = complex_from_json(b[i]);
    const std::string kind = j["marking_kind"].get<std::string>();
    if (kind == "triple")
        cfg.kind = MarkingKind::triple;
    else if (kind == "pair_partition")
        cfg.kind = MarkingKind::pair_partition;
    else
        fail("marking_kind must be \"triple\" or \"pair_partition\"");
    return cfg;
}

PolarizedPeriodMatrix period_matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("Z") || !j.contains("D"))
        fail("period matrix needs \"Z\" and \"D\"");
    const Json& rows = j["Z"];
    if (!rows.is_array() || rows.size() != 3) fail("Z must be 3x3");
    Matrix3c Z;
    for (int r = 0; r < 3; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 3) fail("Z must be 3x3");
        for (int c = 0; c < 3; ++c) Z(r, c) = complex_from_json(rows[r][c]);
    }
    const Json& d = j["D"];
    if (!d.is_array() || d.size() != 3) fail("D must have 3 entries");
    const PolarizationType D(d[0].get<std::int64_t>(), d[1].get<std::int64_t>(),
                             d[2].get<std::int64_t>());
    return make_polarized(Z, D);
}

}  // namespace prym
