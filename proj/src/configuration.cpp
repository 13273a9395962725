#include "prym/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prym {

namespace {

bool lex_less(const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

bool lex_less(const std::array<Complex, 3>& s, const std::array<Complex, 3>& t) {
    for (int i = 0; i < 3; ++i) {
        if (s[i].real() != t[i].real()) return s[i].real() < t[i].real();
        if (s[i].imag() != t[i].imag()) return s[i].imag() < t[i].imag();
    }
    return false;
}

Complex finite_cross_ratio(const ProjPoint& p, const ProjPoint& a, const ProjPoint& b,
                           const ProjPoint& c) {
    const ProjPoint r = cross_ratio(p, a, b, c);
    if (r.infinite) throw std::logic_error("unexpected infinite normalized point");
    return r.value;
}

}  // namespace

void validate(const MarkedConfiguration& cfg, double tol) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (coincident(cfg.points[i], cfg.points[j], tol))
                throw std::invalid_argument("configuration has coincident points");

    std::array<int, 6> seen{};
    if (const auto* t = std::get_if<TripleMarking>(&cfg.marking)) {
        for (int idx : t->indices) {
            if (idx < 0 || idx > 5) throw std::invalid_argument("marking index out of range");
            if (seen[idx]++) throw std::invalid_argument("marking indices not distinct");
        }
    } else {
        const auto& pp = std::get<PairPartitionMarking>(cfg.marking);
        for (const auto& pr : pp.pairs)
            for (int idx : pr) {
                if (idx < 0 || idx > 5) throw std::invalid_argument("marking index out of range");
                if (seen[idx]++) throw std::invalid_argument("pairs are not disjoint");
            }
        for (int i = 0; i < 6; ++i)
            if (!seen[i]) throw std::invalid_argument("pairs do not cover all six points");
    }
}

std::vector<std::array<Complex, 3>> normalization_candidates(const MarkedConfiguration& cfg,
                                                             double tol) {
    validate(cfg, tol);
    std::vector<std::array<Complex, 3>> out;

    if (const auto* t = std::get_if<TripleMarking>(&cfg.marking)) {
        std::array<int, 3> frame = t->indices;
        std::sort(frame.begin(), frame.end());
        std::array<int, 3> unmarked{};
        int k = 0;
        for (int i = 0; i < 6; ++i)
            if (i != frame[0] && i != frame[1] && i != frame[2]) unmarked[k++] = i;

        do {
            std::array<Complex, 3> b;
            for (int i = 0; i < 3; ++i)
                b[i] = finite_cross_ratio(cfg.points[unmarked[i]], cfg.points[frame[0]],
                                          cfg.points[frame[1]], cfg.points[frame[2]]);
            std::sort(b.begin(), b.end(), [](const Complex& x, const Complex& y) {
                return lex_less(x, y);
            });
            out.push_back(b);
        } while (std::next_permutation(frame.begin(), frame.end()));
    } else {
        const auto& pp = std::get<PairPartitionMarking>(cfg.marking);
        std::array<int, 3> order{0, 1, 2};
        do {
            for (int sel = 0; sel < 8; ++sel) {
                std::array<int, 3> refs{}, partners{};
                for (int i = 0; i < 3; ++i) {
                    const auto& pr = pp.pairs[order[i]];
                    const int pick = (sel >> i) & 1;
                    refs[i] = pr[pick];
                    partners[i] = pr[1 - pick];
                }
                std::array<Complex, 3> b;
                for (int i = 0; i < 3; ++i)
                    b[i] = finite_cross_ratio(cfg.points[partners[i]], cfg.points[refs[0]],
                                              cfg.points[refs[1]], cfg.points[refs[2]]);
                out.push_back(b);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

NormalizedConfiguration normalize(const MarkedConfiguration& cfg, double tol) {
    const auto candidates = normalization_candidates(cfg, tol);
    const auto best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const auto& s, const auto& t) { return lex_less(s, t); });
    return NormalizedConfiguration{*best, cfg.kind()};
}

MarkedConfiguration embed(const NormalizedConfiguration& n) {
    MarkedConfiguration cfg;
    cfg.points = {ProjPoint(0.0), ProjPoint(1.0),          ProjPoint::infinity(),
                  ProjPoint(n.b[0]), ProjPoint(n.b[1]), ProjPoint(n.b[2])};
    if (n.kind == MarkingKind::triple)
        cfg.marking = TripleMarking{{0, 1, 2}};
    else
        cfg.marking = PairPartitionMarking{{{{0, 3}, {1, 4}, {2, 5}}}};
    validate(cfg);
    return cfg;
}

MarkedConfiguration transport(const MarkedConfiguration& cfg, const Mobius& g) {
    MarkedConfiguration out = cfg;
    for (auto& p : out.points) p = g.apply(p);
    return out;
}

bool equivalent(const MarkedConfiguration& a, const MarkedConfiguration& b, double tol) {
    if (a.kind() != b.kind()) throw std::invalid_argument("marking kind mismatch");
    const auto ca = normalization_candidates(a);
    const auto cb = normalization_candidates(b);
    for (const auto& s : ca)
        for (const auto& t : cb) {
            bool close = true;
            for (int i = 0; i < 3 && close; ++i)
                close = std::abs(s[i] - t[i]) <= tol * std::max({1.0, std::abs(s[i]), std::abs(t[i])});
            if (close) return true;
        }
    return false;
}

}  // namespace prym
