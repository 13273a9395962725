#include "prym/projective.hpp"

#include <cmath>
#include <stdexcept>

namespace prym {

double chordal_distance(const ProjPoint& p, const ProjPoint& q) {
    if (p.infinite && q.infinite) return 0.0;
    if (p.infinite) return chordal_distance(q, p);
    const double np = std::norm(p.value);
    if (q.infinite) return 2.0 / std::sqrt(1.0 + np);
    const double nq = std::norm(q.value);
    return 2.0 * std::abs(p.value - q.value) / std::sqrt((1.0 + np) * (1.0 + nq));
}

bool coincident(const ProjPoint& p, const ProjPoint& q, double tol) {
    return chordal_distance(p, q) < tol;
}

namespace {

ProjPoint quotient(Complex num, Complex den) {
    if (den == Complex(0.0, 0.0)) return ProjPoint::infinity();
    return ProjPoint(num / den);
}

}  // namespace

ProjPoint cross_ratio(const ProjPoint& p, const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& c) {
    if (coincident(a, b) || coincident(b, c) || coincident(a, c))
        throw std::invalid_argument("degenerate frame");

    if (a.infinite) {
        // ((p-a)(b-c))/((p-c)(b-a)) -> (b-c)/(p-c)
        if (p.infinite) return ProjPoint(1.0);
        return quotient(b.value - c.value, p.value - c.value);
    }
    if (b.infinite) {
        // -> (p-a)/(p-c)
        if (p.infinite) return ProjPoint(1.0);
        return quotient(p.value - a.value, p.value - c.value);
    }
    if (c.infinite) {
        // -> (p-a)/(b-a)
        if (p.infinite) return ProjPoint::infinity();
        return quotient(p.value - a.value, b.value - a.value);
    }
    if (p.infinite) return quotient(b.value - c.value, b.value - a.value);
    return quotient((p.value - a.value) * (b.value - c.value),
                    (p.value - c.value) * (b.value - a.value));
}

ProjPoint Mobius::apply(const ProjPoint& p) const {
    if (p.infinite) {
        if (c == Complex(0.0, 0.0)) return ProjPoint::infinity();
        return ProjPoint(a / c);
    }
    const Complex den = c * p.value + d;
    if (den == Complex(0.0, 0.0)) return ProjPoint::infinity();
    return ProjPoint((a * p.value + b) / den);
}

Mobius Mobius::compose(const Mobius& o) const {
    return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mobius Mobius::inverse() const { return Mobius{d, -b, -c, a}; }

Mobius Mobius::frame(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& pinf) {
    if (coincident(p0, p1) || coincident(p1, pinf) || coincident(p0, pinf))
        throw std::invalid_argument("degenerate frame");
    if (p0.infinite) {
        // z -> (p1-pinf)/(z-pinf)
        return Mobius{Complex(0.0), p1.value - pinf.value, Complex(1.0), -pinf.value};
    }
    if (p1.infinite) {
        // z -> (z-p0)/(z-pinf)
        return Mobius{Complex(1.0), -p0.value, Complex(1.0), -pinf.value};
    }
    if (pinf.infinite) {
        // z -> (z-p0)/(p1-p0)
        return Mobius{Complex(1.0), -p0.value, Complex(0.0), p1.value - p0.value};
    }
    const Complex bc = p1.value - pinf.value;
    const Complex ba = p1.value - p0.value;
    return Mobius{bc, -p0.value * bc, ba, -pinf.value * ba};
}

}  // namespace prym
