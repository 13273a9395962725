#pragma once

#include <complex>

namespace prym {

using Complex = std::complex<double>;

// Points closer than this in the chordal metric count as coincident.
inline constexpr double kCoincidenceTol = 1e-9;

// A point of P^1: either a finite complex number or the point at infinity.
// Infinity is a tag, never a large float, so the cross-ratio limit
// conventions stay exact.
struct ProjPoint {
    Complex value{0.0, 0.0};
    bool infinite = false;

    ProjPoint() = default;
    ProjPoint(Complex v) : value(v) {}
    ProjPoint(double v) : value(v, 0.0) {}
    static ProjPoint infinity() {
        ProjPoint p;
        p.infinite = true;
        return p;
    }
    bool is_finite() const { return !infinite; }
};

// Chordal distance on the Riemann sphere, range [0, 2].
double chordal_distance(const ProjPoint& p, const ProjPoint& q);

bool coincident(const ProjPoint& p, const ProjPoint& q, double tol = kCoincidenceTol);

// Image of p under the unique Moebius map sending a -> 0, b -> 1, c -> infinity:
// ((p - a)(b - c)) / ((p - c)(b - a)), with the standard limit conventions when
// any argument is the point at infinity. Throws std::invalid_argument
// ("degenerate frame") when a, b, c are not pairwise distinct.
ProjPoint cross_ratio(const ProjPoint& p, const ProjPoint& a, const ProjPoint& b,
                      const ProjPoint& c);

// Moebius transformation z -> (az + b) / (cz + d), det != 0.
struct Mobius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    ProjPoint apply(const ProjPoint& p) const;
    Mobius compose(const Mobius& other) const;  // this after other
    Mobius inverse() const;

    // The map sending (p0, p1, pinf) to (0, 1, infinity).
    static Mobius frame(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& pinf);
};

}  // namespace prym
