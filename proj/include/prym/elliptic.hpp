#pragma once

#include <array>
#include <complex>

#include "prym/projective.hpp"

namespace prym {

// Half-period ratio of an elliptic curve, Im(tau) > 0.
struct HalfPeriodRatio {
    Complex tau;
};

// Which of the four branch points plays which role. The entries are indices
// into the branch array; the b-point is the one whose cross-ratio against
// the frame (0-point, 1-point, infinity-point) is the Legendre parameter.
struct LevelTwoLabel {
    int zero_point = 0;
    int one_point = 1;
    int infinity_point = 2;
    int lambda_point = 3;

    static LevelTwoLabel identity() { return {}; }
    bool is_bijection() const;
};

// Arithmetic-geometric mean with the principal square-root selection
// (|a-b| <= |a+b| at every step). Throws after 64 iterations without
// convergence.
Complex complex_agm(Complex a, Complex b);

// Complete elliptic integral K as a function of the parameter m = k^2:
// K = pi / (2 agm(1, sqrt(1-m))).
Complex elliptic_K_param(Complex m);

// Real K(k) and E(k) from modulus k in [0, 1), computed with one AGM sweep.
std::array<double, 2> elliptic_KE_modulus(double k);

// Moves tau into the standard fundamental domain of the level-2 group
// {|Re tau| <= 1, |2 tau +/- 1| >= 1}; the modular lambda value is unchanged.
Complex reduce_level_two(Complex tau);

// tau = i K(sqrt(1-m)) / K(sqrt(m)) reduced into the fundamental domain.
// Throws when m is 0, 1 or infinite (coincident branch points).
HalfPeriodRatio tau_from_legendre(Complex m);

// Half-period ratio of the double cover of P^1 branched at the four given
// points, with the labelled point playing the Legendre-parameter role.
HalfPeriodRatio tau_from_branch_points(const std::array<ProjPoint, 4>& branch,
                                       const LevelTwoLabel& label = LevelTwoLabel::identity());

// theta2(0,tau)^4 / theta3(0,tau)^4 by q-series with q = exp(i pi tau),
// terms truncated below 1e-18. Throws when Im(tau) <= 0.
Complex modular_lambda(Complex tau);
inline Complex modular_lambda(const HalfPeriodRatio& t) { return modular_lambda(t.tau); }

}  // namespace prym
