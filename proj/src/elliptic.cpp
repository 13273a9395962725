#include "prym/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prym {

namespace {

constexpr int kAgmMaxIter = 64;
constexpr double kAgmTol = 1e-15;
constexpr double kSeriesTol = 1e-18;
constexpr double kDegenerateTol = 1e-12;

}  // namespace

bool LevelTwoLabel::is_bijection() const {
    int seen = 0;
    for (int i : {zero_point, one_point, infinity_point, lambda_point}) {
        if (i < 0 || i > 3) return false;
        seen |= 1 << i;
    }
    return seen == 0xF;
}

Complex complex_agm(Complex a, Complex b) {
    for (int it = 0; it < kAgmMaxIter; ++it) {
        if (std::abs(a - b) <= kAgmTol * std::abs(a)) return 0.5 * (a + b);
        const Complex a1 = 0.5 * (a + b);
        Complex b1 = std::sqrt(a * b);
        if (std::abs(a1 - b1) > std::abs(a1 + b1)) b1 = -b1;
        a = a1;
        b = b1;
    }
    throw std::runtime_error("AGM did not converge");
}

Complex elliptic_K_param(Complex m) {
    return std::numbers::pi / (2.0 * complex_agm(Complex(1.0), std::sqrt(Complex(1.0) - m)));
}

std::array<double, 2> elliptic_KE_modulus(double k) {
    if (k < 0.0 || k >= 1.0) throw std::invalid_argument("modulus outside [0,1)");
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    double csum = 0.5 * k * k;  // 2^{-1} c_0^2
    double pow2 = 0.5;
    for (int n = 0; n < kAgmMaxIter && std::abs(a - b) > 1e-16 * a; ++n) {
        const double c = 0.5 * (a - b);
        pow2 *= 2.0;
        csum += pow2 * c * c;
        const double a1 = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = a1;
    }
    const double K = std::numbers::pi / (2.0 * a);
    return {K, K * (1.0 - csum)};
}

Complex reduce_level_two(Complex tau) {
    for (int it = 0; it < 256; ++it) {
        tau -= 2.0 * std::round(tau.real() / 2.0);
        if (std::abs(2.0 * tau + 1.0) < 1.0 - 1e-14) {
            tau = tau / (2.0 * tau + 1.0);
        } else if (std::abs(2.0 * tau - 1.0) < 1.0 - 1e-14) {
            tau = tau / (-2.0 * tau + 1.0);
        } else {
            return tau;
        }
    }
    throw std::runtime_error("level-2 reduction did not terminate");
}

HalfPeriodRatio tau_from_legendre(Complex m) {
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
        throw std::invalid_argument("Legendre parameter must be finite");
    if (std::abs(m) < kDegenerateTol || std::abs(m - 1.0) < kDegenerateTol)
        throw std::invalid_argument("Legendre parameter degenerates to 0 or 1");
    const Complex tau = Complex(0.0, 1.0) * complex_agm(Complex(1.0), std::sqrt(Complex(1.0) - m)) /
                        complex_agm(Complex(1.0), std::sqrt(m));
    const Complex reduced = reduce_level_two(tau);
    if (reduced.imag() <= 0.0) throw std::runtime_error("half-period ratio left the upper half-plane");
    return HalfPeriodRatio{reduced};
}

HalfPeriodRatio tau_from_branch_points(const std::array<ProjPoint, 4>& branch,
                                       const LevelTwoLabel& label) {
    if (!label.is_bijection()) throw std::invalid_argument("label assignment is not a bijection");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (coincident(branch[i], branch[j]))
                throw std::invalid_argument("coincident branch points");
    const ProjPoint m = cross_ratio(branch[label.lambda_point], branch[label.zero_point],
                                    branch[label.one_point], branch[label.infinity_point]);
    if (m.infinite) throw std::invalid_argument("Legendre parameter degenerates to infinity");
    return tau_from_legendre(m.value);
}

Complex modular_lambda(Complex tau) {
    if (tau.imag() <= 0.0) throw std::invalid_argument("tau must lie in the upper half-plane");
    tau = reduce_level_two(tau);
    const Complex ipi(0.0, std::numbers::pi);

    Complex theta2(0.0);
    for (int n = 0; n < kAgmMaxIter; ++n) {
        const double e = (n + 0.5) * (n + 0.5);
        const Complex term = std::exp(ipi * tau * e);
        theta2 += term;
        if (std::abs(term) < kSeriesTol) break;
    }
    theta2 *= 2.0;

    Complex theta3(1.0);
    for (int n = 1; n < kAgmMaxIter; ++n) {
        const Complex term = std::exp(ipi * tau * static_cast<double>(n) * static_cast<double>(n));
        theta3 += 2.0 * term;
        if (std::abs(term) < kSeriesTol) break;
    }

    const Complex r = theta2 / theta3;
    const Complex r2 = r * r;
    return r2 * r2;
}

}  // namespace prym
