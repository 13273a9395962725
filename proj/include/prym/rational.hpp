#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace prym {

// Exact rational arithmetic on small numbers. All lattice coordinates and
// alternating-form values in this project have denominators dividing 64,
// so int64 never gets close to overflow.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // representative in [0, 1)
    Rational mod1() const {
        std::int64_t r = num % den;
        if (r < 0) r += den;
        return Rational(r, den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Best rational approximation with bounded denominator (continued fractions).
// Returns nullopt when no denominator <= max_den approximates x within tol.
std::optional<Rational> snap_rational(double x, std::int64_t max_den = 64, double tol = 1e-9);

}  // namespace prym
