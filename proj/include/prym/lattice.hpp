#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "prym/projective.hpp"
#include "prym/rational.hpp"

namespace prym {

using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Polarization type D = diag(d1, d2, d3) with d1 | d2 | d3.
struct PolarizationType {
    std::array<std::int64_t, 3> d{1, 1, 1};

    PolarizationType() = default;
    PolarizationType(std::int64_t d1, std::int64_t d2, std::int64_t d3);

    friend bool operator==(const PolarizationType& a, const PolarizationType& b) {
        return a.d == b.d;
    }
};

// A D-polarized complex torus C^3 / (Z Z^3 + D Z^3): Z symmetric with
// positive-definite imaginary part.
struct PolarizedPeriodMatrix {
    Matrix3c Z;
    PolarizationType D;

    // Column k of [Z D], k in 0..5.
    Vector3c lattice_vector(int k) const;
    Eigen::Matrix<Complex, 3, 6> period_basis() const;
};

// Validates symmetry (|Z - Z^T| < 1e-12) and Im Z > 0 (eigenvalues > 1e-12).
PolarizedPeriodMatrix make_polarized(const Matrix3c& Z, const PolarizationType& D);

// Coordinates of a vector in the lattice basis (Z[1], Z[2], Z[3], D[1], D[2], D[3]).
struct LatticeCoordinates {
    std::array<double, 6> raw{};        // exact real solution
    std::array<Rational, 6> rational{}; // snapped, valid when in_lattice_span
    bool in_lattice_span = false;       // all components snapped to denominator <= 64
};

// Solves the 6x6 real system [Re; Im] x = v. Throws when the system is
// ill-conditioned (condition number > 1e12). Components within 1e-9 of a
// rational with denominator <= 64 are snapped; otherwise the result is
// flagged and only raw values are meaningful.
LatticeCoordinates integer_coordinates(const Vector3c& v, const PolarizedPeriodMatrix& target);

// Alternating form on lattice coordinates: u^T J_D v with J_D carrying +D in
// the upper-right block and -D in the lower-left.
Rational omega(const std::array<Rational, 6>& u, const std::array<Rational, 6>& v,
               const PolarizationType& D);

// An analytic representation F: C^n -> C^3 of a homomorphism of complex tori,
// together with its source lattice (columns of source_periods, an n x 2n
// matrix) and polarized target.
struct AnalyticHom {
    Eigen::MatrixXcd F;               // 3 x n
    Eigen::MatrixXcd source_periods;  // n x 2n
    PolarizedPeriodMatrix target;

    int source_dim() const { return static_cast<int>(F.cols()); }
};

// Embedding of an elliptic curve with lattice <g1, g2> along direction, i.e.
// F(x) = x * direction.
AnalyticHom elliptic_embedding(Complex g1, Complex g2, const Vector3c& direction,
                               const PolarizedPeriodMatrix& target);

// Integer matrix (6 x 2n) of the images of the source lattice basis in
// target lattice coordinates. Throws "not a homomorphism" when an image
// fails to land on the target lattice.
IntMatrix integer_image_matrix(const AnalyticHom& h);

// Smith normal form U A V = S with U, V unimodular and nonnegative diagonal
// S satisfying the divisibility chain.
struct SmithDecomposition {
    IntMatrix U, S, V;
    std::vector<std::int64_t> diagonal() const;
};
SmithDecomposition smith_normal_form(const IntMatrix& A);

// |omega(image of g1, image of g2)| for a 1-dimensional source. Throws when
// the images are not primitive independent lattice vectors.
std::int64_t restricted_polarization_type(const AnalyticHom& embedding);

struct KernelGenerator {
    std::array<Rational, 6> source_coords;   // mod 1, w.r.t. source lattice basis
    std::array<std::int64_t, 6> image_coords;  // integer target-lattice coordinates
    Vector3c point;                          // lift to the source C^3
    std::int64_t order = 1;
};

struct IsogenyKernelReport {
    std::int64_t order = 1;
    std::vector<std::int64_t> elementary_divisors;  // all 2n of them
    std::vector<KernelGenerator> generators;        // one per divisor > 1
};

// Kernel of an equal-dimensional homomorphism: Z^6 modulo the image columns,
// via Smith normal form. Throws "not an isogeny" when det = 0.
IsogenyKernelReport isogeny_kernel(const AnalyticHom& h);

// A kernel element as source-lattice coordinates mod 1.
struct KernelElement {
    std::array<Rational, 6> coords{};

    friend bool operator==(const KernelElement& a, const KernelElement& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const KernelElement& a, const KernelElement& b) {
        for (int i = 0; i < 6; ++i) {
            if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
        }
        return false;
    }
};

std::set<KernelElement> kernel_elements(const IsogenyKernelReport& report);

// Subgroup generated by arbitrary order-2..k rational points, mod 1.
std::set<KernelElement> span_mod_lattice(const std::vector<KernelElement>& generators);

// Number of distinct images of the kernel under the projection to source
// factor i (coordinates 2i, 2i+1).
int kernel_projection_order(const std::set<KernelElement>& elements, int factor);

// Elementary divisors of the pulled-back alternating form M^T J_D M,
// reported as the type triple (divisors come in equal pairs).
std::array<std::int64_t, 3> polarization_type_of_pullback(const AnalyticHom& h);

// Group structure of ker(lambda_D) = prod (Z/d_i)^2 and of its 2-torsion.
struct TwoTorsionKernelInfo {
    std::vector<std::int64_t> kernel_cyclic_factors;       // the d_i repeated twice, 1s dropped
    std::vector<std::int64_t> two_torsion_cyclic_factors;  // gcd(d_i,2) repeated twice, 1s dropped
    std::int64_t kernel_order = 1;
    std::int64_t two_torsion_order = 1;
};
TwoTorsionKernelInfo two_torsion_in_kernel_of_lambda(const PolarizationType& D);

}  // namespace prym
