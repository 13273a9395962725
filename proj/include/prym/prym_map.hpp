#pragma once

#include <array>
#include <string>
#include <vector>

#include "prym/configuration.hpp"
#include "prym/elliptic.hpp"
#include "prym/lattice.hpp"

namespace prym {

enum class PrymCase { non_isotropic, isotropic };

// Period matrix of a (1,1,4)-polarized threefold from three half periods,
// Im z_i > 0. The output lies on the locus
//   -2 z11 = z31,  z21 = z11 + z22 - z33/4,  -2 z22 = z32.
PolarizedPeriodMatrix build_z4(Complex z1, Complex z2, Complex z3);

// Period matrix of a (1,2,2)-polarized threefold on the locus
//   z33 = 2 z31,  z32 = 0,  z22 = 2 z21.
PolarizedPeriodMatrix build_z2(Complex z1, Complex z2, Complex z3);

bool in_z4_locus(const Matrix3c& Z, double tol = 1e-9);
bool in_z2_locus(const Matrix3c& Z, double tol = 1e-9);

// The three elliptic embeddings into the given torus, and the addition map
// from their product. Sources:
//   (1,1,4) case:  <z_i, 4> with directions (0,-1/2,1), (1/2,1/2,-1), (-1/2,0,1);
//   (1,2,2) case:  <z_1, 1>, <z_2, 2>, <z_3, 2> with directions
//                  (1,0,0), (1/2,1,0), (1/2,0,1).
std::array<AnalyticHom, 3> prym_embeddings(PrymCase kind, const std::array<Complex, 3>& z,
                                           const PolarizedPeriodMatrix& target);
AnalyticHom prym_addition_map(PrymCase kind, const std::array<Complex, 3>& z,
                              const PolarizedPeriodMatrix& target);

// Expected kernel generators of the addition map, as source-lattice
// coordinates mod 1.
std::vector<KernelElement> expected_kernel_generators(PrymCase kind);

struct PrymResult {
    PolarizedPeriodMatrix torus;
    PrymCase kind = PrymCase::non_isotropic;
    std::array<Complex, 3> half_periods{};  // the (z1, z2, z3) used
    IsogenyKernelReport kernel;
    std::array<std::int64_t, 3> restricted_types{};
};

// Forward Prym map for a triple-marked configuration (0,1,inf | b1,b2,b3):
// tau_i from the branch points (0,1,inf,b_i), z_i = 4 tau_i, Z = build_z4.
// The kernel and restricted-type certificates are verified on the way out.
PrymResult prym_forward_non_isotropic(const NormalizedConfiguration& cfg);

// Forward Prym map for a pair partition (0,b1),(1,b2),(inf,b3): tau_i from
// the branch points (0,1,inf,b_i) with the marked two-torsion point over the
// b-point, z = (tau_1, 2 tau_2, 2 tau_3), Z = build_z2.
PrymResult prym_forward_isotropic(const NormalizedConfiguration& cfg);

PrymResult prym_forward(const NormalizedConfiguration& cfg);

// Half periods read back off a period matrix by the linear locus formulas.
// Throws only for an unsupported polarization type.
std::array<Complex, 3> half_periods_linear(const PolarizedPeriodMatrix& P);

// Same, gated on locus membership at the given tolerance.
std::array<Complex, 3> half_periods_from_matrix(const PolarizedPeriodMatrix& P, double tol = 1e-9);

// Best-effort Prym result for a bare period matrix: half periods by the
// linear formulas, certificates recomputed when possible. Intended as input
// to verify_prym, which reports rather than throws.
PrymResult reconstruct_prym_result(const PolarizedPeriodMatrix& P);

// Inverse of the Prym map. Throws "not in Prym locus" on membership failure
// and "degenerate boundary point" when the recovered configuration collides.
NormalizedConfiguration prym_inverse(const PolarizedPeriodMatrix& P, double tol = 1e-9);

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_pass() const;
    const VerificationCheck* find(const std::string& name) const;
};

// Re-derives every certificate of a Prym result: locus membership, the
// det Im Z identity, embedding primitivity, restricted types, kernel order /
// divisors / generated subgroup, kernel projections (isotropic case), and
// the pulled-back polarization type.
VerificationReport verify_prym(const PrymResult& result, double tol = 1e-9);

}  // namespace prym
