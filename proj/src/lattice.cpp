#include "prym/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace prym {

std::optional<Rational> snap_rational(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued-fraction convergents, denominator-bounded
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(v);
        if (fa > 9e15 || fa < -9e15) break;
        const std::int64_t a = static_cast<std::int64_t>(fa);
        const std::int64_t q2 = q0 + a * q1;
        if (q2 > max_den || q2 <= 0) break;
        const std::int64_t p2 = p0 + a * p1;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = v - fa;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rational r(p1, q1);
    if (std::abs(r.to_double() - x) <= tol) return r;
    return std::nullopt;
}

PolarizationType::PolarizationType(std::int64_t d1, std::int64_t d2, std::int64_t d3) : d{d1, d2, d3} {
    if (d1 < 1 || d2 < 1 || d3 < 1 || d2 % d1 != 0 || d3 % d2 != 0)
        throw std::invalid_argument("polarization type must satisfy d1 | d2 | d3, d_i >= 1");
}

Vector3c PolarizedPeriodMatrix::lattice_vector(int k) const {
    if (k < 0 || k > 5) throw std::out_of_range("lattice basis index");
    if (k < 3) return Z.col(k);
    Vector3c v = Vector3c::Zero();
    v(k - 3) = Complex(static_cast<double>(D.d[k - 3]), 0.0);
    return v;
}

Eigen::Matrix<Complex, 3, 6> PolarizedPeriodMatrix::period_basis() const {
    Eigen::Matrix<Complex, 3, 6> P;
    for (int k = 0; k < 6; ++k) P.col(k) = lattice_vector(k);
    return P;
}

PolarizedPeriodMatrix make_polarized(const Matrix3c& Z, const PolarizationType& D) {
    if ((Z - Z.transpose()).cwiseAbs().maxCoeff() >= 1e-12)
        throw std::invalid_argument("period matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Z.imag());
    if (es.eigenvalues().minCoeff() <= 1e-12)
        throw std::invalid_argument("imaginary part is not positive definite");
    return PolarizedPeriodMatrix{Z, D};
}

LatticeCoordinates integer_coordinates(const Vector3c& v, const PolarizedPeriodMatrix& target) {
    Eigen::Matrix<double, 6, 6> A;
    const auto P = target.period_basis();
    for (int k = 0; k < 6; ++k) {
        for (int r = 0; r < 3; ++r) {
            A(r, k) = P(r, k).real();
            A(r + 3, k) = P(r, k).imag();
        }
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(5);
    if (!(smin > 0.0) || smax / smin > 1e12)
        throw std::runtime_error("ill-conditioned lattice system");

    Eigen::Matrix<double, 6, 1> rhs;
    rhs << v.real(), v.imag();
    const Eigen::Matrix<double, 6, 1> x = svd.solve(rhs);

    LatticeCoordinates out;
    out.in_lattice_span = true;
    for (int i = 0; i < 6; ++i) {
        out.raw[i] = x(i);
        if (auto r = snap_rational(x(i)))
            out.rational[i] = *r;
        else
            out.in_lattice_span = false;
    }
    return out;
}

Rational omega(const std::array<Rational, 6>& u, const std::array<Rational, 6>& v,
               const PolarizationType& D) {
    Rational acc(0);
    for (int i = 0; i < 3; ++i) {
        const Rational di(D.d[i]);
        acc = acc + di * (u[i] * v[i + 3] - u[i + 3] * v[i]);
    }
    return acc;
}

AnalyticHom elliptic_embedding(Complex g1, Complex g2, const Vector3c& direction,
                               const PolarizedPeriodMatrix& target) {
    AnalyticHom h;
    h.F = Eigen::MatrixXcd(3, 1);
    h.F.col(0) = direction;
    h.source_periods = Eigen::MatrixXcd(1, 2);
    h.source_periods(0, 0) = g1;
    h.source_periods(0, 1) = g2;
    h.target = target;
    return h;
}

IntMatrix integer_image_matrix(const AnalyticHom& h) {
    const int n = h.source_dim();
    if (h.source_periods.rows() != n || h.source_periods.cols() != 2 * n)
        throw std::invalid_argument("source period matrix must be n x 2n");
    IntMatrix M(6, 2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        const Vector3c v = h.F * h.source_periods.col(k);
        const LatticeCoordinates c = integer_coordinates(v, h.target);
        if (!c.in_lattice_span) throw std::runtime_error("not a homomorphism");
        for (int i = 0; i < 6; ++i) {
            if (!c.rational[i].is_integer()) throw std::runtime_error("not a homomorphism");
            M(i, k) = c.rational[i].num;
        }
    }
    return M;
}

std::vector<std::int64_t> SmithDecomposition::diagonal() const {
    std::vector<std::int64_t> d;
    const int n = static_cast<int>(std::min(S.rows(), S.cols()));
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(S(i, i));
    return d;
}

namespace {

void swap_rows(IntMatrix& S, IntMatrix& U, int a, int b) {
    S.row(a).swap(S.row(b));
    U.row(a).swap(U.row(b));
}
void swap_cols(IntMatrix& S, IntMatrix& V, int a, int b) {
    S.col(a).swap(S.col(b));
    V.col(a).swap(V.col(b));
}
void add_row(IntMatrix& S, IntMatrix& U, int dst, int src, std::int64_t q) {
    S.row(dst) += q * S.row(src);
    U.row(dst) += q * U.row(src);
}
void add_col(IntMatrix& S, IntMatrix& V, int dst, int src, std::int64_t q) {
    S.col(dst) += q * S.col(src);
    V.col(dst) += q * V.col(src);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    SmithDecomposition out;
    out.S = A;
    out.U = IntMatrix::Identity(m, m);
    out.V = IntMatrix::Identity(n, n);
    IntMatrix& S = out.S;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;

    for (int t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // minimal nonzero pivot in the lower-right submatrix
            int pi = -1, pj = -1;
            std::int64_t best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const std::int64_t a = std::llabs(S(i, j));
                    if (a != 0 && (pi < 0 || a < best)) {
                        best = a; pi = i; pj = j;
                    }
                }
            if (pi < 0) {  // submatrix is zero
                t = std::min(m, n);
                break;
            }
            if (pi != t) swap_rows(S, U, pi, t);
            if (pj != t) swap_cols(S, V, pj, t);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                add_row(S, U, i, t, -(S(i, t) / S(t, t)));
                if (S(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                add_col(S, V, j, t, -(S(t, j) / S(t, t)));
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide every remaining entry
            bool divisible = true;
            for (int i = t + 1; i < m && divisible; ++i)
                for (int j = t + 1; j < n && divisible; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        add_row(S, U, t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t >= std::min(m, n)) break;
    }
    for (int i = 0; i < std::min(m, n); ++i) {
        if (S(i, i) < 0) {
            S.row(i) = -S.row(i);
            U.row(i) = -U.row(i);
        }
    }
    return out;
}

std::int64_t restricted_polarization_type(const AnalyticHom& h) {
    if (h.source_dim() != 1)
        throw std::invalid_argument("restricted type needs a 1-dimensional source");
    const IntMatrix M = integer_image_matrix(h);
    std::array<Rational, 6> u, v;
    std::int64_t gu = 0, gv = 0;
    for (int i = 0; i < 6; ++i) {
        u[i] = Rational(M(i, 0));
        v[i] = Rational(M(i, 1));
        gu = std::gcd(gu, M(i, 0));
        gv = std::gcd(gv, M(i, 1));
    }
    if (gu != 1 || gv != 1) throw std::runtime_error("image vectors are not primitive");
    bool independent = false;
    for (int i = 0; i < 6 && !independent; ++i)
        for (int j = i + 1; j < 6 && !independent; ++j)
            independent = (M(i, 0) * M(j, 1) - M(j, 0) * M(i, 1)) != 0;
    if (!independent) throw std::runtime_error("image vectors are not independent");
    const Rational w = omega(u, v, h.target.D);
    if (!w.is_integer()) throw std::logic_error("alternating form of lattice vectors must be integral");
    return std::llabs(w.num);
}

IsogenyKernelReport isogeny_kernel(const AnalyticHom& h) {
    const int n = h.source_dim();
    if (n != 3) throw std::invalid_argument("kernel computation needs equal dimension 3");
    const IntMatrix M = integer_image_matrix(h);
    const SmithDecomposition snf = smith_normal_form(M);
    IsogenyKernelReport report;
    report.elementary_divisors = snf.diagonal();
    report.order = 1;
    for (std::int64_t d : report.elementary_divisors) {
        if (d == 0) throw std::runtime_error("not an isogeny");
        report.order *= d;
    }
    for (int i = 0; i < 6; ++i) {
        const std::int64_t s = snf.S(i, i);
        if (s <= 1) continue;
        KernelGenerator g;
        g.order = s;
        for (int r = 0; r < 6; ++r) g.source_coords[r] = Rational(snf.V(r, i), s).mod1();
        // image in target coordinates: M * coords, integral by construction
        for (int r = 0; r < 6; ++r) {
            Rational acc(0);
            for (int c = 0; c < 6; ++c) acc = acc + Rational(M(r, c)) * g.source_coords[c];
            if (!acc.is_integer()) throw std::logic_error("kernel generator image must be integral");
            g.image_coords[r] = acc.num;
        }
        Vector3c pt = Vector3c::Zero();
        for (int c = 0; c < 6; ++c) pt += h.source_periods.col(c) * g.source_coords[c].to_double();
        g.point = pt;
        report.generators.push_back(g);
    }
    return report;
}

std::set<KernelElement> span_mod_lattice(const std::vector<KernelElement>& generators) {
    std::set<KernelElement> out;
    KernelElement zero;
    out.insert(zero);
    std::vector<KernelElement> frontier{zero};
    while (!frontier.empty()) {
        const KernelElement e = frontier.back();
        frontier.pop_back();
        for (const auto& g : generators) {
            KernelElement ne;
            for (int i = 0; i < 6; ++i) ne.coords[i] = (e.coords[i] + g.coords[i]).mod1();
            if (out.insert(ne).second) frontier.push_back(ne);
        }
    }
    return out;
}

std::set<KernelElement> kernel_elements(const IsogenyKernelReport& report) {
    std::vector<KernelElement> gens;
    for (const auto& g : report.generators) gens.push_back(KernelElement{g.source_coords});
    return span_mod_lattice(gens);
}

int kernel_projection_order(const std::set<KernelElement>& elements, int factor) {
    if (factor < 0 || factor > 2) throw std::out_of_range("factor index");
    std::set<std::array<Rational, 2>> images;
    for (const auto& e : elements)
        images.insert({e.coords[2 * factor], e.coords[2 * factor + 1]});
    return static_cast<int>(images.size());
}

std::array<std::int64_t, 3> polarization_type_of_pullback(const AnalyticHom& h) {
    const int n = h.source_dim();
    if (n != 3) throw std::invalid_argument("pullback type needs equal dimension 3");
    const IntMatrix M = integer_image_matrix(h);
    IntMatrix J = IntMatrix::Zero(6, 6);
    for (int i = 0; i < 3; ++i) {
        J(i, i + 3) = h.target.D.d[i];
        J(i + 3, i) = -h.target.D.d[i];
    }
    const IntMatrix G = M.transpose() * J * M;
    const auto diag = smith_normal_form(G).diagonal();
    for (int i = 0; i < 3; ++i)
        if (diag[2 * i] != diag[2 * i + 1])
            throw std::logic_error("alternating form divisors must come in pairs");
    return {diag[0], diag[2], diag[4]};
}

TwoTorsionKernelInfo two_torsion_in_kernel_of_lambda(const PolarizationType& D) {
    TwoTorsionKernelInfo info;
    for (std::int64_t d : D.d) {
        if (d > 1) {
            info.kernel_cyclic_factors.insert(info.kernel_cyclic_factors.end(), {d, d});
        }
        info.kernel_order *= d * d;
        const std::int64_t g = std::gcd<std::int64_t>(d, 2);
        if (g > 1) {
            info.two_torsion_cyclic_factors.insert(info.two_torsion_cyclic_factors.end(), {g, g});
        }
        info.two_torsion_order *= g * g;
    }
    return info;
}

}  // namespace prym
