#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wbroadcast/matrix.hpp"

namespace wbroadcast {

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column i pairs with values[i]
};

namespace detail {

inline double offdiag_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j) {
                acc += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(acc);
}

} // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps run until the off-diagonal Frobenius norm drops below 1e-12,
/// capped at 100 sweeps. Deterministic: identical input, identical output.
inline EigenSystem hermitian_eig(const ComplexMatrix& h, double herm_tol = 1e-10) {
    const std::size_t n = h.dim();
    if (n == 0) {
        throw std::invalid_argument("hermitian_eig: empty matrix");
    }
    if (hermiticity_defect(h) > herm_tol) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian within tolerance");
    }

    // Symmetrize so a(q,p) == conj(a(p,q)) holds exactly during sweeps.
    ComplexMatrix a = (h + adjoint(h)) * cplx{0.5, 0.0};
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffTol = 1e-12;
    constexpr int kMaxSweeps = 100;

    bool converged = detail::offdiag_norm(a) < kOffTol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) {
                    continue;
                }
                const cplx phase = apq / b;  // apq = b * phase
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Plane unitary J: J(p,p)=c, J(p,q)=-s, J(q,p)=s*conj(phase),
                // J(q,q)=c*conj(phase). Update a <- J^H a J, v <- v J.
                const cplx jqp = s * std::conj(phase);
                const cplx jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp + jqp * akq;
                    a(k, q) = -s * akp + jqq * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = -s * apk + std::conj(jqq) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp + jqp * vkq;
                    v(k, q) = -s * vkp + jqq * vkq;
                }
            }
        }
        converged = detail::offdiag_norm(a) < kOffTol;
    }
    if (!converged) {
        throw std::runtime_error("hermitian_eig: Jacobi sweeps failed to converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        es.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) {
            es.vectors(r, c) = v(r, order[c]);
        }
    }
    return es;
}

/// Hermitian PSD square root. Eigenvalues in [-1e-12, 0) are clamped to zero;
/// anything below -1e-12 signals a genuinely non-PSD input.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& rho, double clamp_tol = 1e-12) {
    const EigenSystem es = hermitian_eig(rho);
    const std::size_t n = rho.dim();

    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lambda = es.values[i];
        if (lambda < -clamp_tol) {
            throw std::runtime_error("sqrt_psd: input has eigenvalue " + std::to_string(lambda) +
                                     " below the PSD tolerance");
        }
        roots[i] = std::sqrt(std::max(lambda, 0.0));
    }

    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                acc += es.vectors(i, k) * roots[k] * std::conj(es.vectors(j, k));
            }
            out(i, j) = acc;
        }
    }
    // kill the anti-Hermitian dust from the reconstruction
    return (out + adjoint(out)) * cplx{0.5, 0.0};
}

} // namespace wbroadcast
