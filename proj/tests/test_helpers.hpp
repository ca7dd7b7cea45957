#pragma once

#include <random>

#include "wbroadcast/matrix.hpp"
#include "wbroadcast/register.hpp"
#include "wbroadcast/states.hpp"

namespace testutil {

using wbroadcast::ComplexMatrix;
using wbroadcast::cplx;

/// rho = A A^dagger / tr(A A^dagger) with A drawn from independent standard
/// complex Gaussians; full rank almost surely.
inline ComplexMatrix random_density(std::mt19937& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(i, j) = cplx{gauss(rng), gauss(rng)};
        }
    }
    ComplexMatrix rho = a * adjoint(a);
    const double t = trace(rho).real();
    rho *= cplx{1.0 / t, 0.0};
    return rho;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(i, j) = cplx{gauss(rng), gauss(rng)};
        }
    }
    return (a + adjoint(a)) * cplx{0.5, 0.0};
}

/// Haar-ish single-qubit unitary from three angles; exactly unitary up to
/// floating-point rounding.
inline ComplexMatrix random_unitary2(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double theta = uni(rng) * 3.141592653589793;
    const double phi = uni(rng) * 2.0 * 3.141592653589793;
    const double psi = uni(rng) * 2.0 * 3.141592653589793;
    const double c = std::cos(theta), s = std::sin(theta);
    ComplexMatrix u(2);
    u(0, 0) = c * cplx{std::cos(phi), std::sin(phi)};
    u(0, 1) = s * cplx{std::cos(psi), std::sin(psi)};
    u(1, 0) = -s * cplx{std::cos(psi), -std::sin(psi)};
    u(1, 1) = c * cplx{std::cos(phi), -std::sin(phi)};
    return u;
}

inline wbroadcast::DensityMatrix as_two_qubit(ComplexMatrix m) {
    return wbroadcast::DensityMatrix{std::move(m), wbroadcast::QubitRegister({"A", "B"})};
}

/// Random valid squared-amplitude triple, kept away from the excluded corners.
inline wbroadcast::WParams random_wparams(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.05, 0.90);
    while (true) {
        const double a2 = uni(rng);
        const double b2 = uni(rng) * (1.0 - a2);
        const double g2 = 1.0 - a2 - b2;
        if (b2 > 0.02 && g2 > 0.02) {
            return wbroadcast::WParams::make(a2, b2, g2);
        }
    }
}

} // namespace testutil
