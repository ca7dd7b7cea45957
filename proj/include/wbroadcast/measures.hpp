#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "wbroadcast/eig.hpp"
#include "wbroadcast/separability.hpp"
#include "wbroadcast/states.hpp"

namespace wbroadcast {

struct MeasureRecord {
    double concurrence = 0.0;
    double eof = 0.0;
    double linear_entropy = 0.0;
};

namespace detail {

inline const ComplexMatrix& spin_flip_operator() {
    // sigma_y (x) sigma_y: real, +-1 on the anti-diagonal
    static const ComplexMatrix yy = [] {
        ComplexMatrix m(4);
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return yy;
}

/// Descending square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho),
/// rho~ = (sy(x)sy) rho* (sy(x)sy). The Hermitian-product form keeps every
/// eigenproblem Hermitian; its spectrum coincides with that of rho rho~.
inline std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
    require_two_qubit(rho, "concurrence");
    {
        const EigenSystem es = hermitian_eig(rho.mat);
        if (es.values.front() < -1e-12) {
            throw std::runtime_error("concurrence: input density matrix is not PSD");
        }
    }
    const ComplexMatrix& yy = spin_flip_operator();
    const ComplexMatrix root = sqrt_psd(rho.mat);
    const ComplexMatrix tilde = yy * conjugate(rho.mat) * yy;
    ComplexMatrix prod = root * tilde * root;
    prod = (prod + adjoint(prod)) * cplx{0.5, 0.0};

    const EigenSystem es = hermitian_eig(prod);
    std::array<double, 4> lambdas{};
    for (std::size_t i = 0; i < 4; ++i) {
        double v = es.values[3 - i];  // descending
        if (v < -1e-12) {
            throw std::runtime_error("concurrence: Wootters matrix has a non-PSD eigenvalue");
        }
        lambdas[i] = std::sqrt(std::max(v, 0.0));
    }
    return lambdas;
}

} // namespace detail

/// Unclamped Wootters gap lambda_1 - lambda_2 - lambda_3 - lambda_4. Changes
/// sign where the concurrence vanishes, which makes it bisectable.
inline double wootters_gap(const DensityMatrix& rho) {
    const auto l = detail::wootters_lambdas(rho);
    return l[0] - l[1] - l[2] - l[3];
}

/// Wootters concurrence max(lambda_1 - lambda_2 - lambda_3 - lambda_4, 0).
inline double concurrence(const DensityMatrix& rho) {
    return std::max(wootters_gap(rho), 0.0);
}

/// Entanglement of formation as the binary entropy of (1+sqrt(1-c^2))/2,
/// with the endpoints defined by continuity.
inline double eof(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::invalid_argument("eof: concurrence must lie in [0,1]");
    }
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    auto plog2 = [](double p) { return p > 0.0 ? p * std::log2(p) : 0.0; };
    const double h = -plog2(x) - plog2(1.0 - x);
    return h == 0.0 ? 0.0 : h;  // avoid -0.0 at the endpoints
}

/// Mixedness (4/3)(1 - Tr rho^2), normalized for dimension 4: zero for pure
/// states, one for the maximally mixed state.
inline double linear_entropy(const DensityMatrix& rho) {
    if (rho.mat.dim() != 4) {
        throw std::invalid_argument("linear_entropy: expected a 4x4 density matrix");
    }
    const double purity = trace(rho.mat * rho.mat).real();
    return (4.0 / 3.0) * (1.0 - purity);
}

inline MeasureRecord measures(const DensityMatrix& rho) {
    MeasureRecord r;
    r.concurrence = concurrence(rho);
    r.eof = eof(r.concurrence);
    r.linear_entropy = linear_entropy(rho);
    return r;
}

} // namespace wbroadcast
