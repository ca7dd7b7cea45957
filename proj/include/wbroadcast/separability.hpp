#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>

#include "wbroadcast/eig.hpp"
#include "wbroadcast/partial.hpp"
#include "wbroadcast/states.hpp"

namespace wbroadcast {

/// Verdict threshold on eigenvalues and determinants. The closed-form
/// determinants of the pipeline states are exact rationals in alpha^2, so
/// 1e-10 comfortably separates signal from floating-point noise.
inline constexpr double kSeparabilityTol = 1e-10;

struct SeparabilityVerdict {
    double w3 = 0.0;
    double w4 = 0.0;
    double min_pt_eigenvalue = 0.0;
    double negativity = 0.0;  // sum of |negative PT eigenvalues|
    bool separable = false;   // min_pt_eigenvalue >= -kSeparabilityTol
};

namespace detail {

inline void require_two_qubit(const DensityMatrix& rho, const char* who) {
    if (rho.mat.dim() != 4 || rho.reg.size() != 2) {
        throw std::invalid_argument(std::string(who) + ": expected a two-qubit density matrix");
    }
}

inline double real_checked(cplx z, const char* who) {
    if (std::abs(z.imag()) >= 1e-12) {
        throw std::runtime_error(std::string(who) + ": imaginary residue above 1e-12");
    }
    return z.real();
}

} // namespace detail

/// Determinant pair of the partially transposed state (transpose taken on the
/// second label): w3 is the leading 3x3 minor in basis order |00>,|01>,|10>,
/// w4 the full 4x4 determinant.
inline std::pair<double, double> w3_w4(const DensityMatrix& rho) {
    detail::require_two_qubit(rho, "w3_w4");
    const ComplexMatrix pt = partial_transpose(rho.mat, rho.reg, rho.reg.label(1));

    ComplexMatrix minor3(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            minor3(i, j) = pt(i, j);
        }
    }
    const double w3 = detail::real_checked(det_small(minor3), "w3_w4");
    const double w4 = detail::real_checked(det_small(pt), "w3_w4");
    return {w3, w4};
}

/// Peres-Horodecki test: a two-qubit state is separable iff its partial
/// transpose has no negative eigenvalue.
inline SeparabilityVerdict ppt_verdict(const DensityMatrix& rho) {
    detail::require_two_qubit(rho, "ppt_verdict");

    SeparabilityVerdict v;
    std::tie(v.w3, v.w4) = w3_w4(rho);

    const ComplexMatrix pt = partial_transpose(rho.mat, rho.reg, rho.reg.label(1));
    const EigenSystem es = hermitian_eig(pt);
    v.min_pt_eigenvalue = es.values.front();
    for (double lambda : es.values) {
        if (lambda < 0.0) {
            v.negativity += -lambda;
        }
    }
    v.separable = v.min_pt_eigenvalue >= -kSeparabilityTol;
    return v;
}

/// Bisection root localization. Requires a sign change across [lo, hi];
/// stops once the bracket width is at most tol. Deterministic.
inline double find_threshold(const std::function<double(double)>& f, double lo, double hi,
                             double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("find_threshold: tol must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("find_threshold: need lo < hi");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw std::invalid_argument("find_threshold: no sign change across the bracket");
    }

    constexpr int kMaxIterations = 200;
    for (int it = 0; it < kMaxIterations && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace wbroadcast
