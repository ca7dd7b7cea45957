#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wbroadcast/eig.hpp"
#include "wbroadcast/matrix.hpp"
#include "wbroadcast/register.hpp"

namespace wbroadcast {

/// Squared amplitudes of the W-type input family. Amplitudes themselves are
/// the non-negative real square roots. The degenerate corners (any parameter
/// exactly 0 or 1) are rejected: every downstream threshold search assumes
/// the open interval.
struct WParams {
    double alpha2;
    double beta2;
    double gamma2;

    static WParams make(double alpha2, double beta2, double gamma2) {
        auto in_open_unit = [](double x) { return x > 0.0 && x < 1.0; };
        if (!in_open_unit(alpha2) || !in_open_unit(beta2) || !in_open_unit(gamma2)) {
            throw std::domain_error("WParams: each squared amplitude must lie strictly inside (0,1)");
        }
        if (std::abs(alpha2 + beta2 + gamma2 - 1.0) > 1e-12) {
            throw std::invalid_argument("WParams: squared amplitudes must sum to 1 within 1e-12");
        }
        return WParams{alpha2, beta2, gamma2};
    }
};

/// beta^2 = gamma^2 = (1 - alpha^2)/2.
inline WParams symmetric_params(double alpha2) {
    if (!(alpha2 > 0.0 && alpha2 < 1.0)) {
        throw std::domain_error("symmetric_params: alpha2 must lie strictly inside (0,1)");
    }
    const double rest = 0.5 * (1.0 - alpha2);
    return WParams::make(alpha2, rest, rest);
}

/// Normalized complex amplitude vector over a labeled multi-qubit register.
class PureState {
public:
    PureState(QubitRegister reg, std::vector<cplx> amplitudes)
        : reg_(std::move(reg)), amp_(std::move(amplitudes)) {
        if (amp_.size() != reg_.dim()) {
            throw std::invalid_argument("PureState: amplitude count does not match register dimension");
        }
        double n2 = 0.0;
        for (const auto& a : amp_) {
            n2 += std::norm(a);
        }
        if (std::abs(n2 - 1.0) > 1e-12) {
            throw std::invalid_argument("PureState: squared norm deviates from 1 beyond 1e-12");
        }
    }

    const QubitRegister& reg() const noexcept { return reg_; }
    const std::vector<cplx>& amplitudes() const noexcept { return amp_; }
    cplx amplitude(std::size_t idx) const { return amp_.at(idx); }

private:
    QubitRegister reg_;
    std::vector<cplx> amp_;
};

/// Hermitian unit-trace operator together with the labels of its subsystems.
struct DensityMatrix {
    ComplexMatrix mat;
    QubitRegister reg;
};

/// alpha|001> + beta|010> + gamma|100> on register (1,2,3).
inline PureState w_type_state(const WParams& p) {
    // revalidate; WParams may have been aggregate-initialized
    const WParams checked = WParams::make(p.alpha2, p.beta2, p.gamma2);
    QubitRegister reg({"1", "2", "3"});
    std::vector<cplx> amp(reg.dim(), cplx{0.0, 0.0});
    amp[0b001] = std::sqrt(checked.alpha2);
    amp[0b010] = std::sqrt(checked.beta2);
    amp[0b100] = std::sqrt(checked.gamma2);
    return PureState(reg, std::move(amp));
}

/// Rank-1 projector |psi><psi|.
inline DensityMatrix density(const PureState& psi) {
    const std::size_t n = psi.reg().dim();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx ai = psi.amplitude(i);
        if (ai == cplx{0.0, 0.0}) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = ai * std::conj(psi.amplitude(j));
        }
    }
    return DensityMatrix{std::move(m), psi.reg()};
}

/// Full density-matrix invariant suite: unit trace, Hermitian, and no
/// eigenvalue below -tol.
inline bool is_valid_density(const DensityMatrix& rho, double tol = 1e-10) {
    if (std::abs(trace(rho.mat) - cplx{1.0, 0.0}) > tol) {
        return false;
    }
    if (hermiticity_defect(rho.mat) > tol) {
        return false;
    }
    const EigenSystem es = hermitian_eig(rho.mat, tol);
    return es.values.front() >= -tol;
}

} // namespace wbroadcast
