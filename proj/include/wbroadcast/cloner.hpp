#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wbroadcast/partial.hpp"
#include "wbroadcast/states.hpp"

namespace wbroadcast {

/// One term of the cloning image: bits for (original, clone, machine) plus
/// the real amplitude attached to that basis ket.
struct ClonerTerm {
    std::size_t original;
    std::size_t clone;
    std::size_t machine;
    double weight;
};

/// The symmetric universal 1->2 cloning isometry on (original, clone, machine):
///   |0> -> sqrt(2/3)|00>|0_M> + sqrt(1/6)(|01>+|10>)|1_M>
///   |1> -> sqrt(2/3)|11>|1_M> + sqrt(1/6)(|01>+|10>)|0_M>
/// The machine pair is embedded as |up> = |0_M>, |down> = |1_M>.
inline const std::array<std::vector<ClonerTerm>, 2>& cloner_images() {
    static const double w23 = std::sqrt(2.0 / 3.0);
    static const double w16 = std::sqrt(1.0 / 6.0);
    static const std::array<std::vector<ClonerTerm>, 2> images = {
        std::vector<ClonerTerm>{{0, 0, 0, w23}, {0, 1, 1, w16}, {1, 0, 1, w16}},
        std::vector<ClonerTerm>{{1, 1, 1, w23}, {0, 1, 0, w16}, {1, 0, 0, w16}},
    };
    return images;
}

/// Clone the qubit `target`, inserting the clone and machine labels directly
/// after it in the register order. Linear in the input amplitudes; the output
/// is normalized because the two image vectors are orthonormal.
inline PureState bh_clone(const PureState& psi, const Label& target, const Label& clone_label,
                          const Label& machine_label) {
    const QubitRegister& in_reg = psi.reg();
    const std::size_t pos = in_reg.position(target);  // throws on unknown label
    const std::size_t n_in = in_reg.size();
    const std::size_t n_out = n_in + 2;

    std::vector<Label> out_labels;
    out_labels.reserve(n_out);
    for (std::size_t p = 0; p < n_in; ++p) {
        out_labels.push_back(in_reg.label(p));
        if (p == pos) {
            out_labels.push_back(clone_label);
            out_labels.push_back(machine_label);
        }
    }
    QubitRegister out_reg(std::move(out_labels));

    const auto& images = cloner_images();
    std::vector<cplx> out(out_reg.dim(), cplx{0.0, 0.0});
    for (std::size_t idx = 0; idx < in_reg.dim(); ++idx) {
        const cplx a = psi.amplitude(idx);
        if (a == cplx{0.0, 0.0}) {
            continue;
        }
        const std::size_t b = in_reg.bit(idx, pos);
        for (const ClonerTerm& term : images[b]) {
            std::size_t out_idx = 0;
            for (std::size_t p = 0; p < n_in; ++p) {
                const std::size_t bit = (p == pos) ? term.original : in_reg.bit(idx, p);
                const std::size_t out_pos = (p <= pos) ? p : p + 2;
                out_idx = out_reg.with_bit(out_idx, out_pos, bit);
            }
            out_idx = out_reg.with_bit(out_idx, pos + 1, term.clone);
            out_idx = out_reg.with_bit(out_idx, pos + 2, term.machine);
            out[out_idx] += a * term.weight;
        }
    }
    return PureState(out_reg, std::move(out));
}

/// Convenience overload with derived label names.
inline PureState bh_clone(const PureState& psi, const Label& target) {
    return bh_clone(psi, target, target + "'", "M" + target);
}

/// The bundle produced by the broadcast pipeline. rho_1245 carries label
/// order (1,4,2,5); the bipartite outputs carry their name's label order.
struct BroadcastOutputs {
    DensityMatrix rho_1245;
    DensityMatrix rho_15;
    DensityMatrix rho_14;
    DensityMatrix rho_25;
    DensityMatrix rho_42;
};

/// Clone qubits 1 and 2 of the W-type state, trace out both machines and
/// qubit 3, and reduce to the four bipartite outputs. The 7-qubit register
/// order is (1,4,M1,2,5,M2,3).
inline BroadcastOutputs broadcast_pipeline(const WParams& p) {
    const PureState input = w_type_state(p);
    const PureState once = bh_clone(input, "1", "4", "M1");
    const PureState twice = bh_clone(once, "2", "5", "M2");

    const DensityMatrix full = density(twice);
    ComplexMatrix m1245 = partial_trace(full.mat, full.reg, {"1", "4", "2", "5"});
    DensityMatrix rho_1245{std::move(m1245), QubitRegister({"1", "4", "2", "5"})};

    auto reduce = [&](const Label& a, const Label& b) {
        ComplexMatrix m = partial_trace(rho_1245.mat, rho_1245.reg, {a, b});
        return DensityMatrix{std::move(m), QubitRegister({a, b})};
    };

    BroadcastOutputs out;
    out.rho_15 = reduce("1", "5");
    out.rho_14 = reduce("1", "4");
    out.rho_25 = reduce("2", "5");
    out.rho_42 = reduce("4", "2");
    out.rho_1245 = std::move(rho_1245);
    return out;
}

} // namespace wbroadcast
