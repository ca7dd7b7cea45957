#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wbroadcast/matrix.hpp"
#include "wbroadcast/register.hpp"

namespace wbroadcast {

/// Reduced operator on the labels in `keep`, which retain their original
/// relative order from `reg`. Trace is preserved.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitRegister& reg,
                                   const std::vector<Label>& keep) {
    if (rho.dim() != reg.dim()) {
        throw std::invalid_argument("partial_trace: matrix dimension does not match register");
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set must be nonempty");
    }

    std::vector<std::size_t> kept_pos;
    for (std::size_t p = 0; p < reg.size(); ++p) {
        for (const auto& l : keep) {
            if (reg.label(p) == l) {
                kept_pos.push_back(p);
            }
        }
    }
    for (const auto& l : keep) {
        if (!reg.contains(l)) {
            throw std::invalid_argument("partial_trace: label '" + l + "' not in register");
        }
    }

    std::vector<std::size_t> traced_pos;
    for (std::size_t p = 0; p < reg.size(); ++p) {
        if (std::find(kept_pos.begin(), kept_pos.end(), p) == kept_pos.end()) {
            traced_pos.push_back(p);
        }
    }

    const std::size_t nk = kept_pos.size();
    const std::size_t nt = traced_pos.size();
    const std::size_t out_dim = std::size_t{1} << nk;
    const std::size_t sum_dim = std::size_t{1} << nt;

    ComplexMatrix out(out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t t = 0; t < sum_dim; ++t) {
                std::size_t row = 0;
                std::size_t col = 0;
                for (std::size_t k = 0; k < nk; ++k) {
                    const std::size_t b_r = (r >> (nk - 1 - k)) & 1u;
                    const std::size_t b_c = (c >> (nk - 1 - k)) & 1u;
                    row = reg.with_bit(row, kept_pos[k], b_r);
                    col = reg.with_bit(col, kept_pos[k], b_c);
                }
                for (std::size_t k = 0; k < nt; ++k) {
                    const std::size_t b = (t >> (nt - 1 - k)) & 1u;
                    row = reg.with_bit(row, traced_pos[k], b);
                    col = reg.with_bit(col, traced_pos[k], b);
                }
                acc += rho(row, col);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

/// Transpose the indices of one subsystem between bra and ket. Applying the
/// operation twice returns the input exactly.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitRegister& reg,
                                       const Label& transposed) {
    if (rho.dim() != reg.dim()) {
        throw std::invalid_argument("partial_transpose: matrix dimension does not match register");
    }
    const std::size_t pos = reg.position(transposed);

    const std::size_t n = rho.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t bi = reg.bit(i, pos);
            const std::size_t bj = reg.bit(j, pos);
            const std::size_t si = reg.with_bit(i, pos, bj);
            const std::size_t sj = reg.with_bit(j, pos, bi);
            out(i, j) = rho(si, sj);
        }
    }
    return out;
}

} // namespace wbroadcast
