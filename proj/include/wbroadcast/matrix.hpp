#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbroadcast {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. The single carrier type for
/// operators and density matrices throughout the library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, cplx{0.0, 0.0}) {
        if (dim == 0) {
            throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a_[i] += o.a_[i];
        }
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a_[i] -= o.a_[i];
        }
        return *this;
    }

    ComplexMatrix& operator*=(cplx s) {
        for (auto& v : a_) {
            v *= s;
        }
        return *this;
    }

private:
    void require_same_dim(const ComplexMatrix& o) const {
        if (dim_ != o.dim_) {
            throw std::invalid_argument("ComplexMatrix: dimension mismatch");
        }
    }

    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
inline ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch in product");
    }
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = std::conj(m(j, i));
        }
    }
    return r;
}

inline ComplexMatrix transpose(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = m(j, i);
        }
    }
    return r;
}

inline ComplexMatrix conjugate(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = std::conj(m(i, j));
        }
    }
    return r;
}

inline cplx trace(const ComplexMatrix& m) {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < m.dim(); ++i) {
        t += m(i, i);
    }
    return t;
}

/// Largest entrywise |a - b|.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch in comparison");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

/// Largest entrywise |m - m^dagger|; zero for exactly Hermitian input.
inline double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol) {
    return hermiticity_defect(m) <= tol;
}

/// Kronecker product: entry ((i*bd+k),(j*bd+l)) = a(i,j)*b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t ad = a.dim();
    const std::size_t bd = b.dim();
    ComplexMatrix r(ad * bd);
    for (std::size_t i = 0; i < ad; ++i) {
        for (std::size_t j = 0; j < ad; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t k = 0; k < bd; ++k) {
                for (std::size_t l = 0; l < bd; ++l) {
                    r(i * bd + k, j * bd + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

namespace detail {

inline cplx det_cofactor(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) {
        return m(0, 0);
    }
    if (n == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    cplx acc{0.0, 0.0};
    double sign = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        ComplexMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) {
                    continue;
                }
                minor(i - 1, jj++) = m(i, j);
            }
        }
        acc += sign * m(0, c) * det_cofactor(minor);
        sign = -sign;
    }
    return acc;
}

} // namespace detail

/// Determinant by direct cofactor expansion; only dims 3 and 4 are supported.
inline cplx det_small(const ComplexMatrix& m) {
    if (m.dim() != 3 && m.dim() != 4) {
        throw std::invalid_argument("det_small: supported dimensions are 3 and 4, got " +
                                    std::to_string(m.dim()));
    }
    return detail::det_cofactor(m);
}

} // namespace wbroadcast
