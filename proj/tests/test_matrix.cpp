#include <catch2/catch.hpp>

#include <random>

#include "wbroadcast/matrix.hpp"

using namespace wbroadcast;

namespace {

ComplexMatrix pauli_y() {
    ComplexMatrix y(2);
    y(0, 1) = cplx{0.0, -1.0};
    y(1, 0) = cplx{0.0, 1.0};
    return y;
}

ComplexMatrix small_int_matrix(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> d(-3, 3);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = cplx{static_cast<double>(d(rng)), static_cast<double>(d(rng))};
        }
    }
    return m;
}

} // namespace

TEST_CASE("kron of identities is the identity") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    REQUIRE(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron of pauli-y with itself has +-1 on the anti-diagonal") {
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    ComplexMatrix expected(4);
    expected(0, 3) = -1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 0) = -1.0;
    REQUIRE(max_abs_diff(yy, expected) == 0.0);
}

TEST_CASE("kron of projectors picks the matching diagonal slot") {
    ComplexMatrix p0(2), p1(2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    const ComplexMatrix k = kron(p0, p1);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            REQUIRE(k(i, j) == (i == 1 && j == 1 ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));
        }
    }
}

TEST_CASE("kron is associative exactly on integer entries") {
    std::mt19937 rng(911);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix a = small_int_matrix(rng, 2);
        const ComplexMatrix b = small_int_matrix(rng, 3);
        const ComplexMatrix c = small_int_matrix(rng, 2);
        REQUIRE(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
    }
}

TEST_CASE("det_small on the identity and diagonal matrices") {
    REQUIRE(det_small(ComplexMatrix::identity(3)) == cplx{1.0, 0.0});

    ComplexMatrix d(4);
    d(0, 0) = 2.0;
    d(1, 1) = -1.5;
    d(2, 2) = 3.0;
    d(3, 3) = 0.5;
    REQUIRE(det_small(d).real() == Approx(2.0 * -1.5 * 3.0 * 0.5).margin(1e-15));
    REQUIRE(det_small(d).imag() == 0.0);
}

TEST_CASE("det_small vanishes on a repeated row") {
    std::mt19937 rng(17);
    ComplexMatrix m = small_int_matrix(rng, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m(2, j) = m(0, j);
    }
    REQUIRE(std::abs(det_small(m)) == 0.0);
}

TEST_CASE("det_small rejects unsupported dimensions") {
    REQUIRE_THROWS_AS(det_small(ComplexMatrix::identity(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(det_small(ComplexMatrix::identity(5)), std::invalid_argument);
}

TEST_CASE("matrix product against a hand-multiplied pair") {
    ComplexMatrix a(2), b(2);
    a(0, 0) = cplx{1.0, 1.0};
    a(0, 1) = 2.0;
    a(1, 0) = cplx{0.0, -1.0};
    a(1, 1) = 1.0;
    b(0, 0) = 1.0;
    b(0, 1) = cplx{0.0, 1.0};
    b(1, 0) = 3.0;
    b(1, 1) = -1.0;
    const ComplexMatrix p = a * b;
    REQUIRE(p(0, 0) == cplx{7.0, 1.0});
    REQUIRE(p(0, 1) == cplx{-3.0, 1.0});
    REQUIRE(p(1, 0) == cplx{3.0, -1.0});
    REQUIRE(p(1, 1) == cplx{0.0, 0.0});
}

TEST_CASE("adjoint and hermiticity detection") {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = cplx{2.0, 3.0};
    m(1, 0) = cplx{2.0, -3.0};
    m(1, 1) = -4.0;
    REQUIRE(hermiticity_defect(m) == 0.0);
    REQUIRE(is_hermitian(m, 0.0));
    m(1, 0) = cplx{2.0, -2.0};
    REQUIRE(hermiticity_defect(m) == Approx(1.0));
}
