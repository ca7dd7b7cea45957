#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "wbroadcast/cloner.hpp"
#include "wbroadcast/measures.hpp"
#include "wbroadcast/separability.hpp"

using namespace wbroadcast;

namespace {

DensityMatrix bell_pair() {
    const double s = 1.0 / std::sqrt(2.0);
    return density(PureState(QubitRegister({"A", "B"}), {s, 0.0, 0.0, s}));
}

} // namespace

TEST_CASE("concurrence of a Bell pair is 1") {
    REQUIRE(concurrence(bell_pair()) == Approx(1.0).margin(1e-10));
}

TEST_CASE("local pairs have zero concurrence below the separability boundary") {
    for (double x : {0.05, 0.3, 0.6, 0.85}) {
        const DensityMatrix rho = broadcast_pipeline(symmetric_params(x)).rho_14;
        REQUIRE(concurrence(rho) == 0.0);
        REQUIRE(oracle::concurrence_local_closed(x) == 0.0);
    }
}

TEST_CASE("non-local concurrence matches its closed form") {
    for (double x : {1e-7, 0.05, 0.1, 0.2, 0.21}) {
        const DensityMatrix rho = broadcast_pipeline(symmetric_params(x)).rho_15;
        REQUIRE(concurrence(rho) == Approx(oracle::concurrence_nonlocal_closed(x)).margin(1e-10));
    }
    // approaches 1/6 from below as alpha^2 -> 0
    const double near_zero = concurrence(broadcast_pipeline(symmetric_params(1e-7)).rho_15);
    REQUIRE(near_zero == Approx(1.0 / 6.0).margin(1e-5));
    // frozen value at alpha^2 = 0.2
    const double at_02 = concurrence(broadcast_pipeline(symmetric_params(0.2)).rho_15);
    REQUIRE(at_02 == Approx(0.013990530023568926).margin(1e-12));
    REQUIRE(at_02 == Approx(0.0140).margin(1e-3));
}

TEST_CASE("concurrence rejects a non-PSD matrix") {
    ComplexMatrix m = ComplexMatrix::identity(4) * cplx{0.45, 0.0};
    m(3, 3) = -0.35;
    REQUIRE_THROWS_AS(concurrence(testutil::as_two_qubit(std::move(m))), std::runtime_error);
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937 rng(24601);
    for (int rep = 0; rep < 12; ++rep) {
        const DensityMatrix rho = testutil::as_two_qubit(testutil::random_density(rng, 4));
        const double c = concurrence(rho);
        const ComplexMatrix uv = kron(testutil::random_unitary2(rng), testutil::random_unitary2(rng));
        DensityMatrix rotated{uv * rho.mat * adjoint(uv), rho.reg};
        REQUIRE(concurrence(rotated) == Approx(c).margin(1e-10));
    }
}

TEST_CASE("concurrence positivity coincides with the PPT verdict") {
    std::mt19937 rng(31415);
    for (int rep = 0; rep < 1000; ++rep) {
        const DensityMatrix rho = testutil::as_two_qubit(testutil::random_density(rng, 4));
        const bool entangled_c = concurrence(rho) > kSeparabilityTol;
        const bool entangled_ppt = !ppt_verdict(rho).separable;
        REQUIRE(entangled_c == entangled_ppt);
    }
    for (int i = 0; i < 200; ++i) {
        const double x = 0.005 + i * 0.99 / 199.0;
        const BroadcastOutputs out = broadcast_pipeline(symmetric_params(x));
        for (const DensityMatrix* rho : {&out.rho_15, &out.rho_14, &out.rho_25, &out.rho_42}) {
            REQUIRE((concurrence(*rho) > kSeparabilityTol) == !ppt_verdict(*rho).separable);
        }
    }
}

TEST_CASE("the concurrence zero of the non-local pair coincides with its w4 root") {
    auto gap = [](double x) { return wootters_gap(broadcast_pipeline(symmetric_params(x)).rho_15); };
    auto det = [](double x) {
        return w3_w4(broadcast_pipeline(symmetric_params(x)).rho_15).second;
    };
    const double c_root = find_threshold(gap, 0.1, 0.5, 1e-10);
    const double w_root = find_threshold(det, 0.1, 0.5, 1e-10);
    REQUIRE(c_root == Approx(w_root).margin(1e-8));
    REQUIRE(c_root == Approx(oracle::nonlocal_root_exact()).margin(1e-8));
}

TEST_CASE("eof endpoints and midpoint") {
    REQUIRE(eof(0.0) == 0.0);
    REQUIRE(eof(1.0) == Approx(1.0).margin(1e-15));
    // long-double reference evaluation of the binary-entropy expression
    const long double xl = (1.0L + std::sqrt(1.0L - 0.25L)) / 2.0L;
    const long double ref = -(xl * std::log2(xl) + (1.0L - xl) * std::log2(1.0L - xl));
    REQUIRE(eof(0.5) == Approx(static_cast<double>(ref)).margin(1e-14));
    REQUIRE(eof(0.5) == Approx(0.35457890266527003).margin(1e-12));
    REQUIRE_THROWS_AS(eof(-0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(eof(1.1), std::invalid_argument);
}

TEST_CASE("eof is zero iff concurrence is zero, and monotone in between") {
    REQUIRE(eof(1e-13) < 1e-10);
    double prev = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double c = i / 100.0;
        const double e = eof(c);
        REQUIRE(e > prev);
        prev = e;
    }
}

TEST_CASE("linear entropy of pure and maximally mixed states") {
    REQUIRE(linear_entropy(bell_pair()) == Approx(0.0).margin(1e-12));
    const DensityMatrix mixed =
        testutil::as_two_qubit(ComplexMatrix::identity(4) * cplx{0.25, 0.0});
    REQUIRE(linear_entropy(mixed) == Approx(1.0).margin(1e-15));
    DensityMatrix wrong{ComplexMatrix::identity(2) * cplx{0.5, 0.0}, QubitRegister({"q"})};
    REQUIRE_THROWS_AS(linear_entropy(wrong), std::invalid_argument);
}

TEST_CASE("linear entropy of the local pair matches (8/27)(3 - alpha^4)") {
    for (double x : {1e-8, 0.1, 0.22, 0.5, 0.9}) {
        const DensityMatrix rho = broadcast_pipeline(symmetric_params(x)).rho_14;
        REQUIRE(linear_entropy(rho) == Approx(oracle::linear_entropy_local_closed(x)).margin(1e-12));
    }
    // limit value 8/9 as alpha^2 -> 0
    REQUIRE(linear_entropy(broadcast_pipeline(symmetric_params(1e-8)).rho_14) ==
            Approx(8.0 / 9.0).margin(1e-7));
}

TEST_CASE("non-local purity matches the corrected polynomial across the sweep") {
    for (int i = 0; i < 50; ++i) {
        const double x = 0.01 + i * 0.97 / 49.0;
        const DensityMatrix rho = broadcast_pipeline(symmetric_params(x)).rho_15;
        const double purity = trace(rho.mat * rho.mat).real();
        REQUIRE(purity == Approx(oracle::purity_nonlocal_closed(x)).margin(1e-12));
    }
}

TEST_CASE("linear entropy from the definition equals the eigenvalue route") {
    std::mt19937 rng(7001);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = testutil::as_two_qubit(testutil::random_density(rng, 4));
        const EigenSystem es = hermitian_eig(rho.mat);
        double sum_sq = 0.0;
        for (double v : es.values) {
            sum_sq += v * v;
        }
        REQUIRE(linear_entropy(rho) == Approx((4.0 / 3.0) * (1.0 - sum_sq)).margin(1e-12));
    }
}

TEST_CASE("measures bundle is internally consistent") {
    const DensityMatrix rho = broadcast_pipeline(symmetric_params(0.1)).rho_15;
    const MeasureRecord r = measures(rho);
    REQUIRE(r.concurrence == Approx(concurrence(rho)).margin(0.0));
    REQUIRE(r.eof == Approx(eof(r.concurrence)).margin(0.0));
    REQUIRE(r.linear_entropy == Approx(linear_entropy(rho)).margin(0.0));
    REQUIRE((r.concurrence == 0.0) == (r.eof == 0.0));
}
