#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "tensorloc/bounds.hpp"
#include "tensorloc/oracle.hpp"

using namespace tloc;

TEST_CASE("tensor-vector contraction basics") {
    const Tensor id = unit_tensor(3, 2);
    const auto y = apply_tensor(id, {2.0, 3.0});
    CHECK(y[0] == Catch::Approx(4.0));   // I x^{m-1} = x^{[m-1]}
    CHECK(y[1] == Catch::Approx(9.0));

    const auto rows = apply_tensor(tsupport::ex51(), {1.0, 1.0, 1.0});
    CHECK(rows[0] == Catch::Approx(9.0));  // all-ones input recovers row sums
    CHECK(rows[1] == Catch::Approx(7.0));
    CHECK(rows[2] == Catch::Approx(30.0));

    const auto zero = apply_tensor(tsupport::ex51(), {0.0, 0.0, 0.0});
    for (double v : zero) CHECK(v == 0.0);

    CHECK_THROWS_AS(apply_tensor(id, {1.0, 2.0, 3.0}), LengthMismatch);
}

TEST_CASE("power iteration on trivial spectra") {
    const EigenPairEstimate unit = spectral_radius_nonneg(unit_tensor(3, 2));
    CHECK(unit.converged);
    CHECK(unit.value == Catch::Approx(1.0).margin(1e-9));

    // All-ones tensor, m=3, n=2: A x^{m-1} with x = (1,1) gives (4,4).
    const Tensor ones(3, 2, std::vector<double>(8, 1.0));
    const EigenPairEstimate est = spectral_radius_nonneg(ones);
    CHECK(est.converged);
    CHECK(est.value == Catch::Approx(4.0).margin(1e-9));
    CHECK(est.vector[0] == Catch::Approx(1.0).margin(1e-9));
    CHECK(est.vector[1] == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("spectral radius of the nonnegative example") {
    const EigenPairEstimate est = spectral_radius_nonneg(tsupport::ex51());
    REQUIRE(est.converged);
    // Frozen from this oracle and cross-checked by residual below.
    CHECK(est.value == Catch::Approx(13.1747033865).margin(1e-6));
    CHECK(est.value >= tsupport::ex51().max_diagonal());   // diagonal anchoring
    CHECK(est.value >= 3.0);
    CHECK(est.value <= 30.0);                              // <= R_max
    CHECK(est.residual <= 1e-8);
    CHECK(est.upper - est.lower <= 1e-9 * std::max(1.0, est.value) * 10);
    // Consistency with the closed-form upper bound.
    CHECK(est.value <= eta_max(tsupport::ex51(), SubsetPartition(3, {1, 2})).value + 1e-6);
}

TEST_CASE("eigenpair residual is small for converged estimates") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 2);
        const int n = 2 + static_cast<int>(rng() % 3);
        const Tensor t = tsupport::random_nonnegative(m, n, rng);
        const EigenPairEstimate est = spectral_radius_nonneg(t);
        REQUIRE(est.converged);
        CHECK(est.residual <= 10 * 1e-10 * (1.0 + std::abs(est.value)) + 1e-10);
        // Max-norm-1 normalization of the eigenvector.
        double norm = 0.0;
        for (double v : est.vector) {
            CHECK(v >= 0.0);
            norm = std::max(norm, v);
        }
        CHECK(norm == Catch::Approx(1.0));
    }
}

TEST_CASE("minimum eigenvalue of the M-tensor example via the split") {
    const TauEstimate est = tau_strong_m(tsupport::ex61());
    REQUIRE(est.b_estimate.converged);
    CHECK(est.s == 30.0);
    CHECK(est.rho_b == Catch::Approx(24.1617652525).margin(1e-6));
    CHECK(est.value == Catch::Approx(5.8382347475).margin(1e-6));
    CHECK(est.strong_m);
    CHECK(est.residual <= 1e-7);
    CHECK(est.value <= tsupport::ex61().min_diagonal());  // <= min diag = 12
    // Consistency with the closed-form lower bound.
    CHECK(est.value >= pi_min(tsupport::ex61(), SubsetPartition(3, {1, 2})).value - 1e-6);
}

TEST_CASE("diagonal Z-tensor: tau equals the diagonal value") {
    std::vector<TensorEntry> diag;
    for (int i = 1; i <= 2; ++i) diag.push_back({{i, i, i}, 2.0});
    const TauEstimate est = tau_strong_m(build_tensor(3, 2, diag));
    CHECK(est.value == Catch::Approx(2.0).margin(1e-8));
    CHECK(est.strong_m);
}

TEST_CASE("non-strong Z-tensor is flagged, not asserted") {
    // Diagonal 2, all off-diagonal -1. The split gives s = 2 and B with zero
    // diagonal and unit off-diagonal entries, so rho(B) = 3 and tau = -1 < 0.
    std::vector<double> data(8, -1.0);
    data[0] = 2.0;
    data[7] = 2.0;
    const Tensor t(3, 2, std::move(data));
    const TauEstimate est = tau_strong_m(t);
    CHECK_FALSE(est.strong_m);
    CHECK(est.rho_b == Catch::Approx(3.0).margin(1e-8));
    CHECK(est.value == Catch::Approx(-1.0).margin(1e-8));
}

TEST_CASE("weakly reducible input falls back to the perturbed iteration") {
    // Block-diagonal pattern: indices {1} and {2} never interact.
    const Tensor t = build_tensor(3, 2, {{{1, 1, 1}, 2.0}, {{2, 2, 2}, 5.0}});
    REQUIRE_FALSE(is_weakly_irreducible(t));
    const EigenPairEstimate est = spectral_radius_nonneg(t);
    CHECK(est.perturbation > 0.0);
    // rho = 5 up to the perturbation shift <= delta * n^{m-1}.
    const double shift = est.perturbation * 4;
    CHECK(est.value == Catch::Approx(5.0).margin(1e-6 + shift));

    const EigenPairEstimate irr = spectral_radius_nonneg(tsupport::ex51());
    CHECK(irr.perturbation == 0.0);
}

TEST_CASE("oracle preconditions") {
    CHECK_THROWS_AS(spectral_radius_nonneg(tsupport::ex61()), NotNonnegative);
    CHECK_THROWS_AS(tau_strong_m(tsupport::ex51()), NotZTensor);
}

TEST_CASE("computed eigenvalues land in every localization set") {
    const auto parts3 = enumerate_partitions(3);

    const EigenPairEstimate rho = spectral_radius_nonneg(tsupport::ex51());
    for (const auto& c : verify_eigenvalue_in_regions(tsupport::ex51(), rho.value, parts3)) {
        INFO("set " << region_kind_name(c.kind) << " S=" << c.partition);
        CHECK(c.contained);
    }

    const TauEstimate tau = tau_strong_m(tsupport::ex61());
    for (const auto& c : verify_eigenvalue_in_regions(tsupport::ex61(), tau.value, parts3)) {
        INFO("set " << region_kind_name(c.kind) << " S=" << c.partition);
        CHECK(c.contained);
    }

    const Tensor id = unit_tensor(3, 3);
    for (const auto& c : verify_eigenvalue_in_regions(id, 1.0, parts3))
        CHECK(c.contained);  // radius-zero disks still admit their center
}

TEST_CASE("containment and soundness on the random corpus") {
    std::mt19937_64 rng(101);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 2);
        const int n = 2 + static_cast<int>(rng() % 3);
        const Tensor t = tsupport::random_nonnegative(m, n, rng);
        const EigenPairEstimate est = spectral_radius_nonneg(t);
        if (!est.converged) continue;
        ++checked;
        for (const auto& c :
             verify_eigenvalue_in_regions(t, est.value, enumerate_partitions(n)))
            CHECK(c.contained);
    }
    CHECK(checked >= 95);

    for (int trial = 0; trial < 100; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 2);
        const int n = 2 + static_cast<int>(rng() % 3);
        const Tensor t = tsupport::random_strong_m(m, n, rng);
        const TauEstimate est = tau_strong_m(t);
        if (!est.b_estimate.converged) continue;
        CHECK(est.strong_m);
        for (const auto& c :
             verify_eigenvalue_in_regions(t, est.value, enumerate_partitions(n)))
            CHECK(c.contained);
    }
}
