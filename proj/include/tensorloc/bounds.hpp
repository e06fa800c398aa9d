#pragma once

// Closed-form spectral bounds derived from the S-type localization set:
// the eta upper bound on rho(A) for nonnegative tensors and the pi lower
// bound on tau(A) for strong M-tensors, together with the classical signed
// row-sum bounds and a generic real-axis region scan.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tensorloc/aggregates.hpp"
#include "tensorloc/partition.hpp"
#include "tensorloc/regions.hpp"
#include "tensorloc/tensor.hpp"

namespace tloc {

enum class BoundKind { RHO_UPPER, TAU_LOWER };
enum class BoundMethod { ETA_MAX, PI_MIN, R_MAX, R_MIN, REGION_SCAN };

struct PairTerm {
    int i = 0, j = 0;          // 1-based
    double discriminant = 0.0;  // Phi/Pi (eta) or Theta/Lambda (pi)
    double quadratic = 0.0;     // the half-sum root expression
    double row_cutoff = 0.0;    // R_i
    double value = 0.0;         // min/max of the two
};

struct BoundReport {
    double value = 0.0;
    BoundKind kind = BoundKind::RHO_UPPER;
    BoundMethod method = BoundMethod::R_MAX;
    std::optional<RegionKind> scanned_region;
    std::optional<SubsetPartition> partition;
    // ETA_MAX: components[0..3] = eta1..eta4; PI_MIN: pi1..pi4.
    std::vector<double> components;
    std::vector<PairTerm> pair_terms;  // the eta3/eta4 (or pi3/pi4) pairs
    double tolerance = 0.0;            // region scans only
    bool degenerate_interval = false;
};

inline BoundReport eta_max(const Tensor& t, const SubsetPartition& part) {
    if (!classify(t).nonnegative) throw NotNonnegative("eta bound requires a nonnegative tensor");
    const PartitionAggregates a(t, part);
    BoundReport rep;
    rep.kind = BoundKind::RHO_UPPER;
    rep.method = BoundMethod::ETA_MAX;
    rep.partition = part;

    double eta1 = -std::numeric_limits<double>::infinity();
    for (int i : a.s) eta1 = std::max(eta1, a.diag[i] + a.rBarDSbar[i]);
    double eta2 = -std::numeric_limits<double>::infinity();
    for (int i : a.sbar) eta2 = std::max(eta2, a.diag[i] + a.rBarDS[i]);

    double eta3 = -std::numeric_limits<double>::infinity();
    for (int i : a.s)
        for (int j : a.sbar) {
            const double phi =
                std::pow(a.diag[i] - a.diag[j] + a.rBarDSbar[i] - a.rDSbar[j], 2) +
                4.0 * a.rDSbar[i] * a.rBarDSbar[j];
            const double quad = 0.5 * (a.diag[i] + a.diag[j] + a.rBarDSbar[i] +
                                       a.rDSbar[j] + std::sqrt(phi));
            const double v = std::min(quad, a.bigR[i]);
            rep.pair_terms.push_back({i + 1, j + 1, phi, quad, a.bigR[i], v});
            eta3 = std::max(eta3, v);
        }
    double eta4 = -std::numeric_limits<double>::infinity();
    for (int i : a.sbar)
        for (int j : a.s) {
            const double pi_disc =
                std::pow(a.diag[i] - a.diag[j] + a.rBarDS[i] - a.rDS[j], 2) +
                4.0 * a.rDS[i] * a.rBarDS[j];
            const double quad = 0.5 * (a.diag[i] + a.diag[j] + a.rBarDS[i] +
                                       a.rDS[j] + std::sqrt(pi_disc));
            const double v = std::min(quad, a.bigR[i]);
            rep.pair_terms.push_back({i + 1, j + 1, pi_disc, quad, a.bigR[i], v});
            eta4 = std::max(eta4, v);
        }

    rep.components = {eta1, eta2, eta3, eta4};
    rep.value = std::max(std::max(eta1, eta2), std::max(eta3, eta4));
    return rep;
}

inline BoundReport pi_min(const Tensor& t, const SubsetPartition& part) {
    if (!classify(t).z_tensor) throw NotZTensor("pi bound requires a Z-tensor");
    const PartitionAggregates a(t, part);
    BoundReport rep;
    rep.kind = BoundKind::TAU_LOWER;
    rep.method = BoundMethod::PI_MIN;
    rep.partition = part;

    double pi1 = std::numeric_limits<double>::infinity();
    for (int i : a.s) pi1 = std::min(pi1, a.diag[i] - a.rBarDSbar[i]);
    double pi2 = std::numeric_limits<double>::infinity();
    for (int i : a.sbar) pi2 = std::min(pi2, a.diag[i] - a.rBarDS[i]);

    double pi3 = std::numeric_limits<double>::infinity();
    for (int i : a.s)
        for (int j : a.sbar) {
            const double theta =
                std::pow(a.diag[i] - a.diag[j] - a.rBarDSbar[i] + a.rDSbar[j], 2) +
                4.0 * a.rDSbar[i] * a.rBarDSbar[j];
            const double quad = 0.5 * (a.diag[i] + a.diag[j] - a.rBarDSbar[i] -
                                       a.rDSbar[j] - std::sqrt(theta));
            const double v = std::max(quad, a.bigR[i]);
            rep.pair_terms.push_back({i + 1, j + 1, theta, quad, a.bigR[i], v});
            pi3 = std::min(pi3, v);
        }
    double pi4 = std::numeric_limits<double>::infinity();
    for (int i : a.sbar)
        for (int j : a.s) {
            const double lambda =
                std::pow(a.diag[i] - a.diag[j] - a.rBarDS[i] + a.rDS[j], 2) +
                4.0 * a.rDS[i] * a.rBarDS[j];
            const double quad = 0.5 * (a.diag[i] + a.diag[j] - a.rBarDS[i] -
                                       a.rDS[j] - std::sqrt(lambda));
            const double v = std::max(quad, a.bigR[i]);
            rep.pair_terms.push_back({i + 1, j + 1, lambda, quad, a.bigR[i], v});
            pi4 = std::min(pi4, v);
        }

    rep.components = {pi1, pi2, pi3, pi4};
    rep.value = std::min(std::min(pi1, pi2), std::min(pi3, pi4));
    return rep;
}

inline BoundReport r_max_bound(const Tensor& t) {
    if (!classify(t).nonnegative) throw NotNonnegative("R_max bound requires a nonnegative tensor");
    BoundReport rep;
    rep.kind = BoundKind::RHO_UPPER;
    rep.method = BoundMethod::R_MAX;
    rep.value = r_max_signed(t);
    return rep;
}

inline BoundReport r_min_bound(const Tensor& t) {
    if (!classify(t).z_tensor) throw NotZTensor("R_min bound requires a Z-tensor");
    BoundReport rep;
    rep.kind = BoundKind::TAU_LOWER;
    rep.method = BoundMethod::R_MIN;
    rep.value = r_min_signed(t);
    return rep;
}

// Extracts a bound from any localization set by scanning the real axis:
// for RHO_UPPER the supremum real member of the region on
// [max_i a_ii, R_max] (the spectral radius is real and lies there); for
// TAU_LOWER the infimum member on [R_min, min_i a_ii]. The outermost
// membership transition is refined by bisection.
inline BoundReport region_scan_bound(const Tensor& t, const RegionSpec& region, BoundKind kind,
                                     double tolerance = 1e-4) {
    const auto flags = classify(t);
    if (kind == BoundKind::RHO_UPPER && !flags.nonnegative)
        throw PreconditionViolated("RHO_UPPER scan requires a nonnegative tensor");
    if (kind == BoundKind::TAU_LOWER && !flags.z_tensor)
        throw PreconditionViolated("TAU_LOWER scan requires a Z-tensor");

    BoundReport rep;
    rep.kind = kind;
    rep.method = BoundMethod::REGION_SCAN;
    rep.scanned_region = region.kind;
    rep.partition = region.partition;
    rep.tolerance = tolerance;

    BaseAggregates base(t);
    std::optional<PartitionAggregates> agg;
    if (region.partition) agg.emplace(t, *region.partition);
    auto member = [&](double x) {
        const ComplexPoint z{x, 0.0};
        switch (region.kind) {
            case RegionKind::GAMMA: return static_cast<bool>(gamma_contains(base, z));
            case RegionKind::BRAUER_K: return static_cast<bool>(brauer_contains(base, z));
            case RegionKind::K_S:
                return static_cast<bool>(k_s_contains(base, *region.partition, z));
            case RegionKind::OMEGA_S: return static_cast<bool>(omega_s_contains(*agg, z));
            case RegionKind::UPSILON_S: return static_cast<bool>(upsilon_s_contains(*agg, z));
        }
        return false;
    };

    const bool upper = kind == BoundKind::RHO_UPPER;
    const double lo = upper ? t.max_diagonal() : r_min_signed(t);
    const double hi = upper ? r_max_signed(t) : t.min_diagonal();
    if (!(hi > lo)) {
        // Degenerate interval: the endpoint forced by the diagonal anchoring.
        rep.value = upper ? lo : hi;
        rep.degenerate_interval = true;
        return rep;
    }

    const int grid = 10'000;
    const double step = (hi - lo) / grid;
    double found = std::numeric_limits<double>::quiet_NaN();
    for (int k = 0; k <= grid; ++k) {
        const double x = upper ? hi - k * step : lo + k * step;
        if (member(x)) {
            // Bisect between the member point and its outward neighbor.
            double a = x;
            double b = upper ? std::min(x + step, hi) : std::max(x - step, lo);
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (a + b);
                (member(mid) ? a : b) = mid;
            }
            found = a;
            break;
        }
    }
    if (std::isnan(found)) {
        // Region misses the admissible interval entirely; fall back to the
        // forced endpoint (the relevant eigenvalue is anchored there).
        rep.value = upper ? lo : hi;
        rep.degenerate_interval = true;
        return rep;
    }
    rep.value = upper ? found + tolerance : found - tolerance;
    return rep;
}

// Enumerates every nonempty proper S and returns the sharpest bound
// (minimal eta, maximal pi); first subset in enumeration order wins ties.
inline BoundReport best_bound_over_S(const Tensor& t, BoundMethod method,
                                     int max_dim_exhaustive = 20) {
    if (method != BoundMethod::ETA_MAX && method != BoundMethod::PI_MIN)
        throw PreconditionViolated("best_bound_over_S supports ETA_MAX and PI_MIN");
    const int n = t.dim();
    if (n > max_dim_exhaustive)
        throw DimensionTooLargeForExhaustiveCheck("n too large for subset enumeration");
    std::optional<BoundReport> best;
    for (const auto& part : enumerate_partitions(n)) {
        BoundReport rep = method == BoundMethod::ETA_MAX ? eta_max(t, part) : pi_min(t, part);
        const bool better = !best || (method == BoundMethod::ETA_MAX ? rep.value < best->value
                                                                     : rep.value > best->value);
        if (better) best = std::move(rep);
    }
    return *best;
}

}  // namespace tloc
