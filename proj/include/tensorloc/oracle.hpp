#pragma once

// Independent numeric oracle: power iteration for the spectral radius of a
// nonnegative tensor (with collatz-style bracketing), the minimum
// H-eigenvalue of a strong M-tensor via the split A = s*I - B, and a sampled
// check that computed eigenvalues land inside every localization set.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tensorloc/regions.hpp"
#include "tensorloc/tensor.hpp"

namespace tloc {

// y_i = sum_{i2..im} a_{i i2..im} x_{i2} ... x_{im}. When delta > 0 the
// all-ones rank-one perturbation delta * (sum_j x_j)^(m-1) is added to every
// component, which makes any nonnegative tensor effectively irreducible
// without materializing the perturbed tensor.
inline std::vector<double> apply_tensor(const Tensor& t, const std::vector<double>& x,
                                        double delta = 0.0) {
    if (static_cast<int>(x.size()) != t.dim())
        throw LengthMismatch("vector length must equal tensor dimension");
    const int m = t.order();
    const int n = t.dim();
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    std::vector<int> tuple(m - 1, 0);
    std::int64_t off = 0;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        std::fill(tuple.begin(), tuple.end(), 0);
        do {
            const double a = t.entries()[static_cast<std::size_t>(off)];
            if (a != 0.0) {
                double prod = a;
                for (int c : tuple) prod *= x[static_cast<std::size_t>(c)];
                acc += prod;
            }
            ++off;
        } while (next_tuple(tuple, n));
        y[static_cast<std::size_t>(i)] = acc;
    }
    if (delta > 0.0) {
        double s = 0.0;
        for (double v : x) s += v;
        const double bump = delta * std::pow(s, m - 1);
        for (double& v : y) v += bump;
    }
    return y;
}

struct EigenPairEstimate {
    double value = 0.0;
    std::vector<double> vector;  // max-norm 1, entrywise positive
    double lower = 0.0, upper = 0.0;  // final bracket
    double residual = 0.0;  // max_i |(A x^{m-1})_i - value * x_i^{m-1}|, unperturbed
    int iterations = 0;
    bool converged = false;
    double perturbation = 0.0;  // delta actually used
};

struct OracleOptions {
    double tolerance = 1e-10;
    int max_iterations = 100'000;
    double perturbation = 1e-12;  // applied only when not weakly irreducible
};

namespace detail {

inline double unperturbed_residual(const Tensor& t, double lambda,
                                   const std::vector<double>& x) {
    const auto y = apply_tensor(t, x);
    const int m = t.order();
    double res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        res = std::max(res, std::abs(y[i] - lambda * std::pow(x[i], m - 1)));
    return res;
}

}  // namespace detail

// Power iteration for rho(A), A >= 0. Brackets rho by
// min_i y_i / x_i^(m-1) <= rho <= max_i y_i / x_i^(m-1) and iterates
// x <- y^[1/(m-1)] renormalized to max-norm 1. The bracket is clamped so it
// never widens. Weakly reducible inputs are perturbed by options.perturbation.
inline EigenPairEstimate spectral_radius_nonneg(const Tensor& t,
                                                OracleOptions options = {}) {
    if (!classify(t).nonnegative)
        throw NotNonnegative("spectral radius oracle requires a nonnegative tensor");
    const int m = t.order();
    const int n = t.dim();
    const double delta = is_weakly_irreducible(t) ? 0.0 : options.perturbation;

    EigenPairEstimate est;
    est.perturbation = delta;
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    const double inv = 1.0 / (m - 1);
    for (int it = 1; it <= options.max_iterations; ++it) {
        const auto y = apply_tensor(t, x, delta);
        double step_lo = std::numeric_limits<double>::infinity();
        double step_hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double q = y[static_cast<std::size_t>(i)] /
                             std::pow(x[static_cast<std::size_t>(i)], m - 1);
            step_lo = std::min(step_lo, q);
            step_hi = std::max(step_hi, q);
        }
        lo = std::max(lo, step_lo);
        hi = std::min(hi, step_hi);
        est.iterations = it;
        if (hi - lo <= options.tolerance * std::max(1.0, std::abs(hi))) {
            est.converged = true;
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] = std::pow(y[static_cast<std::size_t>(i)], inv);
            norm = std::max(norm, x[static_cast<std::size_t>(i)]);
        }
        for (double& v : x) v /= norm;
        if (est.converged) break;
    }
    est.lower = lo;
    est.upper = hi;
    est.value = 0.5 * (lo + hi);
    est.vector = x;
    est.residual = detail::unperturbed_residual(t, est.value, x);
    return est;
}

// tau(A) = s - rho(B) under the split A = s*I - B, for Z-tensors.
struct TauEstimate {
    double value = 0.0;        // s - rho(B)
    double s = 0.0;
    double rho_b = 0.0;
    bool strong_m = false;     // s > rho(B)
    double lower = 0.0, upper = 0.0;
    double residual = 0.0;     // eigenpair residual against A itself
    EigenPairEstimate b_estimate;  // the underlying power iteration on B
};

inline TauEstimate tau_strong_m(const Tensor& t, OracleOptions options = {}) {
    const MTensorSplit split = m_tensor_split(t);
    TauEstimate est;
    est.b_estimate = spectral_radius_nonneg(split.b, options);
    est.s = split.s;
    est.rho_b = est.b_estimate.value;
    est.value = split.s - est.rho_b;
    est.lower = split.s - est.b_estimate.upper;  // bracket flips under s - (.)
    est.upper = split.s - est.b_estimate.lower;
    est.strong_m = split.s > est.rho_b;
    est.residual = detail::unperturbed_residual(t, est.value, est.b_estimate.vector);
    return est;
}

// Verifies an eigenvalue estimate against each localization region: the
// eigenvalue, as a real point, must be a member of every set in the chain.
struct RegionCheck {
    RegionKind kind = RegionKind::GAMMA;
    std::string partition;  // "{1,2}" form
    bool contained = false;
    std::string witness;
};

inline std::vector<RegionCheck> verify_eigenvalue_in_regions(
    const Tensor& t, double eigenvalue, const std::vector<SubsetPartition>& partitions) {
    const ComplexPoint z{eigenvalue, 0.0};
    std::vector<RegionCheck> out;
    for (const auto& part : partitions) {
        RegionEvaluator ev(t, part);
        for (RegionKind k : {RegionKind::GAMMA, RegionKind::BRAUER_K, RegionKind::K_S,
                             RegionKind::OMEGA_S, RegionKind::UPSILON_S}) {
            const MembershipWitness w = ev.contains(k, z);
            out.push_back({k, part.to_string(), w.in_set, w.component});
        }
    }
    return out;
}

}  // namespace tloc
