#pragma once

// Row-sum machinery: R_i (signed), r_i, r_i^j, and the tuple-class sums
// r_i^{Delta^X} / r_i^{complement Delta^X} for an arbitrary index subset X.
// The diagonal tuple (i,...,i) is always excluded from the absolute sums,
// which makes r_i = r_i^{Delta^X} + r_i^{complement Delta^X} hold for every
// row regardless of which side of the partition i lies on.

#include <cmath>
#include <vector>

#include "tensorloc/errors.hpp"
#include "tensorloc/partition.hpp"
#include "tensorloc/tensor.hpp"

namespace tloc {

// Signed full-row sum R_i. 0-based row index.
inline double signed_row_sum(const Tensor& t, int i) {
    const std::int64_t stride = t.row_stride();
    const std::int64_t base = static_cast<std::int64_t>(i) * stride;
    double sum = 0.0;
    for (std::int64_t k = 0; k < stride; ++k)
        sum += t.entries()[static_cast<std::size_t>(base + k)];
    return sum;
}

inline double r_max_signed(const Tensor& t) {
    double v = signed_row_sum(t, 0);
    for (int i = 1; i < t.dim(); ++i) v = std::max(v, signed_row_sum(t, i));
    return v;
}

inline double r_min_signed(const Tensor& t) {
    double v = signed_row_sum(t, 0);
    for (int i = 1; i < t.dim(); ++i) v = std::min(v, signed_row_sum(t, i));
    return v;
}

// Off-diagonal absolute row sum r_i.
inline double off_diagonal_abs_sum(const Tensor& t, int i) {
    const std::int64_t stride = t.row_stride();
    const std::int64_t base = static_cast<std::int64_t>(i) * stride;
    double sum = 0.0;
    for (std::int64_t k = 0; k < stride; ++k)
        sum += std::abs(t.entries()[static_cast<std::size_t>(base + k)]);
    std::vector<int> diag(t.order(), i);
    sum -= std::abs(t.entries()[static_cast<std::size_t>(t.offset(diag))]);
    return sum;
}

// r_i^j = r_i - |a_{ij...j}|.
inline double r_minus_j(const Tensor& t, int i, int j) {
    return off_diagonal_abs_sum(t, i) - std::abs(t.entry_i_jdots(i, j));
}

// r_i^{Delta^X}: absolute sum over tuples with every component in X,
// excluding the diagonal tuple. `in_x` is a 0-based membership predicate.
inline double r_delta(const Tensor& t, int i, const std::vector<bool>& in_x) {
    const int m = t.order();
    const int n = t.dim();
    std::vector<int> tuple(m - 1, 0);
    std::int64_t off = static_cast<std::int64_t>(i) * t.row_stride();
    double sum = 0.0;
    do {
        bool all_in = true;
        bool diag = true;
        for (int c : tuple) {
            all_in = all_in && in_x[c];
            diag = diag && (c == i);
        }
        if (all_in && !diag) sum += std::abs(t.entries()[static_cast<std::size_t>(off)]);
        ++off;
    } while (next_tuple(tuple, n));
    return sum;
}

struct RowAggregates {
    int i = 0;            // 0-based row index
    double bigR = 0.0;    // signed sum R_i
    double r = 0.0;       // r_i
    double rDeltaS = 0.0;     // r_i^{Delta^S}
    double rDeltaSbar = 0.0;  // r_i^{complement Delta^S}
};

inline RowAggregates row_aggregates(const Tensor& t, int i, const SubsetPartition& part) {
    if (i < 0 || i >= t.dim()) throw IndexOutOfRange("row index outside 0..n-1");
    std::vector<bool> in_s(t.dim(), false);
    for (int k : part.members()) in_s[k] = true;
    RowAggregates a;
    a.i = i;
    a.bigR = signed_row_sum(t, i);
    a.r = off_diagonal_abs_sum(t, i);
    a.rDeltaS = r_delta(t, i, in_s);
    a.rDeltaSbar = a.r - a.rDeltaS;
    return a;
}

// Everything the set predicates and bound formulas consume, computed once
// per (tensor, partition). Row index everywhere 0-based.
struct PartitionAggregates {
    int n = 0;
    std::vector<int> s;     // members, 0-based
    std::vector<int> sbar;  // complement, 0-based
    std::vector<double> diag;
    std::vector<double> bigR;
    std::vector<double> r;
    std::vector<double> rDS;      // r_i^{Delta^S}
    std::vector<double> rDSbar;   // r_i^{Delta^Sbar}
    std::vector<double> rBarDS;   // r_i^{complement Delta^S}
    std::vector<double> rBarDSbar;

    PartitionAggregates(const Tensor& t, const SubsetPartition& part)
        : n(t.dim()), s(part.members()), sbar(part.complement()) {
        std::vector<bool> in_s(n, false), in_sbar(n, false);
        for (int k : s) in_s[k] = true;
        for (int k : sbar) in_sbar[k] = true;
        diag.resize(n);
        bigR.resize(n);
        r.resize(n);
        rDS.resize(n);
        rDSbar.resize(n);
        rBarDS.resize(n);
        rBarDSbar.resize(n);
        for (int i = 0; i < n; ++i) {
            diag[i] = t.diagonal(i);
            bigR[i] = signed_row_sum(t, i);
            r[i] = off_diagonal_abs_sum(t, i);
            rDS[i] = r_delta(t, i, in_s);
            rDSbar[i] = r_delta(t, i, in_sbar);
            rBarDS[i] = r[i] - rDS[i];
            rBarDSbar[i] = r[i] - rDSbar[i];
        }
    }
};

}  // namespace tloc
