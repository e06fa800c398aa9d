#pragma once

// Dense real tensor of order m, dimension n, with the structural
// classification used throughout: nonnegative / Z / symmetric tensors,
// (weak) irreducibility, and the split A = s*I - B.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "tensorloc/errors.hpp"

namespace tloc {

// Multi-index (i2,...,im) over {0..n-1}, odometer-style increment.
// Returns false when the index wraps back to all zeros.
inline bool next_tuple(std::vector<int>& tuple, int dim) {
    for (int k = static_cast<int>(tuple.size()) - 1; k >= 0; --k) {
        if (++tuple[k] < dim) return true;
        tuple[k] = 0;
    }
    return false;
}

inline std::int64_t default_storage_cap() {
    if (const char* env = std::getenv("TENSORLOC_MAX_DENSE")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 100'000'000;  // 1e8 entries
}

class Tensor {
public:
    Tensor(int order, int dim, std::vector<double> entries)
        : order_(order), dim_(dim), entries_(std::move(entries)) {
        if (order_ < 2 || dim_ < 2)
            throw TensorError("tensor requires order >= 2 and dim >= 2");
        if (entries_.size() != static_cast<std::size_t>(entry_count(order_, dim_)))
            throw TensorError("entry array length must equal dim^order");
        for (double v : entries_)
            if (!std::isfinite(v)) throw TensorError("tensor entries must be finite");
    }

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::vector<double>& entries() const { return entries_; }

    static std::int64_t entry_count(int order, int dim) {
        std::int64_t c = 1;
        for (int k = 0; k < order; ++k) {
            if (c > default_storage_cap() / dim + 1) return -1;  // overflow guard
            c *= dim;
        }
        return c;
    }

    // Flat offset of a full multi-index (i1,...,im), 0-based components.
    std::int64_t offset(const std::vector<int>& index) const {
        std::int64_t off = 0;
        for (int c : index) off = off * dim_ + c;
        return off;
    }

    // Row-relative offset: entry (i, tuple) lives at i*dim^(m-1) + tuple_offset.
    std::int64_t row_stride() const {
        std::int64_t s = 1;
        for (int k = 1; k < order_; ++k) s *= dim_;
        return s;
    }

    double at(const std::vector<int>& index) const { return entries_[offset(index)]; }

    // a_{i j...j}: the entry whose trailing tuple is all j.
    double entry_i_jdots(int i, int j) const {
        std::vector<int> idx(order_, j);
        idx[0] = i;
        return at(idx);
    }

    double diagonal(int i) const {
        std::vector<int> idx(order_, i);
        return at(idx);
    }

    double max_diagonal() const {
        double v = diagonal(0);
        for (int i = 1; i < dim_; ++i) v = std::max(v, diagonal(i));
        return v;
    }

    double min_diagonal() const {
        double v = diagonal(0);
        for (int i = 1; i < dim_; ++i) v = std::min(v, diagonal(i));
        return v;
    }

private:
    int order_;
    int dim_;
    std::vector<double> entries_;
};

// Sparse entry: full 1-based multi-index plus value.
struct TensorEntry {
    std::vector<int> index;  // 1-based, size == order
    double value = 0.0;
};

inline void check_entry_index(const std::vector<int>& index, int order, int dim) {
    if (static_cast<int>(index.size()) != order)
        throw IndexOutOfRange("multi-index has wrong number of components");
    for (int c : index)
        if (c < 1 || c > dim) throw IndexOutOfRange("multi-index component outside 1..dim");
}

inline Tensor build_tensor(int order, int dim, const std::vector<TensorEntry>& sparse,
                           std::int64_t cap = default_storage_cap()) {
    if (order < 2 || dim < 2) throw TensorError("order >= 2 and dim >= 2 required");
    const std::int64_t count = Tensor::entry_count(order, dim);
    if (count < 0 || count > cap)
        throw StorageCapExceeded("dim^order exceeds the dense storage cap");
    std::vector<double> data(static_cast<std::size_t>(count), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    for (const auto& e : sparse) {
        check_entry_index(e.index, order, dim);
        std::int64_t off = 0;
        for (int c : e.index) off = off * dim + (c - 1);
        if (seen[static_cast<std::size_t>(off)])
            throw DuplicateEntry("duplicate multi-index in entry list");
        seen[static_cast<std::size_t>(off)] = true;
        data[static_cast<std::size_t>(off)] = e.value;
    }
    return Tensor(order, dim, std::move(data));
}

// Symmetric tensor from representatives keyed by non-decreasing multi-index:
// every permutation of each key receives the representative value.
inline Tensor symmetrize_from_representatives(int order, int dim,
                                              const std::vector<TensorEntry>& reps,
                                              std::int64_t cap = default_storage_cap()) {
    if (order < 2 || dim < 2) throw TensorError("order >= 2 and dim >= 2 required");
    const std::int64_t count = Tensor::entry_count(order, dim);
    if (count < 0 || count > cap)
        throw StorageCapExceeded("dim^order exceeds the dense storage cap");
    std::vector<double> data(static_cast<std::size_t>(count), 0.0);
    std::map<std::vector<int>, double> byKey;
    for (const auto& e : reps) {
        check_entry_index(e.index, order, dim);
        if (!std::is_sorted(e.index.begin(), e.index.end()))
            throw UnsortedKey("representative key must be non-decreasing");
        if (!byKey.emplace(e.index, e.value).second)
            throw DuplicateKey("duplicate representative key");
    }
    // Walk every full multi-index once; look up its sorted representative.
    std::vector<int> idx(order, 1);
    for (std::int64_t off = 0; off < count; ++off) {
        std::vector<int> key = idx;
        std::sort(key.begin(), key.end());
        auto it = byKey.find(key);
        if (it != byKey.end()) data[static_cast<std::size_t>(off)] = it->second;
        for (int k = order - 1; k >= 0; --k) {
            if (++idx[k] <= dim) break;
            idx[k] = 1;
        }
    }
    return Tensor(order, dim, std::move(data));
}

inline Tensor unit_tensor(int order, int dim) {
    std::vector<TensorEntry> diag;
    for (int i = 1; i <= dim; ++i) diag.push_back({std::vector<int>(order, i), 1.0});
    return build_tensor(order, dim, diag);
}

struct ClassifyFlags {
    bool nonnegative = true;
    bool z_tensor = true;
    bool symmetric = true;
    bool positive_diagonal = true;
};

// Exhaustive entry scan; exact comparisons against zero (structure is a
// property of the input literals, not of arithmetic).
inline ClassifyFlags classify(const Tensor& t) {
    ClassifyFlags f;
    const int m = t.order();
    const int n = t.dim();
    for (int i = 0; i < n; ++i)
        if (!(t.diagonal(i) > 0.0)) f.positive_diagonal = false;

    std::vector<int> idx(m, 0);
    const auto& data = t.entries();
    std::int64_t off = 0;
    do {
        const double v = data[static_cast<std::size_t>(off)];
        const bool diag = std::all_of(idx.begin(), idx.end(),
                                      [&](int c) { return c == idx[0]; });
        if (v < 0.0) f.nonnegative = false;
        if (!diag && v > 0.0) f.z_tensor = false;
        if (f.symmetric) {
            std::vector<int> key = idx;
            std::sort(key.begin(), key.end());
            if (t.entries()[static_cast<std::size_t>(t.offset(key))] != v)
                f.symmetric = false;
        }
        ++off;
    } while (next_tuple(idx, n));
    return f;
}

inline bool is_symmetric(const Tensor& t) { return classify(t).symmetric; }

namespace detail {

// Representation digraph: edge i -> j iff some non-diagonal tuple containing j
// has a nonzero row-i entry.
inline std::vector<std::vector<bool>> representation_digraph(const Tensor& t) {
    const int n = t.dim();
    const int m = t.order();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<int> tuple(m - 1, 0);
    std::int64_t off = 0;
    for (int i = 0; i < n; ++i) {
        std::fill(tuple.begin(), tuple.end(), 0);
        do {
            const bool pure_diag = std::all_of(tuple.begin(), tuple.end(),
                                               [&](int c) { return c == i; });
            if (!pure_diag && t.entries()[static_cast<std::size_t>(off)] != 0.0)
                for (int c : tuple) adj[i][c] = true;
            ++off;
        } while (next_tuple(tuple, n));
    }
    return adj;
}

inline std::vector<bool> reachable(const std::vector<std::vector<bool>>& adj, int start,
                                   bool transpose) {
    const int n = static_cast<int>(adj.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            const bool edge = transpose ? adj[v][u] : adj[u][v];
            if (edge && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace detail

// Weak irreducibility == strong connectivity of the representation digraph.
inline bool is_weakly_irreducible(const Tensor& t) {
    const auto adj = detail::representation_digraph(t);
    const auto fwd = detail::reachable(adj, 0, false);
    const auto bwd = detail::reachable(adj, 0, true);
    for (int i = 0; i < t.dim(); ++i)
        if (!fwd[i] || !bwd[i]) return false;
    return true;
}

// Subset-definition weak reducibility, exponential; used as a cross-check
// oracle for small n.
inline bool is_weakly_irreducible_bruteforce(const Tensor& t) {
    const int n = t.dim();
    if (n > 20) throw DimensionTooLargeForExhaustiveCheck("n too large for subset enumeration");
    const int m = t.order();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        bool reducing = true;
        std::vector<int> tuple(m - 1, 0);
        for (int i = 0; i < n && reducing; ++i) {
            if (!(mask & (1u << i))) continue;
            std::fill(tuple.begin(), tuple.end(), 0);
            std::int64_t off = static_cast<std::int64_t>(i) * t.row_stride();
            do {
                const bool leaves = std::any_of(tuple.begin(), tuple.end(), [&](int c) {
                    return !(mask & (1u << c));
                });
                if (leaves && t.entries()[static_cast<std::size_t>(off)] != 0.0) {
                    reducing = false;
                    break;
                }
                ++off;
            } while (next_tuple(tuple, n));
        }
        if (reducing) return false;  // found a weakly reducing subset
    }
    return true;
}

inline bool is_irreducible(const Tensor& t) {
    const int n = t.dim();
    if (n > 20) throw DimensionTooLargeForExhaustiveCheck("n too large for subset enumeration");
    const int m = t.order();
    std::vector<int> tuple(m - 1, 0);
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        bool reducing = true;
        for (int i = 0; i < n && reducing; ++i) {
            if (!(mask & (1u << i))) continue;
            std::fill(tuple.begin(), tuple.end(), 0);
            std::int64_t off = static_cast<std::int64_t>(i) * t.row_stride();
            do {
                const bool all_outside = std::all_of(tuple.begin(), tuple.end(), [&](int c) {
                    return !(mask & (1u << c));
                });
                if (all_outside && t.entries()[static_cast<std::size_t>(off)] != 0.0) {
                    reducing = false;
                    break;
                }
                ++off;
            } while (next_tuple(tuple, n));
        }
        if (reducing) return false;
    }
    return true;
}

// A = s*I - B with s = max diagonal entry and B >= 0.
struct MTensorSplit {
    double s = 0.0;
    Tensor b;
};

inline MTensorSplit m_tensor_split(const Tensor& t) {
    const auto flags = classify(t);
    if (!flags.z_tensor) throw NotZTensor("split requires a Z-tensor");
    const int m = t.order();
    const int n = t.dim();
    const double s = t.max_diagonal();
    std::vector<double> data(t.entries().size(), 0.0);
    std::vector<int> idx(m, 0);
    std::int64_t off = 0;
    do {
        const bool diag = std::all_of(idx.begin(), idx.end(),
                                      [&](int c) { return c == idx[0]; });
        const double unit = diag ? 1.0 : 0.0;
        data[static_cast<std::size_t>(off)] = s * unit - t.entries()[static_cast<std::size_t>(off)];
        ++off;
    } while (next_tuple(idx, n));
    return MTensorSplit{s, Tensor(m, n, std::move(data))};
}

}  // namespace tloc
