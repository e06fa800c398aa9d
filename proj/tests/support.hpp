#pragma once

// Shared test fixtures: the three worked examples, plus seeded random
// corpus generators for nonnegative tensors and strong M-tensors.

#include <random>
#include <string>
#include <vector>

#include "tensorloc/io.hpp"
#include "tensorloc/oracle.hpp"
#include "tensorloc/tensor.hpp"

namespace tsupport {

inline std::string data_path(const std::string& name) {
    return std::string(TLOC_DATA_DIR) + "/" + name;
}

inline const tloc::Tensor& ex41() {
    static const tloc::Tensor t = tloc::load_tensor(data_path("ex41.json"));
    return t;
}

inline const tloc::Tensor& ex51() {
    static const tloc::Tensor t = tloc::load_tensor(data_path("ex51.json"));
    return t;
}

inline const tloc::Tensor& ex61() {
    static const tloc::Tensor t = tloc::load_tensor(data_path("ex61.json"));
    return t;
}

// Dense random nonnegative tensor, entries U[0,1].
inline tloc::Tensor random_nonnegative(int order, int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> data(static_cast<std::size_t>(tloc::Tensor::entry_count(order, dim)));
    for (double& v : data) v = u(rng);
    return tloc::Tensor(order, dim, std::move(data));
}

// Strong M-tensor: s*I - B with B >= 0 random and s chosen above an upper
// bound for rho(B) (its largest row sum), so s > rho(B) is guaranteed.
inline tloc::Tensor random_strong_m(int order, int dim, std::mt19937_64& rng) {
    const tloc::Tensor b = random_nonnegative(order, dim, rng);
    double max_row = 0.0;
    for (int i = 0; i < dim; ++i) max_row = std::max(max_row, tloc::signed_row_sum(b, i));
    std::uniform_real_distribution<double> bump(0.1, 1.0);
    const double s = max_row + bump(rng);
    std::vector<double> data(b.entries().size());
    std::vector<int> idx(order, 0);
    std::int64_t off = 0;
    do {
        bool diag = true;
        for (int c : idx) diag = diag && c == idx[0];
        data[static_cast<std::size_t>(off)] =
            (diag ? s : 0.0) - b.entries()[static_cast<std::size_t>(off)];
        ++off;
    } while (tloc::next_tuple(idx, dim));
    return tloc::Tensor(order, dim, std::move(data));
}

}  // namespace tsupport
