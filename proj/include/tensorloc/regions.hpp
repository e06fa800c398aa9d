#pragma once

// Membership predicates for the five eigenvalue localization sets
// (Gershgorin disks, Brauer ovals, their S-type restriction, the
// Delta-split S-type set, and the refined S-type set), plus the sampled
// verification of the inclusion chain and raster emission.
//
// All inequalities are non-strict and evaluated with plain floating
// comparison; the sets are closed.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tensorloc/aggregates.hpp"
#include "tensorloc/errors.hpp"
#include "tensorloc/partition.hpp"
#include "tensorloc/tensor.hpp"

namespace tloc {

using ComplexPoint = std::complex<double>;

enum class RegionKind { GAMMA, BRAUER_K, K_S, OMEGA_S, UPSILON_S };

inline bool region_kind_needs_partition(RegionKind k) {
    return k == RegionKind::K_S || k == RegionKind::OMEGA_S || k == RegionKind::UPSILON_S;
}

inline std::string region_kind_name(RegionKind k) {
    switch (k) {
        case RegionKind::GAMMA: return "gamma";
        case RegionKind::BRAUER_K: return "k";
        case RegionKind::K_S: return "ks";
        case RegionKind::OMEGA_S: return "omega";
        case RegionKind::UPSILON_S: return "upsilon";
    }
    return "?";
}

struct RegionSpec {
    RegionKind kind = RegionKind::GAMMA;
    std::optional<SubsetPartition> partition;

    RegionSpec(RegionKind k) : kind(k) {
        if (region_kind_needs_partition(k))
            throw InvalidPartition("region kind requires a partition");
    }
    RegionSpec(RegionKind k, SubsetPartition p) : kind(k), partition(std::move(p)) {
        if (!region_kind_needs_partition(k))
            throw InvalidPartition("region kind takes no partition");
    }
};

struct MembershipWitness {
    bool in_set = false;
    std::string component;  // which disjunct admitted z; empty when outside

    explicit operator bool() const { return in_set; }
};

// Context for partition-free sets.
struct BaseAggregates {
    int n = 0;
    std::vector<double> diag;
    std::vector<double> r;
    const Tensor* t = nullptr;  // for a_{ij...j} lookups in the Brauer ovals

    explicit BaseAggregates(const Tensor& tensor) : n(tensor.dim()), t(&tensor) {
        diag.resize(n);
        r.resize(n);
        for (int i = 0; i < n; ++i) {
            diag[i] = tensor.diagonal(i);
            r[i] = off_diagonal_abs_sum(tensor, i);
        }
    }
};

inline MembershipWitness gamma_contains(const BaseAggregates& a, ComplexPoint z) {
    for (int i = 0; i < a.n; ++i)
        if (std::abs(z - a.diag[i]) <= a.r[i])
            return {true, "Gamma at i=" + std::to_string(i + 1)};
    return {};
}

inline MembershipWitness gamma_contains(const Tensor& t, ComplexPoint z) {
    return gamma_contains(BaseAggregates(t), z);
}

// Brauer oval K_{i,j}: (|z-a_ii| - r_i^j) |z-a_jj| <= |a_{ij...j}| r_j.
inline bool brauer_oval(const BaseAggregates& a, int i, int j, ComplexPoint z) {
    const double aij = std::abs(a.t->entry_i_jdots(i, j));
    const double lhs = (std::abs(z - a.diag[i]) - (a.r[i] - aij)) * std::abs(z - a.diag[j]);
    return lhs <= aij * a.r[j];
}

inline MembershipWitness brauer_contains(const BaseAggregates& a, ComplexPoint z) {
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (j != i && brauer_oval(a, i, j, z))
                return {true, "K at (i,j)=(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")"};
    return {};
}

inline MembershipWitness brauer_contains(const Tensor& t, ComplexPoint z) {
    return brauer_contains(BaseAggregates(t), z);
}

inline MembershipWitness k_s_contains(const BaseAggregates& a, const SubsetPartition& part,
                                      ComplexPoint z) {
    for (int i : part.members())
        for (int j : part.complement())
            if (brauer_oval(a, i, j, z))
                return {true, "K^S at (i,j)=(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")"};
    for (int i : part.complement())
        for (int j : part.members())
            if (brauer_oval(a, i, j, z))
                return {true, "K^S at (i,j)=(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")"};
    return {};
}

inline MembershipWitness k_s_contains(const Tensor& t, const SubsetPartition& part,
                                      ComplexPoint z) {
    return k_s_contains(BaseAggregates(t), part, z);
}

inline MembershipWitness omega_s_contains(const PartitionAggregates& a, ComplexPoint z) {
    // Omega^S_{i,j}, i in S, j in Sbar:
    //   |z-a_ii| (|z-a_jj| - r_j^{bar Delta^S}) <= r_i r_j^{Delta^S}
    for (int i : a.s)
        for (int j : a.sbar)
            if (std::abs(z - a.diag[i]) * (std::abs(z - a.diag[j]) - a.rBarDS[j]) <=
                a.r[i] * a.rDS[j])
                return {true, "Omega^S at (i,j)=(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")"};
    // Omega^Sbar_{i,j}, i in Sbar, j in S: the mirrored condition.
    for (int i : a.sbar)
        for (int j : a.s)
            if (std::abs(z - a.diag[i]) * (std::abs(z - a.diag[j]) - a.rBarDSbar[j]) <=
                a.r[i] * a.rDSbar[j])
                return {true, "Omega^Sbar at (i,j)=(" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")"};
    return {};
}

inline MembershipWitness omega_s_contains(const Tensor& t, const SubsetPartition& part,
                                          ComplexPoint z) {
    return omega_s_contains(PartitionAggregates(t, part), z);
}

// The refined S-type set. Component families, with i and j on opposite sides:
//   Upsilon-hat^1_i  (i in S):    |z-a_ii| <= r_i^{bar Delta^Sbar}
//   Upsilon-tilde^1_{i,j} ∩ Gamma_i  (i in S, j in Sbar)
//   Upsilon-hat^2_i  (i in Sbar): |z-a_ii| <= r_i^{bar Delta^S}
//   Upsilon-tilde^2_{i,j} ∩ Gamma_i  (i in Sbar, j in S)
// `consulted`, when non-null, counts every component set evaluated so the
// structural count 2|S|(n-|S|)+2n can be asserted.
inline MembershipWitness upsilon_s_contains(const PartitionAggregates& a, ComplexPoint z,
                                            int* consulted = nullptr) {
    int count = 0;
    MembershipWitness hit;
    auto admit = [&](std::string component) {
        if (!hit.in_set) hit = {true, std::move(component)};
    };

    for (int i : a.s) {
        ++count;
        if (!hit.in_set && std::abs(z - a.diag[i]) <= a.rBarDSbar[i])
            admit("UpsilonHat1 at i=" + std::to_string(i + 1));
    }
    count += a.n;  // the n Gamma disks the tilde ovals are cut with, each once
    for (int i : a.s)
        for (int j : a.sbar) {
            ++count;  // the tilde oval itself
            if (hit.in_set) continue;
            const double di = std::abs(z - a.diag[i]);
            const double dj = std::abs(z - a.diag[j]);
            const bool oval = (di - a.rBarDSbar[i]) * (dj - a.rDSbar[j]) <=
                              a.rDSbar[i] * a.rBarDSbar[j];
            const bool disk = di <= a.r[i];
            if (oval && disk)
                admit("UpsilonTilde1&Gamma at (i,j)=(" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
        }
    for (int i : a.sbar) {
        ++count;
        if (!hit.in_set && std::abs(z - a.diag[i]) <= a.rBarDS[i])
            admit("UpsilonHat2 at i=" + std::to_string(i + 1));
    }
    for (int i : a.sbar)
        for (int j : a.s) {
            ++count;
            if (hit.in_set) continue;
            const double di = std::abs(z - a.diag[i]);
            const double dj = std::abs(z - a.diag[j]);
            const bool oval = (di - a.rBarDS[i]) * (dj - a.rDS[j]) <=
                              a.rDS[i] * a.rBarDS[j];
            const bool disk = di <= a.r[i];
            if (oval && disk)
                admit("UpsilonTilde2&Gamma at (i,j)=(" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ")");
        }
    if (consulted) *consulted = count;
    return hit;
}

inline MembershipWitness upsilon_s_contains(const Tensor& t, const SubsetPartition& part,
                                            ComplexPoint z, int* consulted = nullptr) {
    return upsilon_s_contains(PartitionAggregates(t, part), z, consulted);
}

// Number of component sets consulted by one Upsilon^S evaluation:
// |S| + (n-|S|) hat disks, |S|(n-|S|) tilde ovals of each family, and the
// n Gamma disks the ovals are intersected with.
inline int upsilon_component_count(const SubsetPartition& part) {
    const int s = static_cast<int>(part.members().size());
    const int n = part.n();
    return 2 * s * (n - s) + 2 * n;
}

// Bundles the five predicates over shared precomputed aggregates.
class RegionEvaluator {
public:
    RegionEvaluator(const Tensor& t, const SubsetPartition& part)
        : base_(t), part_(part), agg_(t, part) {}

    MembershipWitness gamma(ComplexPoint z) const { return gamma_contains(base_, z); }
    MembershipWitness brauer(ComplexPoint z) const { return brauer_contains(base_, z); }
    MembershipWitness k_s(ComplexPoint z) const { return k_s_contains(base_, part_, z); }
    MembershipWitness omega(ComplexPoint z) const { return omega_s_contains(agg_, z); }
    MembershipWitness upsilon(ComplexPoint z) const { return upsilon_s_contains(agg_, z); }

    MembershipWitness contains(RegionKind k, ComplexPoint z) const {
        switch (k) {
            case RegionKind::GAMMA: return gamma(z);
            case RegionKind::BRAUER_K: return brauer(z);
            case RegionKind::K_S: return k_s(z);
            case RegionKind::OMEGA_S: return omega(z);
            case RegionKind::UPSILON_S: return upsilon(z);
        }
        return {};
    }

    const PartitionAggregates& aggregates() const { return agg_; }

private:
    BaseAggregates base_;
    SubsetPartition part_;
    PartitionAggregates agg_;
};

struct Window {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

// Square centered at the mean diagonal with half-width
// 1.25 * max_i(|a_ii| + r_i); covers Gamma entirely with margin.
inline Window default_window(const Tensor& t) {
    BaseAggregates a(t);
    double center = 0.0, extent = 0.0;
    for (int i = 0; i < a.n; ++i) {
        center += a.diag[i];
        extent = std::max(extent, std::abs(a.diag[i]) + a.r[i]);
    }
    center /= a.n;
    const double h = 1.25 * extent;
    return {center - h, center + h, -h, h};
}

struct ChainReport {
    std::int64_t samples = 0;
    std::int64_t violations = 0;
    std::int64_t count_gamma = 0;
    std::int64_t count_k = 0;
    std::int64_t count_ks = 0;
    std::int64_t count_omega = 0;
    std::int64_t count_upsilon = 0;
    std::optional<ComplexPoint> first_violation;
    std::string first_violation_link;  // which implication broke
};

// Samples the window (uniform grid plus seeded uniform random points) and
// checks the monotone chain Upsilon => Omega => K^S => K => Gamma at each
// point. Violations are report content, not errors.
inline ChainReport verify_inclusion_chain(const Tensor& t, const SubsetPartition& part,
                                          std::int64_t sample_count, const Window& w,
                                          std::uint64_t seed = 20240915) {
    if (sample_count < 1) throw PreconditionViolated("sample_count >= 1 required");
    RegionEvaluator ev(t, part);
    ChainReport rep;

    auto visit = [&](ComplexPoint z) {
        const bool in_u = static_cast<bool>(ev.upsilon(z));
        const bool in_o = static_cast<bool>(ev.omega(z));
        const bool in_ks = static_cast<bool>(ev.k_s(z));
        const bool in_k = static_cast<bool>(ev.brauer(z));
        const bool in_g = static_cast<bool>(ev.gamma(z));
        rep.count_upsilon += in_u;
        rep.count_omega += in_o;
        rep.count_ks += in_ks;
        rep.count_k += in_k;
        rep.count_gamma += in_g;
        const char* broke = nullptr;
        if (in_u && !in_o) broke = "Upsilon => Omega";
        else if (in_o && !in_ks) broke = "Omega => K^S";
        else if (in_ks && !in_k) broke = "K^S => K";
        else if (in_k && !in_g) broke = "K => Gamma";
        if (broke) {
            ++rep.violations;
            if (!rep.first_violation) {
                rep.first_violation = z;
                rep.first_violation_link = broke;
            }
        }
        ++rep.samples;
    };

    // Grid half, row-major, then random half.
    const std::int64_t grid_total = sample_count / 2;
    const int per_axis = std::max<int>(2, static_cast<int>(std::sqrt(double(grid_total))));
    for (int iy = 0; iy < per_axis; ++iy)
        for (int ix = 0; ix < per_axis; ++ix)
            visit({w.x0 + (w.x1 - w.x0) * ix / (per_axis - 1),
                   w.y0 + (w.y1 - w.y0) * iy / (per_axis - 1)});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(w.x0, w.x1), uy(w.y0, w.y1);
    while (rep.samples < sample_count) visit({ux(rng), uy(rng)});
    return rep;
}

struct RasterResult {
    int res_x = 0, res_y = 0;
    std::vector<RegionKind> kinds;
    // bitmaps[k][iy*res_x+ix], row-major, iy=0 at y0.
    std::vector<std::vector<std::uint8_t>> bitmaps;
};

inline RasterResult raster(const Tensor& t, const std::vector<RegionSpec>& regions,
                           const Window& w, int res_x, int res_y) {
    if (res_x < 2 || res_y < 2) throw WindowDegenerate("raster resolution must be >= 2 per axis");
    if (!(w.x1 > w.x0) || !(w.y1 > w.y0)) throw WindowDegenerate("window must have positive area");
    RasterResult out;
    out.res_x = res_x;
    out.res_y = res_y;
    BaseAggregates base(t);
    for (const auto& spec : regions) {
        out.kinds.push_back(spec.kind);
        std::vector<std::uint8_t> bm(static_cast<std::size_t>(res_x) * res_y, 0);
        std::optional<PartitionAggregates> agg;
        if (spec.partition) agg.emplace(t, *spec.partition);
        for (int iy = 0; iy < res_y; ++iy)
            for (int ix = 0; ix < res_x; ++ix) {
                const ComplexPoint z{w.x0 + (w.x1 - w.x0) * ix / (res_x - 1),
                                     w.y0 + (w.y1 - w.y0) * iy / (res_y - 1)};
                bool in = false;
                switch (spec.kind) {
                    case RegionKind::GAMMA: in = static_cast<bool>(gamma_contains(base, z)); break;
                    case RegionKind::BRAUER_K:
                        in = static_cast<bool>(brauer_contains(base, z));
                        break;
                    case RegionKind::K_S:
                        in = static_cast<bool>(k_s_contains(base, *spec.partition, z));
                        break;
                    case RegionKind::OMEGA_S:
                        in = static_cast<bool>(omega_s_contains(*agg, z));
                        break;
                    case RegionKind::UPSILON_S:
                        in = static_cast<bool>(upsilon_s_contains(*agg, z));
                        break;
                }
                bm[static_cast<std::size_t>(iy) * res_x + ix] = in ? 1 : 0;
            }
        out.bitmaps.push_back(std::move(bm));
    }
    return out;
}

}  // namespace tloc
