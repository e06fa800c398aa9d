#pragma once

// JSON interchange. Tensor files carry {"order","dim","symmetric","entries"}
// with 1-based multi-indices; when "symmetric" is true the entries are
// non-decreasing representative keys and the tensor is symmetrized on load.
// Report serializers emit full double precision.

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tensorloc/bounds.hpp"
#include "tensorloc/definiteness.hpp"
#include "tensorloc/errors.hpp"
#include "tensorloc/oracle.hpp"
#include "tensorloc/regions.hpp"
#include "tensorloc/tensor.hpp"

namespace tloc {

inline Tensor tensor_from_json(const nlohmann::json& j,
                               std::int64_t cap = default_storage_cap()) {
    try {
        const int order = j.at("order").get<int>();
        const int dim = j.at("dim").get<int>();
        const bool symmetric = j.value("symmetric", false);
        std::vector<TensorEntry> entries;
        for (const auto& e : j.at("entries")) {
            TensorEntry te;
            te.index = e.at("index").get<std::vector<int>>();
            te.value = e.at("value").get<double>();
            entries.push_back(std::move(te));
        }
        return symmetric ? symmetrize_from_representatives(order, dim, entries, cap)
                         : build_tensor(order, dim, entries, cap);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed tensor JSON: ") + ex.what());
    }
}

inline Tensor load_tensor(const std::string& path,
                          std::int64_t cap = default_storage_cap()) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tensor file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return tensor_from_json(j, cap);
}

// Serializes every nonzero entry (sparse form round-trips losslessly).
inline nlohmann::json tensor_to_json(const Tensor& t) {
    nlohmann::json entries = nlohmann::json::array();
    std::vector<int> idx(t.order(), 0);
    std::int64_t off = 0;
    do {
        const double v = t.entries()[static_cast<std::size_t>(off)];
        if (v != 0.0) {
            std::vector<int> one_based;
            for (int c : idx) one_based.push_back(c + 1);
            entries.push_back({{"index", one_based}, {"value", v}});
        }
        ++off;
    } while (next_tuple(idx, t.dim()));
    return {{"order", t.order()},
            {"dim", t.dim()},
            {"symmetric", false},
            {"entries", entries}};
}

inline nlohmann::json partition_to_json(const SubsetPartition& part) {
    std::vector<int> one_based;
    for (int i : part.members()) one_based.push_back(i + 1);
    return one_based;
}

inline nlohmann::json classify_to_json(const Tensor& t) {
    const ClassifyFlags f = classify(t);
    nlohmann::json j{{"order", t.order()},
                     {"dim", t.dim()},
                     {"nonnegative", f.nonnegative},
                     {"z_tensor", f.z_tensor},
                     {"symmetric", f.symmetric},
                     {"positive_diagonal", f.positive_diagonal},
                     {"weakly_irreducible", is_weakly_irreducible(t)}};
    try {
        j["irreducible"] = is_irreducible(t);
    } catch (const DimensionTooLargeForExhaustiveCheck&) {
        j["irreducible"] = nullptr;
    }
    if (f.z_tensor) {
        const TauEstimate tau = tau_strong_m(t);
        j["strong_m"] = tau.strong_m;
        j["tau"] = tau.value;
        j["rho_b"] = tau.rho_b;
    }
    return j;
}

inline std::string bound_method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::ETA_MAX: return "eta_max";
        case BoundMethod::PI_MIN: return "pi_min";
        case BoundMethod::R_MAX: return "r_max";
        case BoundMethod::R_MIN: return "r_min";
        case BoundMethod::REGION_SCAN: return "region_scan";
    }
    return "?";
}

inline nlohmann::json bound_to_json(const BoundReport& rep) {
    nlohmann::json j{{"value", rep.value},
                     {"kind", rep.kind == BoundKind::RHO_UPPER ? "rho_upper" : "tau_lower"},
                     {"method", bound_method_name(rep.method)}};
    if (rep.partition) j["s"] = partition_to_json(*rep.partition);
    if (rep.scanned_region) j["region"] = region_kind_name(*rep.scanned_region);
    if (!rep.components.empty()) j["components"] = rep.components;
    if (!rep.pair_terms.empty()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& p : rep.pair_terms)
            terms.push_back({{"i", p.i},
                             {"j", p.j},
                             {"discriminant", p.discriminant},
                             {"quadratic", p.quadratic},
                             {"row_cutoff", p.row_cutoff},
                             {"value", p.value}});
        j["pair_terms"] = terms;
    }
    if (rep.method == BoundMethod::REGION_SCAN) {
        j["tolerance"] = rep.tolerance;
        j["degenerate_interval"] = rep.degenerate_interval;
    }
    return j;
}

inline nlohmann::json verdict_to_json(const DefinitenessVerdict& v) {
    nlohmann::json j{{"status", definiteness_name(v.status)},
                     {"heuristic_search", v.heuristic_search}};
    if (v.certifying_S) j["certifying_s"] = partition_to_json(*v.certifying_S);
    if (!v.reason.empty()) j["reason"] = v.reason;
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& c : v.condition_trace)
        trace.push_back({{"condition", c.condition},
                         {"lhs", c.lhs},
                         {"rhs", c.rhs},
                         {"passed", c.passed}});
    j["condition_trace"] = trace;
    return j;
}

inline nlohmann::json estimate_to_json(const EigenPairEstimate& e) {
    return {{"value", e.value},
            {"lower", e.lower},
            {"upper", e.upper},
            {"residual", e.residual},
            {"iterations", e.iterations},
            {"converged", e.converged},
            {"perturbation", e.perturbation},
            {"vector", e.vector}};
}

inline nlohmann::json tau_to_json(const TauEstimate& e) {
    return {{"value", e.value},
            {"s", e.s},
            {"rho_b", e.rho_b},
            {"strong_m", e.strong_m},
            {"lower", e.lower},
            {"upper", e.upper},
            {"residual", e.residual},
            {"b_estimate", estimate_to_json(e.b_estimate)}};
}

inline nlohmann::json chain_report_to_json(const ChainReport& r) {
    nlohmann::json j{{"samples", r.samples},
                     {"violations", r.violations},
                     {"counts",
                      {{"gamma", r.count_gamma},
                       {"k", r.count_k},
                       {"ks", r.count_ks},
                       {"omega", r.count_omega},
                       {"upsilon", r.count_upsilon}}}};
    if (r.first_violation) {
        j["first_violation"] = {r.first_violation->real(), r.first_violation->imag()};
        j["first_violation_link"] = r.first_violation_link;
    }
    return j;
}

}  // namespace tloc
