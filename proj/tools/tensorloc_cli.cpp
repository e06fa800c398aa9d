// tensorloc command-line tool.
//
// Exit codes: 0 success/certified, 1 inconclusive/violation, 2 invalid
// input, 3 precondition violation.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tensorloc/bounds.hpp"
#include "tensorloc/definiteness.hpp"
#include "tensorloc/io.hpp"
#include "tensorloc/oracle.hpp"
#include "tensorloc/regions.hpp"
#include "tensorloc/tensor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPrecondition = 3;

std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw tloc::ParseError("bad index list: " + csv);
        out.push_back(v);
    }
    if (out.empty()) throw tloc::ParseError("empty index list");
    return out;
}

tloc::SubsetPartition require_partition(const tloc::Tensor& t, const std::string& s_csv) {
    if (s_csv.empty())
        throw tloc::ParseError("this command requires --s (no default subset is assumed)");
    return tloc::SubsetPartition(t.dim(), parse_index_list(s_csv));
}

std::string fmt6(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

int cmd_classify(const std::string& input) {
    const tloc::Tensor t = tloc::load_tensor(input);
    std::cout << tloc::classify_to_json(t).dump(2) << "\n";
    return kExitOk;
}

int cmd_bounds(const std::string& input, const std::string& kind_str,
               const std::string& s_csv, bool search_s) {
    const tloc::Tensor t = tloc::load_tensor(input);
    if (kind_str != "rho" && kind_str != "tau")
        throw tloc::ParseError("--kind must be rho or tau");
    const bool rho = kind_str == "rho";
    const tloc::BoundKind kind = rho ? tloc::BoundKind::RHO_UPPER : tloc::BoundKind::TAU_LOWER;

    std::optional<tloc::SubsetPartition> part;
    tloc::BoundReport sharp;
    if (search_s) {
        sharp = tloc::best_bound_over_S(
            t, rho ? tloc::BoundMethod::ETA_MAX : tloc::BoundMethod::PI_MIN);
        part = sharp.partition;
    } else {
        part = require_partition(t, s_csv);
        sharp = rho ? tloc::eta_max(t, *part) : tloc::pi_min(t, *part);
    }

    const tloc::BoundReport row_sum = rho ? tloc::r_max_bound(t) : tloc::r_min_bound(t);
    const tloc::BoundReport scan_k =
        tloc::region_scan_bound(t, tloc::RegionSpec(tloc::RegionKind::BRAUER_K), kind);
    const tloc::BoundReport scan_ks =
        tloc::region_scan_bound(t, tloc::RegionSpec(tloc::RegionKind::K_S, *part), kind);
    const tloc::BoundReport scan_omega =
        tloc::region_scan_bound(t, tloc::RegionSpec(tloc::RegionKind::OMEGA_S, *part), kind);

    nlohmann::json j;
    j["kind"] = rho ? "rho_upper" : "tau_lower";
    j["s"] = tloc::partition_to_json(*part);
    j["rows"] = nlohmann::json::array();
    auto add = [&](const std::string& name, const tloc::BoundReport& rep) {
        j["rows"].push_back({{"method", name}, {"report", tloc::bound_to_json(rep)}});
        std::cout << "  " << std::left << std::setw(18) << name << fmt6(rep.value) << "\n";
    };

    std::cout << (rho ? "upper bounds on the spectral radius"
                      : "lower bounds on the minimum H-eigenvalue")
              << ", S=" << part->to_string() << "\n";
    add(rho ? "R_max" : "R_min", row_sum);
    add("scan(K)", scan_k);
    add("scan(K^S)", scan_ks);
    add("scan(Omega^S)", scan_omega);
    add(rho ? "eta_max" : "pi_min", sharp);

    if (rho) {
        const tloc::EigenPairEstimate est = tloc::spectral_radius_nonneg(t);
        std::cout << "  " << std::left << std::setw(18) << "oracle rho"
                  << fmt6(est.value) << "  (residual " << fmt6(est.residual) << ")\n";
        j["oracle"] = tloc::estimate_to_json(est);
    } else {
        const tloc::TauEstimate est = tloc::tau_strong_m(t);
        std::cout << "  " << std::left << std::setw(18) << "oracle tau"
                  << fmt6(est.value) << "  (residual " << fmt6(est.residual) << ")\n";
        j["oracle"] = tloc::tau_to_json(est);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_pd_check(const std::string& input, const std::string& s_csv, bool search_s,
                 bool semi) {
    const tloc::Tensor t = tloc::load_tensor(input);
    tloc::DefinitenessVerdict v;
    if (search_s) {
        v = tloc::search_pd_certificate(t, semi);
    } else {
        const tloc::SubsetPartition part = require_partition(t, s_csv);
        v = semi ? tloc::check_psd(t, part) : tloc::check_pd(t, part);
    }
    std::cout << tloc::verdict_to_json(v).dump(2) << "\n";
    return v.status == tloc::Definiteness::INCONCLUSIVE ? kExitInconclusive : kExitOk;
}

int cmd_raster(const std::string& input, const std::string& sets_csv,
               const std::string& s_csv, const std::string& window_csv, int res,
               const std::string& out_dir) {
    const tloc::Tensor t = tloc::load_tensor(input);

    std::vector<tloc::RegionSpec> specs;
    std::optional<tloc::SubsetPartition> part;
    std::stringstream ss(sets_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        tloc::RegionKind kind;
        if (name == "gamma") kind = tloc::RegionKind::GAMMA;
        else if (name == "k") kind = tloc::RegionKind::BRAUER_K;
        else if (name == "ks") kind = tloc::RegionKind::K_S;
        else if (name == "omega") kind = tloc::RegionKind::OMEGA_S;
        else if (name == "upsilon") kind = tloc::RegionKind::UPSILON_S;
        else throw tloc::ParseError("unknown set name: " + name);
        if (tloc::region_kind_needs_partition(kind)) {
            if (!part) part = require_partition(t, s_csv);
            specs.emplace_back(kind, *part);
        } else {
            specs.emplace_back(kind);
        }
    }
    if (specs.empty()) throw tloc::ParseError("--sets must name at least one set");

    tloc::Window w = tloc::default_window(t);
    if (!window_csv.empty()) {
        std::vector<double> vals;
        std::stringstream ws(window_csv);
        std::string item;
        while (std::getline(ws, item, ',')) vals.push_back(std::stod(item));
        if (vals.size() != 4) throw tloc::ParseError("--window needs x0,x1,y0,y1");
        w = {vals[0], vals[1], vals[2], vals[3]};
    }

    const tloc::RasterResult result = tloc::raster(t, specs, w, res, res);
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < result.kinds.size(); ++k) {
        const std::string base =
            out_dir + "/" + tloc::region_kind_name(result.kinds[k]);
        const auto& bm = result.bitmaps[k];
        std::ofstream pgm(base + ".pgm");
        pgm << "P2\n" << res << " " << res << "\n255\n";
        std::ofstream csv(base + ".csv");
        std::int64_t lit = 0;
        for (int iy = 0; iy < res; ++iy) {
            for (int ix = 0; ix < res; ++ix) {
                const int v = bm[static_cast<std::size_t>(iy) * res + ix];
                lit += v;
                pgm << (v ? 255 : 0) << (ix + 1 == res ? "\n" : " ");
                csv << v << (ix + 1 == res ? "\n" : ",");
            }
        }
        std::cout << tloc::region_kind_name(result.kinds[k]) << ": " << lit
                  << " member cells -> " << base << ".pgm\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& s_csv,
               std::int64_t samples, std::uint64_t seed) {
    const tloc::Tensor t = tloc::load_tensor(input);
    const tloc::SubsetPartition part = require_partition(t, s_csv);
    const tloc::ChainReport rep =
        tloc::verify_inclusion_chain(t, part, samples, tloc::default_window(t), seed);
    nlohmann::json j = tloc::chain_report_to_json(rep);

    bool contained_ok = true;
    const tloc::ClassifyFlags flags = tloc::classify(t);
    auto check_eigenvalue = [&](double lambda, const char* label) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c :
             tloc::verify_eigenvalue_in_regions(t, lambda, tloc::enumerate_partitions(t.dim()))) {
            contained_ok = contained_ok && c.contained;
            checks.push_back({{"set", tloc::region_kind_name(c.kind)},
                              {"s", c.partition},
                              {"contained", c.contained}});
        }
        j[label] = {{"value", lambda}, {"checks", checks}};
    };
    if (flags.nonnegative) {
        const tloc::EigenPairEstimate est = tloc::spectral_radius_nonneg(t);
        if (est.converged) check_eigenvalue(est.value, "rho_containment");
    } else if (flags.z_tensor) {
        const tloc::TauEstimate est = tloc::tau_strong_m(t);
        if (est.b_estimate.converged && est.strong_m)
            check_eigenvalue(est.value, "tau_containment");
    }

    std::cout << j.dump(2) << "\n";
    return (rep.violations == 0 && contained_ok) ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-type eigenvalue localization sets for tensors"};
    app.require_subcommand(1);

    std::string input, kind = "rho", s_csv, sets = "gamma,k,ks,omega,upsilon";
    std::string window_csv, out_dir = ".";
    bool search_s = false, semi = false;
    int res = 400;
    std::int64_t samples = 100'000;
    std::uint64_t seed = 20240915;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "tensor JSON file")->required();
    };

    auto* classify = app.add_subcommand("classify", "structural classification report");
    add_input(classify);

    auto* bounds = app.add_subcommand("bounds", "bound comparison table");
    add_input(bounds);
    bounds->add_option("--kind", kind, "rho (upper) or tau (lower)")->required();
    bounds->add_option("--s", s_csv, "subset S, comma-separated 1-based indices");
    bounds->add_flag("--search-s", search_s, "enumerate all S, report the sharpest");

    auto* pd = app.add_subcommand("pd-check", "positive (semi-)definiteness certificate");
    add_input(pd);
    pd->add_option("--s", s_csv, "subset S");
    pd->add_flag("--search-s", search_s, "search for a certifying S");
    pd->add_flag("--semi", semi, "check semi-definiteness (non-strict)");

    auto* ras = app.add_subcommand("raster", "membership bitmaps (PGM + CSV)");
    add_input(ras);
    ras->add_option("--sets", sets, "comma list from gamma,k,ks,omega,upsilon");
    ras->add_option("--s", s_csv, "subset S");
    ras->add_option("--window", window_csv, "x0,x1,y0,y1 (default: auto)");
    ras->add_option("--res", res, "grid resolution per axis");
    ras->add_option("--out", out_dir, "output directory");

    auto* ver = app.add_subcommand("verify", "sampled inclusion-chain verification");
    add_input(ver);
    ver->add_option("--s", s_csv, "subset S");
    ver->add_option("--samples", samples, "number of sample points");
    ver->add_option("--seed", seed, "RNG seed for the random half");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (classify->parsed()) return cmd_classify(input);
        if (bounds->parsed()) return cmd_bounds(input, kind, s_csv, search_s);
        if (pd->parsed()) return cmd_pd_check(input, s_csv, search_s, semi);
        if (ras->parsed()) return cmd_raster(input, sets, s_csv, window_csv, res, out_dir);
        if (ver->parsed()) return cmd_verify(input, s_csv, samples, seed);
    } catch (const tloc::NotNonnegative& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const tloc::NotZTensor& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const tloc::PreconditionViolated& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const tloc::TensorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
