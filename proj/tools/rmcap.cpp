// Command-line frontend: code construction, exact capability profiles,
// Monte Carlo threshold experiments and closed-form bound evaluation,
// with reproducible CSV/JSON outputs.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmcap/bounds.hpp"
#include "rmcap/capability.hpp"
#include "rmcap/errors.hpp"
#include "rmcap/io.hpp"
#include "rmcap/montecarlo.hpp"
#include "rmcap/rm_code.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 0x5EED5EEDull;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rmcap::parameter_error("cannot open output file: " + path);
    out << content;
}

double default_alpha(double c, int r) {
    const double cap = std::exp2(-r) * c * c / (1.0 - std::exp2(-r));
    return 0.5 * cap;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Muller code correctability toolkit"};
    app.require_subcommand(1);

    int n = 0, r = 0, threads = 0;
    double c = 0, c_min = 0, c_max = 0, c_step = 0, alpha = 0;
    int64_t t_opt = -1;
    uint64_t trials = 0, seed = kDefaultSeed;
    uint64_t big_n = 0, big_t = 0;
    bool ball = false, exact_volume = false;
    std::string out_path, format = "csv";

    // code ------------------------------------------------------------
    auto* code_cmd = app.add_subcommand("code", "code parameters and weights");
    code_cmd->require_subcommand(1);

    auto* info = code_cmd->add_subcommand("info", "emit n,r,k,d_min,length as JSON");
    info->add_option("--n", n, "number of variables")->required();
    info->add_option("--r", r, "order")->required();
    info->add_option("--out", out_path, "output path (default stdout)");
    info->callback([&] {
        write_output(out_path, rmcap::code_info_json(rmcap::build_rm(n, r)) + "\n");
    });

    auto* weights = code_cmd->add_subcommand("weights", "exact weight distribution as CSV");
    weights->add_option("--n", n)->required();
    weights->add_option("--r", r)->required();
    weights->add_option("--out", out_path);
    weights->callback([&] {
        write_output(out_path,
                     rmcap::weights_csv(rmcap::weight_distribution(rmcap::build_rm(n, r))));
    });

    // capability --------------------------------------------------------
    auto* cap_cmd = app.add_subcommand("capability", "exact and Monte Carlo capability");
    cap_cmd->require_subcommand(1);

    auto* cap_exact = cap_cmd->add_subcommand("exact", "full-space coset scan");
    cap_exact->add_option("--n", n)->required();
    cap_exact->add_option("--r", r)->required();
    cap_exact->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cap_exact->add_option("--threads", threads, "worker cap (0 = default)");
    cap_exact->add_option("--out", out_path);
    cap_exact->callback([&] {
        const auto profile =
            rmcap::exact_capability_profile(rmcap::build_rm(n, r), threads);
        write_output(out_path, format == "json"
                                   ? rmcap::profile_summary_json(profile) + "\n"
                                   : rmcap::profile_csv(profile));
    });

    auto* cap_mc = cap_cmd->add_subcommand("mc", "Monte Carlo fraction at one weight");
    cap_mc->add_option("--n", n)->required();
    cap_mc->add_option("--r", r)->required();
    auto* mc_c = cap_mc->add_option("--c", c, "threshold parameter; sets t = t_c");
    auto* mc_t = cap_mc->add_option("--t", t_opt, "explicit weight");
    cap_mc->add_option("--trials", trials)->required();
    cap_mc->add_option("--seed", seed, "64-bit seed (default 0x5EED5EED)");
    cap_mc->add_option("--threads", threads);
    cap_mc->add_flag("--ball", ball, "condition on the ball of radius t instead of the shell");
    cap_mc->add_option("--out", out_path);
    cap_mc->callback([&] {
        if (mc_c->count() + mc_t->count() != 1)
            throw rmcap::parameter_error("give exactly one of --c and --t");
        const auto code = rmcap::build_rm(n, r);
        rmcap::SweepRow row;
        uint64_t t = 0;
        if (mc_c->count()) {
            const auto p = rmcap::threshold(c, n, r);
            row.c = c;
            row.t_c = p.t_c;
            t = p.t_c < 0 ? 0 : std::min<uint64_t>(p.t_c, code.length);
        } else {
            if (t_opt < 0 || static_cast<uint64_t>(t_opt) > code.length)
                throw rmcap::parameter_error("weight t out of range");
            row.c = std::numeric_limits<double>::quiet_NaN();
            row.t_c = t_opt;
            t = static_cast<uint64_t>(t_opt);
        }
        row.estimate =
            ball ? rmcap::estimate_ball_fraction(code, t, trials, seed, threads)
                 : rmcap::estimate_correctable_fraction(code, t, trials, seed, threads);
        write_output(out_path, rmcap::mc_csv({row}));
    });

    auto* cap_sweep = cap_cmd->add_subcommand("sweep", "Monte Carlo fractions over a c range");
    cap_sweep->add_option("--n", n)->required();
    cap_sweep->add_option("--r", r)->required();
    cap_sweep->add_option("--c-min", c_min)->required();
    cap_sweep->add_option("--c-max", c_max)->required();
    cap_sweep->add_option("--c-step", c_step)->required();
    cap_sweep->add_option("--trials", trials)->required();
    cap_sweep->add_option("--seed", seed);
    cap_sweep->add_option("--threads", threads);
    cap_sweep->add_option("--out", out_path);
    cap_sweep->callback([&] {
        if (c_step <= 0 || c_min <= 0 || c_max < c_min)
            throw rmcap::parameter_error("need 0 < c-min <= c-max and c-step > 0");
        std::vector<double> cs;
        for (double v = c_min; v <= c_max + 1e-12; v += c_step) cs.push_back(v);
        const auto rows =
            rmcap::threshold_sweep(rmcap::build_rm(n, r), cs, trials, seed, threads);
        write_output(out_path, rmcap::mc_csv(rows));
    });

    // bounds ------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form thresholds and volumes");
    bounds_cmd->require_subcommand(1);

    auto* beval = bounds_cmd->add_subcommand("eval", "threshold + volume snapshot as JSON");
    beval->add_option("--n", n)->required();
    beval->add_option("--r", r)->required();
    beval->add_option("--c", c)->required();
    auto* beval_alpha = beval->add_option("--alpha", alpha, "union-bound split (default half the cap)");
    beval->add_option("--out", out_path);
    beval->callback([&] {
        const auto p = rmcap::threshold(c, n, r);
        nlohmann::ordered_json j;
        j["c"] = p.c;
        j["n"] = p.n;
        j["r"] = p.r;
        j["lambda"] = p.lambda;
        j["delta"] = p.delta;
        j["t_c"] = p.t_c;
        if (p.t_c >= 0) {
            j["log2_vol_exact"] = static_cast<double>(
                rmcap::ball_volume_log2(uint64_t{1} << n, static_cast<uint64_t>(p.t_c)));
            j["log2_vol_asymptotic"] = rmcap::ball_volume_asymptotic_log2(c, n, r);
        } else {
            j["log2_vol_exact"] = nullptr;
            j["log2_vol_asymptotic"] = nullptr;
        }
        if (c > 1 && r >= 1) {
            const double a = beval_alpha->count() ? alpha : default_alpha(c, r);
            const auto cert = rmcap::theorem1_certificate(c, n, r, a);
            j["e_left"] = cert.e_left;
            j["e_right"] = cert.e_right;
        } else {
            j["e_left"] = nullptr;
            j["e_right"] = nullptr;
        }
        write_output(out_path, j.dump() + "\n");
    });

    auto* bcert = bounds_cmd->add_subcommand("certificate", "union-bound exponents as JSON");
    bcert->add_option("--c", c)->required();
    bcert->add_option("--n", n)->required();
    bcert->add_option("--r", r)->required();
    auto* bcert_alpha = bcert->add_option("--alpha", alpha);
    bcert->add_option("--out", out_path);
    bcert->callback([&] {
        const double a = bcert_alpha->count() ? alpha : default_alpha(c, r);
        const auto cert = rmcap::theorem1_certificate(c, n, r, a);
        nlohmann::ordered_json j;
        j["c"] = c;
        j["n"] = n;
        j["r"] = r;
        j["alpha"] = a;
        j["e_left"] = cert.e_left;
        j["e_right"] = cert.e_right;
        j["first_n_both_le_minus1"] = cert.first_n_both_le_minus1;
        write_output(out_path, j.dump() + "\n");
    });

    auto* bvol = bounds_cmd->add_subcommand("volume", "Hamming ball volume as JSON");
    bvol->add_option("--N", big_n, "word length")->required();
    bvol->add_option("--t", big_t, "radius")->required();
    bvol->add_flag("--exact", exact_volume, "include the exact decimal value");
    bvol->add_option("--out", out_path);
    bvol->callback([&] {
        nlohmann::ordered_json j;
        j["N"] = big_n;
        j["t"] = big_t;
        j["log2"] = static_cast<double>(rmcap::ball_volume_log2(big_n, big_t));
        if (exact_volume) {
            if (big_n > (uint64_t{1} << 24))
                throw rmcap::resource_error("exact volume limited to N <= 2^24");
            j["exact"] = rmcap::ball_volume_exact(big_n, big_t).get_str();
        }
        write_output(out_path, j.dump() + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    } catch (const rmcap::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const rmcap::resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource guard: allocation failed\n";
        return 3;
    }
    return 0;
}
