#include "rmcap/io.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace rmcap {

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string weights_csv(const WeightDistribution& dist) {
    std::string out = "weight,count\n";
    for (uint64_t w = 0; w < dist.counts.size(); ++w) {
        if (dist.counts[w] == 0) continue;
        out += std::to_string(w);
        out += ',';
        out += std::to_string(dist.counts[w]);
        out += '\n';
    }
    return out;
}

std::string profile_csv(const CapabilityProfile& profile) {
    std::string out = "t,total_words,correctable,epsilon_num,epsilon_den\n";
    for (uint64_t t = 0; t < profile.total.size(); ++t) {
        out += std::to_string(t);
        out += ',';
        out += std::to_string(profile.total[t]);
        out += ',';
        out += std::to_string(profile.correctable[t]);
        out += ',';
        out += std::to_string(profile.correctable[t]);
        out += ',';
        out += std::to_string(profile.total[t]);
        out += '\n';
    }
    return out;
}

std::string profile_summary_json(const CapabilityProfile& profile) {
    nlohmann::ordered_json j;
    j["covering_radius"] = profile.covering_radius;
    j["t_C"] = profile.t_c;
    nlohmann::ordered_json census = nlohmann::ordered_json::object();
    for (uint64_t t = 0; t < profile.correctable.size(); ++t)
        if (profile.correctable[t] != 0)
            census[std::to_string(t)] = profile.correctable[t];
    j["leader_weight_census"] = census;
    return j.dump();
}

std::string code_info_json(const RMCode& code) {
    nlohmann::ordered_json j;
    j["n"] = code.n;
    j["r"] = code.r;
    j["k"] = code.k;
    j["d_min"] = code.d_min;
    j["length"] = code.length;
    return j.dump();
}

std::string mc_csv(const std::vector<SweepRow>& rows) {
    std::string out = "n,r,c,t,trials,successes,fraction,ci_low,ci_high,seed\n";
    for (const SweepRow& row : rows) {
        const McEstimate& e = row.estimate;
        out += std::to_string(e.n);
        out += ',';
        out += std::to_string(e.r);
        out += ',';
        if (!std::isnan(row.c)) out += format_sig12(row.c);
        out += ',';
        out += std::to_string(e.t);
        out += ',';
        out += std::to_string(e.trials);
        out += ',';
        out += std::to_string(e.successes);
        out += ',';
        out += format_sig12(e.fraction);
        out += ',';
        out += format_sig12(e.ci_low);
        out += ',';
        out += format_sig12(e.ci_high);
        out += ',';
        out += std::to_string(e.seed);
        out += '\n';
    }
    return out;
}

}  // namespace rmcap
