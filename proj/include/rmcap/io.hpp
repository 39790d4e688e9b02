#pragma once

#include <string>
#include <vector>

#include "rmcap/capability.hpp"
#include "rmcap/montecarlo.hpp"
#include "rmcap/rm_code.hpp"

namespace rmcap {

// 12-significant-digit formatting ('.' decimal separator, no locale).
// All floating-point CSV fields go through this.
std::string format_sig12(double v);

// weight,count rows (nonzero counts only).
std::string weights_csv(const WeightDistribution& dist);

// t,total_words,correctable,epsilon_num,epsilon_den rows for every t.
// The rational is emitted unreduced as correctable/total.
std::string profile_csv(const CapabilityProfile& profile);

// {covering_radius, t_C, leader_weight_census}
std::string profile_summary_json(const CapabilityProfile& profile);

// {n, r, k, d_min, length}
std::string code_info_json(const RMCode& code);

// n,r,c,t,trials,successes,fraction,ci_low,ci_high,seed rows.
// c is left empty for rows with no associated threshold parameter (NaN).
std::string mc_csv(const std::vector<SweepRow>& rows);

}  // namespace rmcap
