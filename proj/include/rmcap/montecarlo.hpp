#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rmcap/capability.hpp"
#include "rmcap/rm_code.hpp"
#include "rmcap/rng.hpp"
#include "rmcap/word.hpp"

namespace rmcap {

// Monte Carlo estimate of the fraction of weight-t words that decode
// unambiguously (strictly unique nearest codeword).
struct McEstimate {
    int n = 0;
    int r = 0;
    uint64_t t = 0;
    uint64_t trials = 0;
    uint64_t successes = 0;
    double fraction = 0;
    double ci_low = 0;   // 95% Wilson interval
    double ci_high = 0;
    uint64_t seed = 0;
};

// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

// Uniform word of weight t out of the C(N,t) candidates, by partial
// Fisher-Yates selection of t positions (of N-t cleared positions when
// t > N/2).  N must be a power of two >= 2.
Word sample_word_of_weight(uint64_t N, uint64_t t, SplitMix64& stream);

// Per-trial substreams derived from (seed, trial index), so runs agree
// bit-for-bit for every worker count.  trials must be >= 1.  Classification
// uses the Walsh fast path for r = 1 codes and the generic scan otherwise
// (which requires k <= 28).
McEstimate estimate_correctable_fraction(const RMCode& code, uint64_t t,
                                         uint64_t trials, uint64_t seed,
                                         int threads = 0);

// Single-threaded reference implementation of the same estimate.
McEstimate estimate_correctable_fraction_serial(const RMCode& code, uint64_t t,
                                                uint64_t trials, uint64_t seed);

// Ball-conditioned variant: the weight of each trial word is drawn from
// P(t) proportional to C(N,t) restricted to [0, t_max], i.e. words uniform
// over the ball of radius t_max.  The reported t is t_max.
McEstimate estimate_ball_fraction(const RMCode& code, uint64_t t_max,
                                  uint64_t trials, uint64_t seed,
                                  int threads = 0);

struct SweepRow {
    double c = 0;
    int64_t t_c = 0;  // floor(delta), before clamping to [0, 2^n]
    McEstimate estimate;
};

// For each c, estimates the unambiguous fraction at weight t_c(c).
// Rows come back sorted by c descending (t ascending).
std::vector<SweepRow> threshold_sweep(const RMCode& code,
                                      std::vector<double> c_values,
                                      uint64_t trials, uint64_t seed,
                                      int threads = 0);

namespace detail {

struct SampleScratch {
    std::vector<uint32_t> dense;
    std::unordered_map<uint64_t, uint64_t> sparse;
};

// Shared implementation; force_sparse exists so tests can pin the sparse
// path against the dense one on small N.
void sample_word_into(Word& w, uint64_t N, uint64_t t, SplitMix64& stream,
                      SampleScratch& scratch, bool force_sparse = false);

}  // namespace detail

}  // namespace rmcap
