#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "rmcap/rm_code.hpp"
#include "rmcap/word.hpp"

namespace rmcap {

// Position of an error word inside its coset under maximum-likelihood
// (nearest codeword) decoding.
enum class ErrorClass {
    kUnambiguousLeader,  // strictly lighter than every other coset member
    kAmbiguousLeader,    // minimum weight, but shared with another member
    kNotLeader,          // some coset member is strictly lighter
};

// Generic path: scans all 2^k nonzero codewords.  Guard: k <= 28.
ErrorClass classify_error_generic(const Word& e, const RMCode& code);

// First-order fast path via the Walsh spectrum.  The code must be RM(n,1);
// e is an unambiguous leader iff F(0) > 0 and F(0) > |F(a)| for all a != 0,
// an ambiguous leader iff the maximum is attained with equality, and not a
// leader otherwise.  scratch must have size 2^n and is clobbered.
ErrorClass classify_error_r1(const Word& e, std::vector<int32_t>& scratch);

// Dispatches to the r = 1 fast path when available, else the generic scan.
ErrorClass classify_error(const Word& e, const RMCode& code);

// Exact per-weight capability census of a code, from a scan of the whole
// space F_2^{2^n} partitioned into cosets by syndrome.  In every coset the
// lexicographically smallest minimum-weight word is the chosen leader.
struct CapabilityProfile {
    int n = 0;
    int r = 0;
    int k = 0;
    uint64_t length = 0;      // N = 2^n
    uint64_t num_cosets = 0;  // 2^{N-k}
    uint64_t covering_radius = 0;
    uint64_t t_c = 0;  // floor((d_min - 1) / 2)

    std::vector<uint64_t> total;        // total[t] = C(N, t)
    std::vector<uint64_t> correctable;  // chosen leaders of weight t

    // epsilon(t) = correctable[t] / total[t], exact.
    mpq_class epsilon(uint64_t t) const;
};

// Full-space scan; guards: n <= 5 (so 2^{2^n} <= 2^32) and 2^{N-k} <= 2^26
// for the coset table.  threads = 0 means the OpenMP default.
CapabilityProfile exact_capability_profile(const RMCode& code, int threads = 0);

// Single-threaded reference implementation of the same scan.
CapabilityProfile exact_capability_profile_serial(const RMCode& code);

struct MonotonicityReport {
    bool pass = true;
    // First t with epsilon(t+1) > epsilon(t), or with equality inside the
    // strict range [t_c, covering_radius]; -1 if none.
    int64_t first_violation_t = -1;
};

// epsilon must be non-increasing everywhere and strictly decreasing
// between half the minimum distance and the covering radius.
MonotonicityReport check_monotonicity(const CapabilityProfile& profile);

// 2^{2^n - k} / sum_{i<=t} C(2^n, i): every epsilon(t) obeys this, because
// correctable words of weight <= t number at most all coset leaders.
mpq_class epsilon_upper_bound(const RMCode& code, uint64_t t);

}  // namespace rmcap
