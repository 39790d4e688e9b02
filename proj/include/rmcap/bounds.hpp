#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "rmcap/errors.hpp"

namespace rmcap {

// Exact C(n,k) for results that fit in 64 bits (n <= 64 always does).
uint64_t binom_u64(uint64_t n, uint64_t k);

mpz_class binom_mpz(uint64_t n, uint64_t k);

// log2 C(n,k) through lgammal; accurate to ~1e-15 relative.
long double log2_binomial(uint64_t n, uint64_t k);

// Exact ball volume sum_{i<=t} C(N,i).  Intended for N up to ~2^24;
// above that use ball_volume_log2.
mpz_class ball_volume_exact(uint64_t N, uint64_t t);

// log2 of the ball volume by compensated log-domain summation
// (80-bit extended precision); error well under 1e-9 in log2.
long double ball_volume_log2(uint64_t N, uint64_t t);

// Correctability threshold: lambda = c * 2^{n/2} * sqrt(2 C(n,r) ln 2),
// delta = 2^{n-1} - lambda/2, t_c = floor(delta).  Above delta (c < 1)
// almost no error is correctable, below it (c > 1) almost all are.
struct ThresholdParams {
    double c = 0;
    int n = 0;
    int r = -1;           // -1 when an explicit dimension was supplied
    uint64_t coeff = 0;   // C(n,r), or the explicit k
    double lambda = 0;
    double delta = 0;
    int64_t t_c = 0;      // floor(delta); may be negative for large c
};

ThresholdParams threshold(double c, int n, int r);

// Variant with an explicit dimension k in place of C(n,r).
ThresholdParams threshold_with_k(double c, int n, uint64_t k_dim);

// log2 of the closed-form ball volume estimate at radius delta(c):
// 2^n - c^2 C(n,r) - log2(sqrt(pi)) - log2(2c sqrt(C(n,r) ln 2)).
// Subtract 2^n for the probability form.
double ball_volume_asymptotic_log2(double c, int n, int r);

// exp(2 s^2 (2^n - wt_g) - 2 s lambda): upper bound on the probability
// that a random word lands within delta of both 0 and a codeword of
// weight wt_g.  Requires s >= 0.
double chernoff_intersection_bound(double s, uint64_t wt_g, double lambda, int n);

// Per-codeword bound 2^{-2 c^2 (C(n,r) - 1)} for codewords with
// |wt(g) - 2^{n-1}| <= 2^{n-1}/C(n,r).
double close_case_bound(double c, int n, int r);

// Per-codeword bound 2^{-c^2 C(n,r)/(1 - 2^{-r})} for codewords of weight
// >= 2^{n-r}.  Degenerates at r = 0, which is rejected.
double far_case_bound(double c, int r, int n);

// The two union-bound exponents that must both diverge to -infinity:
//   e_left  = -C(n,r) c^2 + 2 c^2
//   e_right = C(n,r) (alpha - 2^{-r} c^2 / (1 - 2^{-r}))
// Requires c > 1, r >= 1 and 0 < alpha < 2^{-r} c^2 / (1 - 2^{-r}).
struct Theorem1Certificate {
    double e_left = 0;
    double e_right = 0;
    int first_n_both_le_minus1 = 0;  // smallest n with both exponents <= -1
};

Theorem1Certificate theorem1_certificate(double c, int n, int r, double alpha);

// log2 of the tail bound sum_{i<=k} C(2m,i) < 2^{2m} exp(-(m-k)^2/m),
// with m = n_half.  Requires k <= n_half.
double binomial_tail_bound(uint64_t n_half, uint64_t k);

// log2 of the central estimate C(2m,k) ~ 2^{2m}/sqrt(pi m) * exp(-(m-k)^2/m).
// Valid for |m - k| <= m^{5/8}.
double central_binomial_estimate(uint64_t n_half, uint64_t k);

// (2^n - 2t) / sqrt(2^n k ln 4); tends to 1 along code sequences whose
// capability threshold t is asymptotically optimal.  Requires t <= 2^{n-1}.
double optimality_ratio(int n, uint64_t k_dim, uint64_t t);

}  // namespace rmcap
