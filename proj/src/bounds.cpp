#include "rmcap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rmcap {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);
const long double kLn2l = std::log(2.0L);

void check_nr(int n, int r) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (r < 0 || r > n) throw parameter_error("need 0 <= r <= n");
}

}  // namespace

uint64_t binom_u64(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact at every step
        if (acc > ~uint64_t{0}) throw parameter_error("binom_u64 overflow");
    }
    return static_cast<uint64_t>(acc);
}

mpz_class binom_mpz(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

long double log2_binomial(uint64_t n, uint64_t k) {
    if (k > n) throw parameter_error("log2_binomial needs k <= n");
    return (std::lgamma(static_cast<long double>(n) + 1) -
            std::lgamma(static_cast<long double>(k) + 1) -
            std::lgamma(static_cast<long double>(n - k) + 1)) /
           kLn2l;
}

mpz_class ball_volume_exact(uint64_t N, uint64_t t) {
    if (t > N) throw parameter_error("ball radius t must be <= N");
    mpz_class term = 1;  // C(N, 0)
    mpz_class sum = 1;
    for (uint64_t i = 0; i < t; ++i) {
        term *= N - i;
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), i + 1);
        sum += term;
    }
    return sum;
}

long double ball_volume_log2(uint64_t N, uint64_t t) {
    if (t > N) throw parameter_error("ball radius t must be <= N");
    // Largest term is at i = min(t, N/2); anchor the log-sum-exp there.
    const long double anchor = log2_binomial(N, std::min(t, N / 2));
    long double log_term = 0;  // log2 C(N, 0)
    long double sum = 0, comp = 0;
    for (uint64_t i = 0; i <= t; ++i) {
        if (i % 4096 == 0) log_term = log2_binomial(N, i);  // reset drift
        // Kahan-compensated accumulation of 2^{log_term - anchor}.
        long double y = std::exp2(log_term - anchor) - comp;
        long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        log_term += std::log2(static_cast<long double>(N - i)) -
                    std::log2(static_cast<long double>(i + 1));
    }
    return anchor + std::log2(sum);
}

ThresholdParams threshold(double c, int n, int r) {
    check_nr(n, r);
    if (c <= 0) throw parameter_error("threshold needs c > 0");
    ThresholdParams p;
    p.c = c;
    p.n = n;
    p.r = r;
    p.coeff = binom_u64(n, r);
    p.lambda = c * std::exp2(n / 2.0) * std::sqrt(2.0 * static_cast<double>(p.coeff) * kLn2);
    p.delta = std::exp2(n - 1) - p.lambda / 2.0;
    p.t_c = static_cast<int64_t>(std::floor(p.delta));
    return p;
}

ThresholdParams threshold_with_k(double c, int n, uint64_t k_dim) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (c <= 0) throw parameter_error("threshold needs c > 0");
    if (k_dim == 0) throw parameter_error("dimension must be positive");
    ThresholdParams p;
    p.c = c;
    p.n = n;
    p.r = -1;
    p.coeff = k_dim;
    p.lambda = c * std::exp2(n / 2.0) * std::sqrt(2.0 * static_cast<double>(k_dim) * kLn2);
    p.delta = std::exp2(n - 1) - p.lambda / 2.0;
    p.t_c = static_cast<int64_t>(std::floor(p.delta));
    return p;
}

double ball_volume_asymptotic_log2(double c, int n, int r) {
    check_nr(n, r);
    if (c <= 0) throw parameter_error("ball_volume_asymptotic_log2 needs c > 0");
    const double C = static_cast<double>(binom_u64(n, r));
    return std::exp2(n) - c * c * C - std::log2(std::sqrt(kPi)) -
           std::log2(2.0 * c * std::sqrt(C * kLn2));
}

double chernoff_intersection_bound(double s, uint64_t wt_g, double lambda, int n) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (s < 0) throw parameter_error("chernoff parameter s must be >= 0");
    const double len = std::exp2(n);
    if (static_cast<double>(wt_g) > len)
        throw parameter_error("wt_g exceeds the word length 2^n");
    return std::exp(2.0 * s * s * (len - static_cast<double>(wt_g)) - 2.0 * s * lambda);
}

double close_case_bound(double c, int n, int r) {
    check_nr(n, r);
    if (c <= 0) throw parameter_error("close_case_bound needs c > 0");
    const double C = static_cast<double>(binom_u64(n, r));
    return std::exp2(-2.0 * c * c * (C - 1.0));
}

double far_case_bound(double c, int r, int n) {
    if (r == 0)
        throw parameter_error("far_case_bound is undefined at r = 0 (denominator 1 - 2^{-r} vanishes)");
    check_nr(n, r);
    if (c <= 0) throw parameter_error("far_case_bound needs c > 0");
    const double C = static_cast<double>(binom_u64(n, r));
    return std::exp2(-c * c * C / (1.0 - std::exp2(-r)));
}

Theorem1Certificate theorem1_certificate(double c, int n, int r, double alpha) {
    if (r < 1) throw parameter_error("certificate needs r >= 1");
    check_nr(n, r);
    if (c <= 1) throw parameter_error("certificate needs c > 1");
    const double cap = std::exp2(-r) * c * c / (1.0 - std::exp2(-r));
    if (!(alpha > 0 && alpha < cap))
        throw parameter_error("alpha must lie in (0, 2^{-r} c^2 / (1 - 2^{-r}))");

    Theorem1Certificate cert;
    const double C = static_cast<double>(binom_u64(n, r));
    cert.e_left = -C * c * c + 2.0 * c * c;
    cert.e_right = C * (alpha - cap);

    // Both exponents are linear in C(n,r) with negative slope, so the first
    // n where both are <= -1 is where C(n,r) clears both corner values.
    const double need = std::max((2.0 * c * c + 1.0) / (c * c), 1.0 / (cap - alpha));
    int m = r;
    while (static_cast<double>(binom_u64(m, r)) < need) ++m;
    cert.first_n_both_le_minus1 = m;
    return cert;
}

double binomial_tail_bound(uint64_t n_half, uint64_t k) {
    if (k > n_half) throw parameter_error("tail bound needs k <= n_half");
    const double m = static_cast<double>(n_half);
    const double d = m - static_cast<double>(k);
    return 2.0 * m - d * d / (m * kLn2);
}

double central_binomial_estimate(uint64_t n_half, uint64_t k) {
    const double m = static_cast<double>(n_half);
    const double d = std::abs(m - static_cast<double>(k));
    if (d > std::pow(m, 0.625))
        throw parameter_error("k outside the central window |n_half - k| <= n_half^{5/8}");
    return 2.0 * m - 0.5 * std::log2(kPi * m) - d * d / (m * kLn2);
}

double optimality_ratio(int n, uint64_t k_dim, uint64_t t) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (k_dim == 0) throw parameter_error("dimension must be positive");
    const double len = std::exp2(n);
    if (static_cast<double>(t) > len / 2.0)
        throw parameter_error("optimality ratio needs t <= 2^{n-1}");
    return (len - 2.0 * static_cast<double>(t)) /
           std::sqrt(len * static_cast<double>(k_dim) * 2.0 * kLn2);
}

}  // namespace rmcap
