#include "rmcap/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include <omp.h>

#include "rmcap/bounds.hpp"
#include "rmcap/errors.hpp"

namespace rmcap {

namespace {

constexpr double kZ95 = 1.959963984540054;

// Above this the dense index array is not worth materializing per trial.
constexpr uint64_t kDenseLimit = uint64_t{1} << 22;

void check_power_of_two(uint64_t N) {
    if (N < 2 || (N & (N - 1)) != 0)
        throw parameter_error("word length must be a power of two >= 2");
}

int resolve_threads(int threads) {
    return threads > 0 ? threads : omp_get_max_threads();
}

// One classification worker: reusable sampling and Walsh scratch.
struct TrialContext {
    Word word;
    detail::SampleScratch scratch;
    std::vector<int32_t> wht;

    explicit TrialContext(int n) : word(n) {}
};

bool run_trial(const RMCode& code, uint64_t t, uint64_t seed, uint64_t index,
               TrialContext& ctx) {
    SplitMix64 rng = substream(seed, index);
    detail::sample_word_into(ctx.word, code.length, t, rng, ctx.scratch);
    const ErrorClass cls = code.r == 1
                               ? classify_error_r1(ctx.word, ctx.wht)
                               : classify_error_generic(ctx.word, code);
    return cls == ErrorClass::kUnambiguousLeader;
}

void check_estimate_args(const RMCode& code, uint64_t t, uint64_t trials) {
    if (trials == 0) throw parameter_error("trials must be >= 1");
    if (t > code.length) throw parameter_error("weight t must be <= 2^n");
    if (code.r != 1 && code.k > 28)
        throw resource_error("no feasible classifier: r != 1 and k > 28");
}

McEstimate make_estimate(const RMCode& code, uint64_t t, uint64_t trials,
                         uint64_t successes, uint64_t seed) {
    McEstimate est;
    est.n = code.n;
    est.r = code.r;
    est.t = t;
    est.trials = trials;
    est.successes = successes;
    est.fraction = static_cast<double>(successes) / static_cast<double>(trials);
    std::tie(est.ci_low, est.ci_high) = wilson_interval(successes, trials);
    est.seed = seed;
    return est;
}

}  // namespace

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) throw parameter_error("Wilson interval needs trials >= 1");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half =
        kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace detail {

void sample_word_into(Word& w, uint64_t N, uint64_t t, SplitMix64& stream,
                      SampleScratch& scratch, bool force_sparse) {
    check_power_of_two(N);
    if (w.size() != N) throw parameter_error("sample target word has wrong length");
    if (t > N) throw parameter_error("weight t must be <= N");

    // Selecting min(t, N-t) positions keeps the pass short on heavy words.
    const bool complement = t > N - t;
    const uint64_t m = complement ? N - t : t;
    if (complement) {
        w.fill_ones();
    } else {
        w.clear();
    }

    if (N <= kDenseLimit && !force_sparse) {
        auto& idx = scratch.dense;
        idx.resize(N);
        std::iota(idx.begin(), idx.end(), 0u);
        for (uint64_t j = 0; j < m; ++j) {
            const uint64_t u = j + stream.next_below(N - j);
            std::swap(idx[j], idx[u]);
            w.flip_bit(idx[j]);
        }
    } else {
        // Virtual Fisher-Yates: only displaced entries are stored, with the
        // same swap sequence (and therefore the same output) as above.
        auto& moved = scratch.sparse;
        moved.clear();
        auto lookup = [&moved](uint64_t i) {
            auto it = moved.find(i);
            return it == moved.end() ? i : it->second;
        };
        for (uint64_t j = 0; j < m; ++j) {
            const uint64_t u = j + stream.next_below(N - j);
            const uint64_t pick = lookup(u);
            moved[u] = lookup(j);
            w.flip_bit(pick);
        }
    }
}

}  // namespace detail

Word sample_word_of_weight(uint64_t N, uint64_t t, SplitMix64& stream) {
    check_power_of_two(N);
    Word w(std::countr_zero(N));
    detail::SampleScratch scratch;
    detail::sample_word_into(w, N, t, stream, scratch);
    return w;
}

McEstimate estimate_correctable_fraction(const RMCode& code, uint64_t t,
                                         uint64_t trials, uint64_t seed,
                                         int threads) {
    check_estimate_args(code, t, trials);
    const int nt = resolve_threads(threads);
    uint64_t successes = 0;
#pragma omp parallel num_threads(nt) reduction(+ : successes)
    {
        TrialContext ctx(code.n);
#pragma omp for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(trials); ++i)
            successes += run_trial(code, t, seed, static_cast<uint64_t>(i), ctx);
    }
    return make_estimate(code, t, trials, successes, seed);
}

McEstimate estimate_correctable_fraction_serial(const RMCode& code, uint64_t t,
                                                uint64_t trials, uint64_t seed) {
    check_estimate_args(code, t, trials);
    TrialContext ctx(code.n);
    uint64_t successes = 0;
    for (uint64_t i = 0; i < trials; ++i)
        successes += run_trial(code, t, seed, i, ctx);
    return make_estimate(code, t, trials, successes, seed);
}

McEstimate estimate_ball_fraction(const RMCode& code, uint64_t t_max,
                                  uint64_t trials, uint64_t seed, int threads) {
    check_estimate_args(code, t_max, trials);

    // Cumulative shell weights of the ball, normalized to the top shell.
    std::vector<long double> cdf(t_max + 1);
    {
        const long double anchor = log2_binomial(code.length, std::min(t_max, code.length / 2));
        long double acc = 0;
        for (uint64_t i = 0; i <= t_max; ++i) {
            acc += std::exp2(log2_binomial(code.length, i) - anchor);
            cdf[i] = acc;
        }
    }
    const long double total = cdf.back();

    const int nt = resolve_threads(threads);
    uint64_t successes = 0;
#pragma omp parallel num_threads(nt) reduction(+ : successes)
    {
        TrialContext ctx(code.n);
#pragma omp for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(trials); ++i) {
            SplitMix64 rng = substream(seed, static_cast<uint64_t>(i));
            const long double u =
                static_cast<long double>(rng.next()) * 0x1p-64L * total;
            const uint64_t t = static_cast<uint64_t>(
                std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            detail::sample_word_into(ctx.word, code.length, t, rng, ctx.scratch);
            const ErrorClass cls = code.r == 1
                                       ? classify_error_r1(ctx.word, ctx.wht)
                                       : classify_error_generic(ctx.word, code);
            successes += cls == ErrorClass::kUnambiguousLeader;
        }
    }
    return make_estimate(code, t_max, trials, successes, seed);
}

std::vector<SweepRow> threshold_sweep(const RMCode& code,
                                      std::vector<double> c_values,
                                      uint64_t trials, uint64_t seed,
                                      int threads) {
    if (c_values.empty()) throw parameter_error("sweep needs at least one c");
    std::sort(c_values.begin(), c_values.end(), std::greater<>());

    std::vector<SweepRow> rows;
    rows.reserve(c_values.size());
    for (double c : c_values) {
        const ThresholdParams p = threshold(c, code.n, code.r);
        // Weights below 0 cannot occur; clamp (the zero word always decodes).
        const uint64_t t = p.t_c < 0 ? 0 : std::min<uint64_t>(p.t_c, code.length);
        rows.push_back({c, p.t_c,
                        estimate_correctable_fraction(code, t, trials, seed, threads)});
    }
    return rows;
}

}  // namespace rmcap
