#include "rmcap/capability.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include <omp.h>

#include "rmcap/bounds.hpp"
#include "rmcap/errors.hpp"
#include "rmcap/gf2_linalg.hpp"

namespace rmcap {

namespace {

constexpr uint64_t kPackSentinel = ~uint64_t{0};
constexpr int kMaxProfileN = 5;     // 2^{2^n} <= 2^32
constexpr int kMaxCosetBits = 26;   // coset table memory guard

// Reverses the low `bits` bits of v.  Truth-table order treats position 0
// as most significant, so reversed-value comparison == lexicographic order.
uint32_t rev_bits(uint32_t v, int bits) {
    v = ((v >> 1) & 0x55555555u) | ((v & 0x55555555u) << 1);
    v = ((v >> 2) & 0x33333333u) | ((v & 0x33333333u) << 2);
    v = ((v >> 4) & 0x0F0F0F0Fu) | ((v & 0x0F0F0F0Fu) << 4);
    v = ((v >> 8) & 0x00FF00FFu) | ((v & 0x00FF00FFu) << 8);
    v = (v >> 16) | (v << 16);
    return v >> (32 - bits);
}

// (weight, lex-key) packed so that uint64 min picks the lightest word and
// breaks ties toward the lexicographically smallest one.
uint64_t pack_leader(uint32_t wt, uint32_t word, int bits) {
    return (uint64_t{wt} << 32) | rev_bits(word, bits);
}

struct ScanSetup {
    int syndrome_bits = 0;
    std::vector<uint32_t> checks;  // parity-check rows, packed
};

ScanSetup profile_setup(const RMCode& code) {
    if (code.n > kMaxProfileN)
        throw resource_error("exact profile limited to n <= 5 (full 2^{2^n} scan)");
    const int syn_bits = static_cast<int>(code.length) - code.k;
    if (syn_bits > kMaxCosetBits)
        throw resource_error("coset table limited to 2^26 entries, code needs 2^" +
                             std::to_string(syn_bits));

    ScanSetup setup;
    setup.syndrome_bits = syn_bits;
    Gf2Basis basis(code.generators);
    assert(basis.rank() == static_cast<size_t>(code.k));
    for (const Word& h : basis.dual_basis())
        setup.checks.push_back(static_cast<uint32_t>(h.limbs()[0]));
    assert(setup.checks.size() == static_cast<size_t>(syn_bits));
    return setup;
}

uint32_t syndrome_of(uint32_t w, const std::vector<uint32_t>& checks) {
    uint32_t s = 0;
    for (size_t j = 0; j < checks.size(); ++j)
        s |= static_cast<uint32_t>(std::popcount(w & checks[j]) & 1) << j;
    return s;
}

// Scan of words [begin, end) into a leader table indexed by syndrome.
void scan_range(uint64_t begin, uint64_t end, const std::vector<uint32_t>& checks,
                int word_bits, std::vector<uint64_t>& table) {
    for (uint64_t wi = begin; wi < end; ++wi) {
        const uint32_t w = static_cast<uint32_t>(wi);
        const uint32_t s = syndrome_of(w, checks);
        const uint32_t wt = static_cast<uint32_t>(std::popcount(w));
        const uint64_t cur = table[s];
        if (wt < (cur >> 32)) {
            table[s] = pack_leader(wt, w, word_bits);
        } else if (wt == (cur >> 32)) {
            const uint32_t key = rev_bits(w, word_bits);
            if (key < static_cast<uint32_t>(cur)) table[s] = (uint64_t{wt} << 32) | key;
        }
    }
}

CapabilityProfile finalize_profile(const RMCode& code,
                                   const std::vector<uint64_t>& table) {
    CapabilityProfile p;
    p.n = code.n;
    p.r = code.r;
    p.k = code.k;
    p.length = code.length;
    p.num_cosets = table.size();
    p.t_c = (code.d_min - 1) / 2;
    p.total.assign(code.length + 1, 0);
    p.correctable.assign(code.length + 1, 0);
    for (uint64_t t = 0; t <= code.length; ++t) p.total[t] = binom_u64(code.length, t);
    for (uint64_t pack : table) {
        const uint64_t wt = pack >> 32;
        ++p.correctable[wt];
        p.covering_radius = std::max(p.covering_radius, wt);
    }
    return p;
}

}  // namespace

ErrorClass classify_error_generic(const Word& e, const RMCode& code) {
    if (code.k > 28)
        throw resource_error("generic classification limited to k <= 28");
    const uint64_t we = e.weight();
    bool tied = false;
    CodewordStream s(code);
    for (s.next(); !s.done(); s.next()) {  // skip the zero codeword
        const uint64_t w = distance(e, s.word());
        if (w < we) return ErrorClass::kNotLeader;
        if (w == we) tied = true;
    }
    return tied ? ErrorClass::kAmbiguousLeader : ErrorClass::kUnambiguousLeader;
}

ErrorClass classify_error_r1(const Word& e, std::vector<int32_t>& scratch) {
    const uint64_t len = e.size();
    scratch.resize(len);
    word_signs(e, scratch.data());
    walsh_transform_signs(scratch.data(), e.n());

    const int32_t f0 = scratch[0];
    int32_t max_abs = 0;
    for (uint64_t a = 1; a < len; ++a)
        max_abs = std::max(max_abs, scratch[a] < 0 ? -scratch[a] : scratch[a]);

    if (f0 > 0 && f0 > max_abs) return ErrorClass::kUnambiguousLeader;
    if (f0 >= 0 && f0 >= max_abs) return ErrorClass::kAmbiguousLeader;
    return ErrorClass::kNotLeader;
}

ErrorClass classify_error(const Word& e, const RMCode& code) {
    if (e.n() != code.n)
        throw parameter_error("error word length does not match the code");
    if (code.r == 1) {
        std::vector<int32_t> scratch;
        return classify_error_r1(e, scratch);
    }
    return classify_error_generic(e, code);
}

CapabilityProfile exact_capability_profile_serial(const RMCode& code) {
    const ScanSetup setup = profile_setup(code);
    std::vector<uint64_t> table(uint64_t{1} << setup.syndrome_bits, kPackSentinel);
    scan_range(0, uint64_t{1} << code.length, setup.checks,
               static_cast<int>(code.length), table);
    return finalize_profile(code, table);
}

CapabilityProfile exact_capability_profile(const RMCode& code, int threads) {
    const ScanSetup setup = profile_setup(code);
    const uint64_t space = uint64_t{1} << code.length;
    const uint64_t n_syn = uint64_t{1} << setup.syndrome_bits;
    const int word_bits = static_cast<int>(code.length);
    const int nt = threads > 0 ? threads : omp_get_max_threads();

    std::vector<uint64_t> table(n_syn, kPackSentinel);
#pragma omp parallel num_threads(nt)
    {
        // Private leader table per worker; merging below is a plain
        // element-wise min, so the result is partition-independent.
        std::vector<uint64_t> local(n_syn, kPackSentinel);
        const int tid = omp_get_thread_num();
        const int total_threads = omp_get_num_threads();
        const uint64_t chunk = (space + total_threads - 1) / total_threads;
        const uint64_t begin = std::min(space, chunk * static_cast<uint64_t>(tid));
        const uint64_t end = std::min(space, begin + chunk);
        scan_range(begin, end, setup.checks, word_bits, local);
#pragma omp critical
        {
            for (uint64_t s = 0; s < n_syn; ++s)
                table[s] = std::min(table[s], local[s]);
        }
    }
    return finalize_profile(code, table);
}

mpq_class CapabilityProfile::epsilon(uint64_t t) const {
    if (t >= total.size())
        throw parameter_error("epsilon(t) needs t <= 2^n");
    mpq_class q(correctable[t], total[t]);
    q.canonicalize();
    return q;
}

MonotonicityReport check_monotonicity(const CapabilityProfile& profile) {
    MonotonicityReport report;
    const uint64_t N = profile.length;
    for (uint64_t t = 0; t < N; ++t) {
        const mpq_class cur = profile.epsilon(t);
        const mpq_class next = profile.epsilon(t + 1);
        const bool strict_range = t >= profile.t_c && t <= profile.covering_radius;
        if (next > cur || (strict_range && next == cur)) {
            report.pass = false;
            report.first_violation_t = static_cast<int64_t>(t);
            break;
        }
    }
    return report;
}

mpq_class epsilon_upper_bound(const RMCode& code, uint64_t t) {
    if (t > code.length)
        throw parameter_error("epsilon_upper_bound needs t <= 2^n");
    mpz_class leaders = 1;
    mpz_mul_2exp(leaders.get_mpz_t(), leaders.get_mpz_t(),
                 code.length - static_cast<uint64_t>(code.k));
    mpq_class bound(leaders, ball_volume_exact(code.length, t));
    bound.canonicalize();
    return bound;
}

}  // namespace rmcap
