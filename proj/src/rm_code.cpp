#include "rmcap/rm_code.hpp"

#include <bit>
#include <string>

#include "rmcap/errors.hpp"

namespace rmcap {

namespace {

constexpr int kMaxEnumK = 28;

void check_enum_guard(const RMCode& code) {
    if (code.k > kMaxEnumK)
        throw resource_error("codeword enumeration limited to k <= 28, code has k = " +
                             std::to_string(code.k));
}

// Appends the masks of all degree-d monomials in lexicographic order of
// their variable tuples (i_1 < ... < i_d, variables numbered 1..n).
void append_degree(int n, int d, std::vector<uint32_t>& masks) {
    std::vector<int> vars(d);
    for (int i = 0; i < d; ++i) vars[i] = i + 1;
    for (;;) {
        uint32_t mask = 0;
        for (int v : vars) mask |= uint32_t{1} << (n - v);
        masks.push_back(mask);
        // next combination
        int j = d - 1;
        while (j >= 0 && vars[j] == n - (d - 1 - j)) --j;
        if (j < 0) break;
        ++vars[j];
        for (int l = j + 1; l < d; ++l) vars[l] = vars[l - 1] + 1;
    }
}

}  // namespace

RMCode build_rm(int n, int r) {
    if (n < 1 || n > 28)
        throw parameter_error("RM code needs n in [1, 28], got " + std::to_string(n));
    if (r < 0 || r > n)
        throw parameter_error("RM code needs 0 <= r <= n, got r = " + std::to_string(r));

    RMCode code;
    code.n = n;
    code.r = r;
    code.length = uint64_t{1} << n;
    code.d_min = uint64_t{1} << (n - r);

    code.monomial_masks.push_back(0);  // constant monomial
    for (int d = 1; d <= r; ++d) append_degree(n, d, code.monomial_masks);
    code.k = static_cast<int>(code.monomial_masks.size());

    code.generators.reserve(code.k);
    for (uint32_t mask : code.monomial_masks) {
        Word g(n);
        for (uint64_t x = 0; x < code.length; ++x)
            if ((x & mask) == mask) g.set_bit(x, true);
        code.generators.push_back(std::move(g));
    }
    return code;
}

Word encode(const RMCode& code, uint64_t message) {
    Word w(code.n);
    for (int i = 0; i < code.k; ++i)
        if ((message >> i) & 1) w ^= code.generators[i];
    return w;
}

CodewordStream::CodewordStream(const RMCode& code, uint64_t start_index)
    : code_(&code), index_(start_index), count_(uint64_t{1} << code.k),
      current_(code.n) {
    check_enum_guard(code);
    if (start_index > count_)
        throw parameter_error("codeword start index out of range");
    if (!done()) current_ = encode(code, index_ ^ (index_ >> 1));
}

void CodewordStream::next() {
    ++index_;
    if (done()) return;
    // Gray codes of index_-1 and index_ differ exactly in bit ctz(index_).
    current_ ^= code_->generators[std::countr_zero(index_)];
}

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (uint64_t c : counts) t += c;
    return t;
}

WeightDistribution weight_distribution(const RMCode& code) {
    check_enum_guard(code);
    WeightDistribution dist;
    dist.counts.assign(code.length + 1, 0);
    for (CodewordStream s(code); !s.done(); s.next())
        ++dist.counts[s.word().weight()];
    return dist;
}

uint64_t count_far_codewords(const RMCode& code) {
    // C(n,r) fits easily in 64 bits for n <= 28.
    uint64_t binom = 1;
    for (int i = 1; i <= code.r; ++i)
        binom = binom * static_cast<uint64_t>(code.n - i + 1) / static_cast<uint64_t>(i);

    const uint64_t half = code.length / 2;
    const WeightDistribution dist = weight_distribution(code);
    uint64_t count = 0;
    for (uint64_t w = 0; w < dist.counts.size(); ++w) {
        uint64_t dev = w > half ? w - half : half - w;
        if (dev * binom >= half) count += dist.counts[w];
    }
    return count;
}

}  // namespace rmcap
