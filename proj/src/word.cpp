#include "rmcap/word.hpp"

#include <bit>

namespace rmcap {

namespace {

constexpr int kMaxN = 28;

void check_n(int n) {
    if (n < 1 || n > kMaxN)
        throw parameter_error("word length exponent n must be in [1, 28], got " +
                              std::to_string(n));
}

}  // namespace

Word::Word(int n) : n_(n) {
    check_n(n);
    limbs_.assign(((uint64_t{1} << n) + 63) / 64, 0);
}

Word Word::all_ones(int n) {
    Word w(n);
    w.fill_ones();
    return w;
}

void Word::fill_ones() {
    for (auto& limb : limbs_) limb = ~uint64_t{0};
    // Mask the tail when 2^n < 64 (only n < 6).
    uint64_t bits = size();
    if (bits % 64 != 0) limbs_.back() &= (uint64_t{1} << (bits % 64)) - 1;
}

Word Word::from_truth_table(std::string_view s) {
    uint64_t len = s.size();
    if (len < 2 || (len & (len - 1)) != 0)
        throw parameter_error("truth table length must be a power of two >= 2");
    int n = std::countr_zero(len);
    Word w(n);
    for (uint64_t x = 0; x < len; ++x) {
        char c = s[x];
        if (c == '1')
            w.set_bit(x, true);
        else if (c != '0')
            throw parameter_error("truth table may contain only '0' and '1'");
    }
    return w;
}

uint64_t Word::weight() const {
    uint64_t w = 0;
    for (uint64_t limb : limbs_) w += std::popcount(limb);
    return w;
}

Word& Word::operator^=(const Word& other) {
    if (n_ != other.n_) throw parameter_error("XOR of words of different length");
    for (size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
    return *this;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (n_ != other.n_) return n_ <=> other.n_;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t d = limbs_[i] ^ other.limbs_[i];
        if (d) {
            // Lowest differing position decides; '0' sorts before '1'.
            int p = std::countr_zero(d);
            return ((limbs_[i] >> p) & 1) ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::string Word::truth_table() const {
    std::string s(size(), '0');
    for (uint64_t x = 0; x < size(); ++x)
        if (bit(x)) s[x] = '1';
    return s;
}

void Word::clear() {
    for (auto& limb : limbs_) limb = 0;
}

uint64_t distance(const Word& a, const Word& b) {
    if (a.n() != b.n())
        throw parameter_error("distance of words of different length");
    uint64_t d = 0;
    const auto& la = a.limbs();
    const auto& lb = b.limbs();
    for (size_t i = 0; i < la.size(); ++i) d += std::popcount(la[i] ^ lb[i]);
    return d;
}

void word_signs(const Word& w, int32_t* buf) {
    const uint64_t len = w.size();
    for (uint64_t x = 0; x < len; ++x) buf[x] = w.bit(x) ? -1 : 1;
}

void walsh_transform_signs(int32_t* data, int n) {
    const uint64_t len = uint64_t{1} << n;
    for (uint64_t h = 1; h < len; h <<= 1) {
        for (uint64_t i = 0; i < len; i += 2 * h) {
            for (uint64_t j = i; j < i + h; ++j) {
                int32_t u = data[j];
                int32_t v = data[j + h];
                data[j] = u + v;
                data[j + h] = u - v;
            }
        }
    }
}

WalshSpectrum walsh_transform(const Word& w) {
    if (w.n() > kMaxN)
        throw resource_error("walsh_transform limited to n <= 28");
    WalshSpectrum s;
    s.n = w.n();
    s.coeff.resize(w.size());
    word_signs(w, s.coeff.data());
    walsh_transform_signs(s.coeff.data(), w.n());
    return s;
}

}  // namespace rmcap
