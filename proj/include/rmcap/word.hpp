#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmcap/errors.hpp"

namespace rmcap {

// Binary vector of length 2^n, i.e. the truth table of a Boolean function
// on n variables.  Bit x holds the value at the point whose coordinates
// (x_1..x_n) are the binary digits of x with x_1 most significant.
//
// Packed 64 positions per limb; position x lives in limb x/64, bit x%64.
class Word {
  public:
    Word() = default;

    // Zero word of length 2^n.  Requires 1 <= n <= 28.
    explicit Word(int n);

    static Word all_ones(int n);

    // Parses a '0'/'1' string of length 2^n (position 0 first).
    static Word from_truth_table(std::string_view s);

    int n() const { return n_; }
    uint64_t size() const { return uint64_t{1} << n_; }

    bool bit(uint64_t x) const {
        return (limbs_[x >> 6] >> (x & 63)) & 1;
    }
    void set_bit(uint64_t x, bool v) {
        uint64_t mask = uint64_t{1} << (x & 63);
        if (v)
            limbs_[x >> 6] |= mask;
        else
            limbs_[x >> 6] &= ~mask;
    }
    void flip_bit(uint64_t x) { limbs_[x >> 6] ^= uint64_t{1} << (x & 63); }

    uint64_t weight() const;

    Word& operator^=(const Word& other);
    Word operator^(const Word& other) const {
        Word w = *this;
        w ^= other;
        return w;
    }

    bool operator==(const Word&) const = default;

    // Truth-table order: position 0 is the most significant, so Words
    // compare like their '0'/'1' strings.  This is the tie-breaking order
    // used when picking coset leaders.
    std::strong_ordering operator<=>(const Word& other) const;

    std::string truth_table() const;

    const std::vector<uint64_t>& limbs() const { return limbs_; }
    std::vector<uint64_t>& limbs() { return limbs_; }

    void clear();      // reset all bits to 0, keep length
    void fill_ones();  // set all bits to 1, keep length

  private:
    int n_ = 0;
    std::vector<uint64_t> limbs_;
};

// Hamming distance; throws parameter_error if lengths differ.
uint64_t distance(const Word& a, const Word& b);

// Integer spectrum F(a) = sum_x (-1)^{w(x) + a.x}, a = 0 .. 2^n - 1.
// F(0) = 2^n - 2*weight(w), sum_a F(a)^2 = 2^{2n}, every F(a) even for n >= 1.
struct WalshSpectrum {
    int n = 0;
    std::vector<int32_t> coeff;
};

// Fast transform, O(n 2^n).  Guard: n <= 28 (the spectrum alone is 2^n ints).
WalshSpectrum walsh_transform(const Word& w);

// In-place butterfly on a caller-provided buffer of size 2^n that already
// holds the +/-1 signs of the word.  Hot-loop form used by the samplers.
void walsh_transform_signs(int32_t* data, int n);

// Fills buf with (-1)^{w(x)} signs; buf must have size 2^n.
void word_signs(const Word& w, int32_t* buf);

}  // namespace rmcap
