#pragma once

#include <cstdint>
#include <vector>

#include "rmcap/word.hpp"

namespace rmcap {

// The Reed-Muller code RM(n,r): truth tables of all n-variable Boolean
// functions of algebraic degree <= r.  Length 2^n, dimension
// k = sum_{i<=r} C(n,i), minimum distance 2^{n-r}.
struct RMCode {
    int n = 0;
    int r = 0;
    int k = 0;
    uint64_t length = 0;  // 2^n
    uint64_t d_min = 0;   // 2^{n-r}

    // Generator rows: evaluation vectors of the monomials prod_{i in S} x_i,
    // |S| <= r, degree-ascending and lexicographic within a degree.
    std::vector<Word> generators;

    // Variable set of each generator row, packed so that variable x_i is
    // bit n-i (aligned with the evaluation-point index bits).
    std::vector<uint32_t> monomial_masks;
};

// Requires 1 <= n <= 28 and 0 <= r <= n.
RMCode build_rm(int n, int r);

// Streams the 2^k codewords in Gray-code order over the message index:
// word(i) = sum of generators selected by i ^ (i >> 1), so consecutive
// words differ by a single generator row.  Starts at the zero word.
// Guard: k <= 28.
class CodewordStream {
  public:
    explicit CodewordStream(const RMCode& code, uint64_t start_index = 0);

    bool done() const { return index_ >= count_; }
    uint64_t index() const { return index_; }
    const Word& word() const { return current_; }

    void next();

  private:
    const RMCode* code_;
    uint64_t index_;
    uint64_t count_;
    Word current_;
};

// Codeword for an explicit message vector (bit i selects generator i).
Word encode(const RMCode& code, uint64_t message);

struct WeightDistribution {
    // counts[w] = number of codewords of weight w, w in [0, 2^n].
    std::vector<uint64_t> counts;

    uint64_t total() const;
};

// Exact distribution by full enumeration.  Guard: k <= 28.
WeightDistribution weight_distribution(const RMCode& code);

// Number of codewords g with |wt(g) - 2^{n-1}| >= 2^{n-1} / C(n,r).
// The threshold is rational; the comparison is done exactly as
// |wt - 2^{n-1}| * C(n,r) >= 2^{n-1}.  Guard: k <= 28.
uint64_t count_far_codewords(const RMCode& code);

}  // namespace rmcap
