#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "rmcap/rng.hpp"
#include "rmcap/word.hpp"

using rmcap::Word;

namespace {

// O(4^n) double sum, the reference the fast butterfly must reproduce.
std::vector<int64_t> walsh_naive(const Word& w) {
    const uint64_t N = w.size();
    std::vector<int64_t> F(N);
    for (uint64_t a = 0; a < N; ++a) {
        int64_t sum = 0;
        for (uint64_t x = 0; x < N; ++x) {
            const int par = (static_cast<int>(w.bit(x)) + std::popcount(a & x)) & 1;
            sum += par ? -1 : 1;
        }
        F[a] = sum;
    }
    return F;
}

Word random_word(int n, rmcap::SplitMix64& rng) {
    Word w(n);
    for (auto& limb : w.limbs()) limb = rng.next();
    if (w.size() < 64) w.limbs()[0] &= (uint64_t{1} << w.size()) - 1;
    return w;
}

}  // namespace

TEST_CASE("weight of packed words") {
    CHECK(Word(3).weight() == 0);
    CHECK(Word::all_ones(3).weight() == 8);
    CHECK(Word::from_truth_table("10110000").weight() == 3);
    CHECK(Word::all_ones(8).weight() == 256);
}

TEST_CASE("hamming distance") {
    const Word w = Word::from_truth_table("10110000");
    CHECK(rmcap::distance(w, w) == 0);

    Word comp = w ^ Word::all_ones(3);
    CHECK(rmcap::distance(w, comp) == 8);

    CHECK(rmcap::distance(Word::from_truth_table("10110000"),
                          Word::from_truth_table("00110001")) == 2);

    CHECK_THROWS_AS(rmcap::distance(Word(3), Word(4)), rmcap::parameter_error);
}

TEST_CASE("distance equals weight of xor") {
    rmcap::SplitMix64 rng(7);
    for (int n : {1, 3, 6, 9}) {
        for (int i = 0; i < 50; ++i) {
            const Word a = random_word(n, rng);
            const Word b = random_word(n, rng);
            CHECK(rmcap::distance(a, b) == (a ^ b).weight());
        }
    }
}

TEST_CASE("truth table round trip") {
    const std::string s = "0100110100101101";
    CHECK(Word::from_truth_table(s).truth_table() == s);
    CHECK_THROWS_AS(Word::from_truth_table("010"), rmcap::parameter_error);
    CHECK_THROWS_AS(Word::from_truth_table("01x0"), rmcap::parameter_error);
}

TEST_CASE("words compare like their truth-table strings") {
    // Position 0 is the most significant: "0100..." sorts before "1000...".
    const Word a = Word::from_truth_table("01000000");
    const Word b = Word::from_truth_table("10000000");
    CHECK(a < b);
    CHECK(Word::from_truth_table("00110001") < Word::from_truth_table("10110000"));

    rmcap::SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Word x = random_word(4, rng);
        const Word y = random_word(4, rng);
        CHECK((x < y) == (x.truth_table() < y.truth_table()));
    }
}

TEST_CASE("walsh transform of simple functions") {
    const auto zero = rmcap::walsh_transform(Word(2));
    CHECK(zero.coeff == std::vector<int32_t>{4, 0, 0, 0});

    // x1*x2 as a truth table.
    const auto spec = rmcap::walsh_transform(Word::from_truth_table("0001"));
    CHECK(spec.coeff == std::vector<int32_t>{2, 2, 2, -2});
}

TEST_CASE("walsh transform matches the naive double sum") {
    rmcap::SplitMix64 rng(123);
    for (int n = 1; n <= 10; ++n) {
        const Word w = random_word(n, rng);
        const auto fast = rmcap::walsh_transform(w);
        const auto slow = walsh_naive(w);
        REQUIRE(fast.coeff.size() == slow.size());
        for (size_t a = 0; a < slow.size(); ++a) CHECK(fast.coeff[a] == slow[a]);
    }
    // One larger instance.
    const Word w12 = random_word(12, rng);
    const auto fast = rmcap::walsh_transform(w12);
    const auto slow = walsh_naive(w12);
    CHECK(std::equal(slow.begin(), slow.end(), fast.coeff.begin()));
}

TEST_CASE("walsh spectrum invariants") {
    rmcap::SplitMix64 rng(321);
    for (int n : {1, 2, 4, 6, 8, 10}) {
        const Word w = random_word(n, rng);
        const auto spec = rmcap::walsh_transform(w);

        // Parseval: sum F(a)^2 = 2^{2n}.
        uint64_t sum_sq = 0;
        for (int32_t f : spec.coeff)
            sum_sq += static_cast<uint64_t>(static_cast<int64_t>(f) * f);
        CHECK(sum_sq == uint64_t{1} << (2 * n));

        // F(0) = 2^n - 2 wt(w), and every coefficient is even.
        CHECK(spec.coeff[0] ==
              static_cast<int64_t>(w.size()) - 2 * static_cast<int64_t>(w.weight()));
        for (int32_t f : spec.coeff) CHECK((f & 1) == 0);
    }
}
