#include <doctest.h>

#include <bit>
#include <map>
#include <set>
#include <vector>

#include "rmcap/gf2_linalg.hpp"
#include "rmcap/rm_code.hpp"
#include "rmcap/rng.hpp"

using rmcap::build_rm;
using rmcap::RMCode;
using rmcap::Word;

namespace {

std::map<uint64_t, uint64_t> dist_map(const rmcap::WeightDistribution& d) {
    std::map<uint64_t, uint64_t> m;
    for (uint64_t w = 0; w < d.counts.size(); ++w)
        if (d.counts[w]) m[w] = d.counts[w];
    return m;
}

}  // namespace

TEST_CASE("code parameters") {
    const RMCode a = build_rm(3, 1);
    CHECK(a.k == 4);
    CHECK(a.d_min == 4);
    CHECK(a.length == 8);

    const RMCode b = build_rm(4, 2);
    CHECK(b.k == 11);
    CHECK(b.d_min == 4);

    const RMCode c = build_rm(5, 5);
    CHECK(c.k == 32);
    CHECK(c.d_min == 1);

    CHECK_THROWS_AS(build_rm(3, 4), rmcap::parameter_error);
    CHECK_THROWS_AS(build_rm(3, -1), rmcap::parameter_error);
    CHECK_THROWS_AS(build_rm(0, 0), rmcap::parameter_error);
    CHECK_THROWS_AS(build_rm(29, 1), rmcap::parameter_error);
}

TEST_CASE("generators come in degree-then-lex order") {
    const RMCode code = build_rm(3, 2);
    // Masks pack x_i as bit n-i: x1=100, x2=010, x3=001.
    const std::vector<uint32_t> expected = {0, 4, 2, 1, 6, 5, 3};
    CHECK(code.monomial_masks == expected);

    // Constant row is all ones, x1 is the high half.
    CHECK(code.generators[0].truth_table() == "11111111");
    CHECK(code.generators[1].truth_table() == "00001111");
    CHECK(code.generators[3].truth_table() == "01010101");
    CHECK(code.generators[4].truth_table() == "00000011");
}

TEST_CASE("RM(1,1) is the whole length-2 space") {
    const RMCode code = build_rm(1, 1);
    std::set<std::string> words;
    for (rmcap::CodewordStream s(code); !s.done(); s.next())
        words.insert(s.word().truth_table());
    CHECK(words == std::set<std::string>{"00", "01", "10", "11"});
}

TEST_CASE("codeword stream yields 2^k distinct words starting at zero") {
    const RMCode code = build_rm(3, 1);
    std::set<std::string> seen;
    rmcap::CodewordStream s(code);
    CHECK(s.word().weight() == 0);
    for (; !s.done(); s.next()) seen.insert(s.word().truth_table());
    CHECK(seen.size() == 16);
}

TEST_CASE("gray walk agrees with direct encoding") {
    const RMCode code = build_rm(4, 2);
    uint64_t index = 0;
    for (rmcap::CodewordStream s(code); !s.done(); s.next(), ++index) {
        const uint64_t message = index ^ (index >> 1);
        CHECK(s.word() == rmcap::encode(code, message));
    }
    CHECK(index == uint64_t{1} << 11);
}

TEST_CASE("weight distributions of small codes") {
    using M = std::map<uint64_t, uint64_t>;
    CHECK(dist_map(rmcap::weight_distribution(build_rm(3, 1))) ==
          M{{0, 1}, {4, 14}, {8, 1}});
    CHECK(dist_map(rmcap::weight_distribution(build_rm(2, 2))) ==
          M{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}});
    CHECK(dist_map(rmcap::weight_distribution(build_rm(4, 1))) ==
          M{{0, 1}, {8, 30}, {16, 1}});
}

TEST_CASE("RM(4,2) weights from an independent re-encoding") {
    const RMCode code = build_rm(4, 2);
    std::vector<uint64_t> counts(17, 0);
    for (uint64_t m = 0; m < (uint64_t{1} << code.k); ++m)
        ++counts[rmcap::encode(code, m).weight()];

    const auto dist = rmcap::weight_distribution(code);
    CHECK(dist.counts == counts);

    std::set<uint64_t> weights;
    for (uint64_t w = 0; w < counts.size(); ++w)
        if (counts[w]) weights.insert(w);
    CHECK(weights == std::set<uint64_t>{0, 4, 6, 8, 10, 12, 16});
}

TEST_CASE("distribution totals and symmetry") {
    for (auto [n, r] : {std::pair{3, 1}, {4, 2}, {4, 3}, {5, 1}}) {
        const RMCode code = build_rm(n, r);
        const auto dist = rmcap::weight_distribution(code);
        CHECK(dist.total() == uint64_t{1} << code.k);
        CHECK(dist.counts[0] == 1);
        for (uint64_t w = 0; w <= code.length; ++w)
            CHECK(dist.counts[w] == dist.counts[code.length - w]);
    }
}

TEST_CASE("every nonzero codeword clears the minimum distance") {
    for (auto [n, r] : {std::pair{3, 1}, {4, 2}, {4, 3}, {5, 2}}) {
        const RMCode code = build_rm(n, r);
        rmcap::CodewordStream s(code);
        for (s.next(); !s.done(); s.next())
            CHECK(s.word().weight() >= code.d_min);
    }
}

TEST_CASE("xor of codewords stays in the code") {
    const RMCode code = build_rm(5, 2);
    const rmcap::Gf2Basis basis(code.generators);
    CHECK(basis.rank() == static_cast<size_t>(code.k));

    rmcap::SplitMix64 rng(99);
    const uint64_t count = uint64_t{1} << code.k;
    for (int i = 0; i < 1000; ++i) {
        const Word a = rmcap::encode(code, rng.next_below(count));
        const Word b = rmcap::encode(code, rng.next_below(count));
        CHECK(basis.contains(a ^ b));
    }
    CHECK_FALSE(basis.contains(Word::from_truth_table(
        "10000000000000000000000000000001")));
}

TEST_CASE("dual basis rows are parity checks") {
    for (auto [n, r] : {std::pair{3, 1}, {4, 2}, {5, 4}}) {
        const RMCode code = build_rm(n, r);
        const rmcap::Gf2Basis basis(code.generators);
        const auto dual = basis.dual_basis();
        CHECK(dual.size() == code.length - static_cast<uint64_t>(code.k));
        for (const Word& h : dual) {
            for (const Word& g : code.generators) {
                uint64_t dot = 0;
                for (size_t i = 0; i < h.limbs().size(); ++i)
                    dot += std::popcount(h.limbs()[i] & g.limbs()[i]);
                CHECK(dot % 2 == 0);
            }
        }
        CHECK(rmcap::Gf2Basis(dual).rank() == dual.size());
    }
}

TEST_CASE("count of codewords far from balanced weight") {
    CHECK(rmcap::count_far_codewords(build_rm(3, 1)) == 2);
    CHECK(rmcap::count_far_codewords(build_rm(4, 1)) == 2);

    // Whole-space codes checked against a direct filter over all words.
    for (int n = 1; n <= 4; ++n) {
        const RMCode code = build_rm(n, n);
        const uint64_t N = code.length;
        const uint64_t half = N / 2;
        uint64_t direct = 0;
        for (uint64_t w = 0; w < (uint64_t{1} << N); ++w) {
            const uint64_t wt = std::popcount(w);
            const uint64_t dev = wt > half ? wt - half : half - wt;
            if (dev >= half) ++direct;  // C(n,n) = 1
        }
        CHECK(rmcap::count_far_codewords(code) == direct);
    }
}

TEST_CASE("enumeration guards reject huge dimensions") {
    const RMCode code = build_rm(5, 5);  // k = 32
    CHECK_THROWS_AS(rmcap::CodewordStream{code}, rmcap::resource_error);
    CHECK_THROWS_AS(rmcap::weight_distribution(code), rmcap::resource_error);
    CHECK_THROWS_AS(rmcap::count_far_codewords(code), rmcap::resource_error);
}
