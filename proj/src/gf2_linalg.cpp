#include "rmcap/gf2_linalg.hpp"

#include <algorithm>
#include <bit>

namespace rmcap {

namespace {

// Lowest set position, or nullopt for the zero word.
std::optional<uint64_t> first_set(const Word& w) {
    const auto& limbs = w.limbs();
    for (size_t i = 0; i < limbs.size(); ++i)
        if (limbs[i]) return i * 64 + std::countr_zero(limbs[i]);
    return std::nullopt;
}

}  // namespace

Gf2Basis::Gf2Basis(const std::vector<Word>& input) {
    for (const Word& r : input) {
        Word w = r;
        // Eliminate against existing pivots, insert if independent.
        for (size_t j = 0; j < rows_.size(); ++j)
            if (w.bit(pivots_[j])) w ^= rows_[j];
        auto p = first_set(w);
        if (!p) continue;
        // Clear the new pivot column in earlier rows (keeps RREF).
        for (size_t j = 0; j < rows_.size(); ++j)
            if (rows_[j].bit(*p)) rows_[j] ^= w;
        rows_.push_back(std::move(w));
        pivots_.push_back(*p);
    }
    // Sort rows by pivot position.
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Word> rows;
    std::vector<uint64_t> pivots;
    rows.reserve(rows_.size());
    pivots.reserve(rows_.size());
    for (size_t i : order) {
        rows.push_back(std::move(rows_[i]));
        pivots.push_back(pivots_[i]);
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
}

bool Gf2Basis::contains(const Word& w) const {
    Word x = w;
    for (size_t j = 0; j < rows_.size(); ++j)
        if (x.bit(pivots_[j])) x ^= rows_[j];
    return first_set(x) == std::nullopt;
}

std::vector<Word> Gf2Basis::dual_basis() const {
    std::vector<Word> dual;
    if (rows_.empty()) return dual;
    const int n = rows_[0].n();
    const uint64_t len = rows_[0].size();
    std::vector<bool> is_pivot(len, false);
    for (uint64_t p : pivots_) is_pivot[p] = true;
    dual.reserve(len - rows_.size());
    for (uint64_t f = 0; f < len; ++f) {
        if (is_pivot[f]) continue;
        // h has a 1 at the free position f and copies column f of the
        // reduced rows at their pivot positions; then <h, row_j> =
        // row_j[f] + row_j[f] = 0.
        Word h(n);
        h.set_bit(f, true);
        for (size_t j = 0; j < rows_.size(); ++j)
            if (rows_[j].bit(f)) h.set_bit(pivots_[j], true);
        dual.push_back(std::move(h));
    }
    return dual;
}

}  // namespace rmcap
