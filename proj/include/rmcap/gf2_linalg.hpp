#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmcap/word.hpp"

namespace rmcap {

// Row space of a set of Words, kept in reduced row-echelon form over GF(2).
// Pivot positions follow truth-table order (position 0 first).
class Gf2Basis {
  public:
    explicit Gf2Basis(const std::vector<Word>& rows);

    size_t rank() const { return rows_.size(); }
    const std::vector<Word>& rows() const { return rows_; }
    const std::vector<uint64_t>& pivots() const { return pivots_; }

    // Membership in the row space (reduces w against the basis).
    bool contains(const Word& w) const;

    // Basis of the dual space: length - rank() independent rows h with
    // <h, g> = 0 for every g in the row space.  Used as parity checks.
    std::vector<Word> dual_basis() const;

  private:
    std::vector<Word> rows_;
    std::vector<uint64_t> pivots_;  // ascending
};

}  // namespace rmcap
