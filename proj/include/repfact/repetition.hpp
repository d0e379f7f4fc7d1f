#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "repfact/word.hpp"

namespace repfact {

/// All periods of w: every p with 1 <= p <= |w| and w[i] = w[i+p] wherever
/// both sides exist. |w| itself is always a period. Rejects empty words.
std::set<std::size_t> periods(const Word& w);

/// True iff the smallest period p of w satisfies 2p <= |w|.
/// Rejects empty words.
bool is_repetition(const Word& w);

/// Bulk repetition predicate: at(i, n) is true iff w[i..i+n-1] is a
/// repetition. Built in O(|w| * max_block) time by extending each suffix
/// shift of w with a right-to-left longest-common-extension sweep, then
/// taking running maxima of the per-shift reach p + lce_p(i).
class RepetitionTable {
public:
    /// Full table over all factors (max_block = |w|).
    explicit RepetitionTable(const Word& w);

    /// Table restricted to blocks of length <= max_block; queries above the
    /// cap are rejected. Used by bulk drivers that never look at long blocks.
    RepetitionTable(const Word& w, std::size_t max_block);

    std::size_t word_length() const { return len_; }
    std::size_t max_block() const { return max_block_; }

    /// Requires i + n <= word_length() and n <= max_block().
    bool at(std::size_t i, std::size_t n) const;

    /// Length of the longest repetition factor found within the cap
    /// (0 if none). With a full table this is exact for the whole word.
    std::size_t longest_repetition() const { return longest_; }

private:
    void build(const Word& w);

    std::size_t len_ = 0;
    std::size_t max_block_ = 0;
    std::size_t row_width_ = 0;
    std::size_t longest_ = 0;
    std::vector<bool> bits_;
};

} // namespace repfact
