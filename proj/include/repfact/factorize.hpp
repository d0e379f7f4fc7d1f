#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "repfact/bigint.hpp"
#include "repfact/repetition.hpp"
#include "repfact/word.hpp"

namespace repfact {

/// A repetition factorization of a word, stored as its cut positions
/// 0 = cuts[0] < cuts[1] < ... < cuts[width] = |w|. Every block
/// w[cuts[s]..cuts[s+1]-1] is a repetition.
struct Factorization {
    std::vector<std::size_t> cuts;
    std::size_t width() const { return cuts.empty() ? 0 : cuts.size() - 1; }
};

/// Width summary of a word: shortest width sw, longest width lw, exact
/// count of distinct factorizations per width, and their sum. sw = lw = 0
/// exactly when no repetition factorization exists.
struct WidthProfile {
    std::size_t sw = 0;
    std::size_t lw = 0;
    std::map<std::size_t, BigInt> counts;
    BigInt total = 0;
    bool unique = false; // total == 1
};

/// Full profile of w by dynamic programming over its RepetitionTable.
/// Counts are exact big integers. Rejects empty words.
WidthProfile width_profile(const Word& w);

/// A witness of width sw(w), or nullopt when sw(w) = 0. Among all
/// minimum-width factorizations the lexicographically smallest cut
/// sequence is returned, so output is deterministic.
std::optional<Factorization> shortest_factorization(const Word& w);

/// Same contract with maximum width.
std::optional<Factorization> longest_factorization(const Word& w);

/// True iff w has two repetition factorizations whose first blocks have
/// different lengths.
bool two_first_term_factorizations(const Word& w);

/// Shortest/longest width tables for all factors of one word, sharing a
/// single RepetitionTable. sw(i, n) = 0 means w[i..i+n-1] has no
/// factorization (n = 0 included). Rows for distinct i are computed
/// concurrently; results are deterministic.
class FactorWidths {
public:
    struct Options {
        std::size_t max_len = 0;   // longest factor profiled; 0 means |w|
        std::size_t width_cap = 0; // sw values above this clamp to cap+1; 0 = off
        bool longest = false;      // also compute lw
        bool totals = false;       // also count factorizations (exact)
    };

    FactorWidths(const Word& w, Options opt);

    std::size_t word_length() const { return len_; }
    std::size_t max_len() const { return max_len_; }
    /// Longest n with a profiled entry at start i.
    std::size_t row_len(std::size_t i) const;

    std::size_t sw(std::size_t i, std::size_t n) const;
    std::size_t lw(std::size_t i, std::size_t n) const;
    const BigInt& total(std::size_t i, std::size_t n) const;
    bool factorizable(std::size_t i, std::size_t n) const;

    /// True iff the factor has two factorizations with first blocks of
    /// different lengths, decided from the shared tables.
    bool two_first_term(std::size_t i, std::size_t n) const;

    const RepetitionTable& table() const { return table_; }

private:
    std::size_t index(std::size_t i, std::size_t n) const;

    std::size_t len_;
    std::size_t max_len_;
    std::size_t width_cap_;
    bool has_lw_;
    bool has_totals_;
    RepetitionTable table_;
    std::vector<std::uint16_t> sw_;
    std::vector<std::uint16_t> lw_;
    std::vector<BigInt> totals_;
};

/// Emits (i, n, profile) for every factor with 1 <= n <= min(max_len, |w|-i),
/// i ascending then n ascending, all sharing one RepetitionTable. Distinct
/// start positions are profiled concurrently; emission order is fixed.
void profile_all_factors(
    const Word& w, std::size_t max_len,
    const std::function<void(std::size_t i, std::size_t n, const WidthProfile&)>& emit);

/// result[j] is true iff the prefix w[0..j-1] splits into repetition blocks
/// of length at most block_cap (result[0] is false: the empty word has no
/// factorization). This is the capped oracle that prefix acceptors are
/// guessed from.
std::vector<bool> capped_prefix_factorizable(const Word& w, std::size_t block_cap);

} // namespace repfact
