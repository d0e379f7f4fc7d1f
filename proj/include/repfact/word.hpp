#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repfact {

using Symbol = std::uint8_t;

/// A finite word over a small integer alphabet. Symbols are indexed 0-based;
/// helpers that mirror the 1-based w[i..i+n-1] notation are display-only.
class Word {
public:
    Word() = default;
    Word(std::vector<Symbol> symbols, std::size_t alphabet_size);

    /// Builds a word from text. Digit characters map to their values;
    /// any other characters are numbered by first appearance.
    static Word from_string(std::string_view text);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    std::size_t alphabet_size() const { return alphabet_size_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    /// Copy of w[i..i+n-1], 0-based. Throws std::out_of_range on bad bounds.
    Word factor(std::size_t i, std::size_t n) const;

    /// Renders symbols with the characters they were built from, falling
    /// back to digits (alphabet <= 10) or letters from 'a'.
    std::string to_string() const;

    /// 1-based slice view for display, the notation used in worked examples:
    /// display_1based(i, n) prints w[i..i+n-1] with indexing from 1.
    std::string display_1based(std::size_t i, std::size_t n) const;

    bool operator==(const Word& other) const {
        return symbols_ == other.symbols_ && alphabet_size_ == other.alphabet_size_;
    }

private:
    std::vector<Symbol> symbols_;
    std::size_t alphabet_size_ = 0;
    std::vector<char> display_; // per-symbol character, empty for the default
};

/// A prolongable morphism with an optional letter-to-letter coding applied
/// to its fixed point. rules[seed] must start with seed and have length >= 2.
struct MorphismSpec {
    std::vector<std::vector<Symbol>> rules; // rules[s] = image of symbol s
    std::vector<Symbol> coding;             // empty means identity
    Symbol seed = 0;
};

/// A finite sequence of unfolding instructions over {+1, -1}. Instructions
/// of length k define a paperfolding word of length 2^k - 1.
struct UnfoldingInstructions {
    std::vector<std::int8_t> steps; // each +1 or -1

    /// Parses a compact form: '+' or '1' for +1, '-' for -1.
    static UnfoldingInstructions from_string(std::string_view text);
    std::string to_string() const;
};

enum class SequenceId {
    fibonacci,
    thue_morse,
    regular_paperfolding,
    rudin_shapiro,
};

const char* sequence_name(SequenceId id);

MorphismSpec fibonacci_spec();
MorphismSpec thue_morse_spec();
MorphismSpec regular_paperfolding_spec();

/// Length-n prefix of coding(fixed point of spec). Extending n never changes
/// earlier symbols. Throws std::invalid_argument for non-prolongable specs.
Word fixed_point_prefix(const MorphismSpec& spec, std::size_t n);

/// Length-n prefix of one of the four named sequences. rudin_shapiro is
/// computed digit-wise: rs[n] = parity of occurrences of "11" (overlaps
/// counted) in the base-2 expansion of n, with 0 meaning even parity.
Word sequence_prefix(SequenceId id, std::size_t n);

/// The finite paperfolding word coded by u: w^0 = empty and
/// w^j = w^{j-1} . b(u_j) . complement(reverse(w^{j-1})) over {0,1}.
/// The instruction-to-bit map is b(+1) = 0, b(-1) = 1, calibrated so that
/// all-(+1) instructions reproduce regular_paperfolding prefixes.
Word paperfolding_word(const UnfoldingInstructions& u);

} // namespace repfact
