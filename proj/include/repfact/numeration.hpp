#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace repfact {

enum class DigitOrder { msd, lsd };

/// Positional numeration system used as a DFAO input alphabet: base-k with
/// either digit order, or the Zeckendorf system (sums of non-adjacent
/// Fibonacci numbers 1, 2, 3, 5, 8, ... with digit strings over {0,1}).
struct NumerationSystem {
    enum class Kind { base_k, zeckendorf };

    Kind kind = Kind::base_k;
    unsigned base = 2; // digit bound for base_k; ignored for zeckendorf
    DigitOrder order = DigitOrder::msd;

    static NumerationSystem base_k_system(unsigned k, DigitOrder order);
    static NumerationSystem zeckendorf(DigitOrder order);

    /// Per-track digit alphabet size (k, or 2 for Zeckendorf).
    unsigned digit_bound() const {
        return kind == Kind::zeckendorf ? 2 : base;
    }

    bool operator==(const NumerationSystem&) const = default;

    std::string to_string() const; // e.g. "base_2 msd", "zeckendorf msd"
    static NumerationSystem parse(const std::string& kind_token,
                                  const std::string& order_token);
};

/// A string of digit tuples. All tuples share the same arity; track t of
/// position p is digits[p * arity + t]. The padding symbol is the all-zero
/// tuple, applied on the msd side for msd-first systems and on the lsd side
/// otherwise.
struct DigitString {
    std::size_t arity = 1;
    std::vector<unsigned> digits; // flattened, position-major

    std::size_t length() const { return arity == 0 ? 0 : digits.size() / arity; }
    unsigned at(std::size_t pos, std::size_t track) const {
        return digits[pos * arity + track];
    }
    void push_tuple(std::span<const unsigned> tuple);

    /// Bracketed text form used in trace logs, e.g. "[1,0][0,1]".
    std::string to_string() const;

    bool operator==(const DigitString&) const = default;
};

/// Canonical representation of n. Zero encodes as the single digit 0;
/// Zeckendorf uses the greedy decomposition, which never produces two
/// adjacent 1s.
DigitString encode(std::uint64_t n, const NumerationSystem& sys);

/// Inverse of encode after stripping padding. Arity must be 1. Zeckendorf
/// strings with adjacent 1s are rejected: they correspond to the dead state
/// of machines over this alphabet.
std::uint64_t decode(const DigitString& d, const NumerationSystem& sys);

/// Decodes one track of a multi-track string.
std::uint64_t decode_track(const DigitString& d, std::size_t track,
                           const NumerationSystem& sys);

/// Both components encoded, the shorter zero-padded on the padding side,
/// and zipped into arity-2 tuples.
DigitString encode_pair(std::uint64_t a, std::uint64_t b,
                        const NumerationSystem& sys);

/// General tuple form of encode_pair.
DigitString encode_tuple(std::span<const std::uint64_t> values,
                         const NumerationSystem& sys);

} // namespace repfact
