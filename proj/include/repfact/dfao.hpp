#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "repfact/numeration.hpp"

namespace repfact {

/// Deterministic finite automaton with output: a complete Moore machine
/// over tuple-digit alphabets. Acceptors are the boolean special case
/// (outputs in {0,1}). The transition table is total: every state has a
/// successor for each of digit_bound()^arity tuples.
struct Dfao {
    NumerationSystem numeration;
    std::size_t arity = 1;
    int start = 0;
    std::vector<int> outputs;     // one per state
    std::vector<int> transitions; // state-major, alphabet_size() per state
    std::optional<int> dead;      // designated absorbing state with output 0

    std::size_t state_count() const { return outputs.size(); }
    std::size_t alphabet_size() const;

    /// Flat symbol index of a digit tuple; track 0 varies slowest.
    std::size_t symbol_index(std::span<const unsigned> tuple) const;
    std::vector<unsigned> symbol_tuple(std::size_t index) const;

    int next(int state, std::size_t symbol) const {
        return transitions[static_cast<std::size_t>(state) * alphabet_size() + symbol];
    }

    bool is_acceptor() const;

    /// Structural sanity: sizes match, targets in range, dead (if set)
    /// absorbing with output 0. Throws std::invalid_argument otherwise.
    void validate() const;
};

/// Runs m on the digit string and returns the output of the final state.
/// Tuples outside the alphabet are rejected.
int evaluate(const Dfao& m, const DigitString& input);

/// evaluate on the parallel canonical encoding of the given naturals.
int evaluate_nat(const Dfao& m, std::span<const std::uint64_t> args);
int evaluate_nat(const Dfao& m, std::uint64_t a);
int evaluate_nat(const Dfao& m, std::uint64_t a, std::uint64_t b);

/// Prioritized product of boolean acceptors: the output of a product state
/// is the value of the last listed acceptor accepting there, 0 otherwise.
/// Listing nested acceptors rep3=3, rep2=2, rep1=1 therefore yields the
/// smallest accepted value. All acceptors must share numeration and arity.
Dfao combine(const std::vector<std::pair<const Dfao*, int>>& acceptors);

/// Moore-equivalence minimization after trimming unreachable states.
/// States are renumbered in breadth-first order from the start state so
/// serialization is reproducible; the dead designation is recomputed.
Dfao minimize(const Dfao& m);

struct EquivalenceResult {
    bool equivalent = false;
    /// A shortest input on which outputs differ, when not equivalent.
    std::optional<DigitString> counterexample;

    explicit operator bool() const { return equivalent; }
};

/// True iff outputs agree on every input string, by product reachability.
/// Disagreement always carries a concrete witness.
EquivalenceResult equivalent(const Dfao& a, const Dfao& b);

/// Line-oriented text form:
///   numeration <base_k|zeckendorf> <msd|lsd> arity <k>
///   state <id> output <v>
///   trans <from> [d1,...,dk] <to>
///   start <id>
///   dead <id>
/// Whitespace-insensitive; # starts a comment. With omit_dead, the dead
/// state's lines are dropped and parsing re-completes the machine.
std::string serialize(const Dfao& m, bool omit_dead = false,
                      const std::vector<std::string>& header_comments = {});

/// Inverse of serialize. Malformed text is rejected with a line-numbered
/// diagnostic.
Dfao parse_dfao(const std::string& text);

} // namespace repfact
