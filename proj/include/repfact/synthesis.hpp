#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "repfact/dfao.hpp"
#include "repfact/numeration.hpp"

namespace repfact {

/// A black-box function to learn a DFAO from. eval must be total and
/// deterministic on the box [0, training_bound]^arity.
struct OracleSpec {
    std::string id; // recorded in the provenance header of saved machines
    std::size_t arity = 1;
    NumerationSystem numeration;
    std::uint64_t training_bound = 0;
    std::function<int(std::span<const std::uint64_t>)> eval;

    int eval_nat(std::span<const std::uint64_t> args) const { return eval(args); }
};

/// Raised when prefix classes cannot be separated consistently even at the
/// maximum suffix depth; carries the conflicting pair.
class SynthesisError : public std::runtime_error {
public:
    SynthesisError(std::string message, std::string prefix_a, std::string prefix_b)
        : std::runtime_error(std::move(message)),
          prefix_a_(std::move(prefix_a)),
          prefix_b_(std::move(prefix_b)) {}

    const std::string& prefix_a() const { return prefix_a_; }
    const std::string& prefix_b() const { return prefix_b_; }

private:
    std::string prefix_a_;
    std::string prefix_b_;
};

/// Infers a DFAO from oracle samples by Myhill-Nerode congruence guessing:
/// states are classes of digit-string prefixes indistinguishable by the
/// oracle on sampled suffix extensions up to suffix_depth, transitions are
/// one-digit extensions, and a class outputs the oracle value of its
/// representative read as a complete string. The returned machine agrees
/// with the oracle on the whole training box; if that cannot be achieved
/// the depth is raised automatically and eventually SynthesisError is
/// thrown. Pass suffix_depth = 0 for the per-system default (12 for base-k,
/// 16 for Zeckendorf).
Dfao guess_dfao(const OracleSpec& o, std::size_t suffix_depth = 0);

struct OracleCheck {
    bool ok = true;
    std::vector<std::uint64_t> counterexample; // first mismatch, when !ok

    explicit operator bool() const { return ok; }
};

/// Exhaustive comparison of evaluate_nat against the oracle on [0, bound]^arity.
OracleCheck verify_against_oracle(const Dfao& m, const OracleSpec& o,
                                  std::uint64_t bound);

/// The two-sided induction argument for the Rudin-Shapiro prefix acceptor:
///  - base: for n <= cap, acceptance matches the capped-block DP exactly;
///  - step: for cap < n <= bound and 1 <= i <= cap, if m accepts n-i and
///    rs[n-i..n-1] is a repetition then m accepts n;
///  - closure: every accepted n > 0 ends in a repetition block of length
///    <= cap whose remainder is accepted (or empty).
/// Together these make acceptance characterize factorizability into
/// repetitions of length <= cap on [0, bound].
bool inductive_check_rsrf(const Dfao& m, std::size_t cap, std::uint64_t bound);

/// True iff the acceptor accepts infinitely many naturals: some useful
/// cycle (one that is not pure padding) lies on a path from the start to
/// an accepting state. Requires a boolean arity-1 machine.
bool accepts_arbitrarily_large(const Dfao& m);

} // namespace repfact
