#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repfact/dfao.hpp"
#include "repfact/factorize.hpp"
#include "repfact/repetition.hpp"
#include "repfact/synthesis.hpp"
#include "repfact/word.hpp"

using namespace repfact;

namespace {

const auto base2_msd = NumerationSystem::base_k_system(2, DigitOrder::msd);
const auto base2_lsd = NumerationSystem::base_k_system(2, DigitOrder::lsd);

OracleSpec make_oracle(std::string id, std::size_t arity, NumerationSystem sys,
                       std::uint64_t bound,
                       std::function<int(std::span<const std::uint64_t>)> eval) {
    OracleSpec o;
    o.id = std::move(id);
    o.arity = arity;
    o.numeration = sys;
    o.training_bound = bound;
    o.eval = std::move(eval);
    return o;
}

std::vector<bool> rs_capped_dp(std::size_t n_max, std::size_t cap) {
    return capped_prefix_factorizable(
        sequence_prefix(SequenceId::rudin_shapiro, n_max), cap);
}

} // namespace

TEST_CASE("constant oracle guesses a one-state machine") {
    auto o = make_oracle("zero", 1, base2_msd, 255,
                         [](std::span<const std::uint64_t>) { return 0; });
    Dfao m = guess_dfao(o);
    CHECK(minimize(m).state_count() == 1);
    CHECK(verify_against_oracle(m, o, 511).ok); // doubled box
}

TEST_CASE("parity oracle guesses the minimal acceptor in either digit order") {
    auto parity = [](std::span<const std::uint64_t> a) {
        return a[0] % 2 == 0 ? 1 : 0;
    };
    // msd: the last digit decides, two states
    auto o_msd = make_oracle("even", 1, base2_msd, 255, parity);
    Dfao m_msd = minimize(guess_dfao(o_msd));
    CHECK(m_msd.state_count() == 2);
    CHECK(verify_against_oracle(m_msd, o_msd, 511).ok);

    // lsd: the first digit decides and must be remembered, so the start
    // state stays distinct from the two sticky ones
    auto o_lsd = make_oracle("even", 1, base2_lsd, 255, parity);
    Dfao m_lsd = minimize(guess_dfao(o_lsd));
    CHECK(m_lsd.state_count() == 3);
    CHECK(verify_against_oracle(m_lsd, o_lsd, 511).ok);
    CHECK(minimize(m_lsd).state_count() == m_lsd.state_count());
}

TEST_CASE("pair oracle over msd base 2") {
    auto o = make_oracle("sum-even", 2, base2_msd, 63,
                         [](std::span<const std::uint64_t> a) {
                             return (a[0] + a[1]) % 2 == 0 ? 1 : 0;
                         });
    Dfao m = minimize(guess_dfao(o));
    CHECK(m.state_count() == 2);
    CHECK(verify_against_oracle(m, o, 127).ok);
}

TEST_CASE("zeckendorf positivity routes illegal strings to a dead state") {
    auto o = make_oracle("positive", 1, NumerationSystem::zeckendorf(DigitOrder::msd),
                         100, [](std::span<const std::uint64_t> a) {
                             return a[0] > 0 ? 1 : 0;
                         });
    Dfao m = minimize(guess_dfao(o));
    CHECK(m.state_count() == 4);
    REQUIRE(m.dead.has_value());
    // adjacent ones land in the dead state and stay there
    DigitString bad;
    bad.arity = 1;
    bad.digits = {1, 1, 0, 1};
    CHECK(evaluate(m, bad) == 0);
    CHECK(verify_against_oracle(m, o, 200).ok);
}

TEST_CASE("verification reports the first counterexample after a mutation") {
    auto o = make_oracle("even", 1, base2_msd, 127,
                         [](std::span<const std::uint64_t> a) {
                             return a[0] % 2 == 0 ? 1 : 0;
                         });
    Dfao m = minimize(guess_dfao(o));
    REQUIRE(verify_against_oracle(m, o, 127).ok);

    Dfao corrupted = m;
    // redirect the start state's 1-edge back to the start
    corrupted.transitions[1] = corrupted.start;
    OracleCheck check = verify_against_oracle(corrupted, o, 127);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.counterexample.size() == 1);
    std::uint64_t bad = check.counterexample[0];
    auto oracle_at = [&o](std::uint64_t n) {
        const std::uint64_t args[1] = {n};
        return o.eval(args);
    };
    // minimal: everything below the witness agrees
    for (std::uint64_t n = 0; n < bad; ++n) {
        CHECK(evaluate_nat(corrupted, n) == oracle_at(n));
    }
    CHECK(evaluate_nat(corrupted, bad) != oracle_at(bad));
}

TEST_CASE("accepts_arbitrarily_large on simple machines") {
    // multiples of 3: infinite
    Dfao mod3;
    mod3.numeration = base2_msd;
    mod3.arity = 1;
    mod3.start = 0;
    mod3.outputs = {1, 0, 0};
    mod3.transitions = {0, 1, 2, 0, 1, 2};
    CHECK(accepts_arbitrarily_large(mod3));

    // exactly {1, 2, 3}: finite
    auto o = make_oracle("small", 1, base2_msd, 255,
                         [](std::span<const std::uint64_t> a) {
                             return a[0] >= 1 && a[0] <= 3 ? 1 : 0;
                         });
    Dfao finite = minimize(guess_dfao(o));
    CHECK_FALSE(accepts_arbitrarily_large(finite));
    // agreement with enumeration: nothing accepted beyond the largest hit
    std::uint64_t largest = 0;
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        if (evaluate_nat(finite, n) == 1) largest = n;
    }
    CHECK(largest == 3);

    // empty language
    Dfao empty;
    empty.numeration = base2_msd;
    empty.arity = 1;
    empty.start = 0;
    empty.outputs = {0};
    empty.transitions = {0, 0};
    CHECK_FALSE(accepts_arbitrarily_large(empty));
}

TEST_CASE("accepts_arbitrarily_large ignores padding-only cycles") {
    // accepts only the strings 0*1 (the natural 1): the start self-loop on 0
    // is a cycle, but not one that yields infinitely many naturals
    Dfao one;
    one.numeration = base2_msd;
    one.arity = 1;
    one.start = 0;
    one.outputs = {0, 1, 0};
    one.transitions = {
        0, 1, // start: pad loop on 0, accept on first 1
        2, 2, // after the 1: anything else leaves
        2, 2, // reject sink
    };
    CHECK_FALSE(accepts_arbitrarily_large(one));
}

TEST_CASE("rudin-shapiro acceptor at small scale") {
    const std::size_t bound = 2048;
    auto dp = rs_capped_dp(2 * bound, 8);
    auto o = make_oracle("rsrf", 1, base2_msd, bound,
                         [&dp](std::span<const std::uint64_t> a) {
                             auto n = static_cast<std::size_t>(a[0]);
                             return (n > 0 && dp[n]) ? 1 : 0;
                         });
    Dfao m = minimize(guess_dfao(o));
    CHECK(minimize(m).state_count() == m.state_count());
    // generalization: the machine stays right on a doubled box
    CHECK(verify_against_oracle(m, o, 2 * bound).ok);
    CHECK(inductive_check_rsrf(m, 8, 1024));

    // the serialized machine round-trips with the same state count
    Dfao back = parse_dfao(serialize(m));
    CHECK(back.state_count() == m.state_count());
    CHECK(equivalent(back, m).equivalent);
    CHECK_FALSE(inductive_check_rsrf(m, 2, 1024)); // blocks of length > 2 are needed
    CHECK(accepts_arbitrarily_large(m));

    // an empty acceptor fails the check at the first factorizable prefix
    Dfao empty;
    empty.numeration = base2_msd;
    empty.arity = 1;
    empty.start = 0;
    empty.outputs = {0};
    empty.transitions = {0, 0};
    CHECK_FALSE(inductive_check_rsrf(empty, 8, 256));
}

TEST_CASE("synthesized machines are padding-invariant") {
    const std::size_t bound = 4096;
    auto dp = rs_capped_dp(bound, 8);
    auto o = make_oracle("rsrf", 1, base2_msd, bound,
                         [&dp](std::span<const std::uint64_t> a) {
                             auto n = static_cast<std::size_t>(a[0]);
                             return (n > 0 && dp[n]) ? 1 : 0;
                         });
    Dfao m = minimize(guess_dfao(o));
    Dfao unminimized = guess_dfao(o);
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        DigitString d = encode(n % (bound + 1), base2_msd);
        DigitString padded;
        padded.arity = 1;
        padded.digits.assign(1 + n % 3, 0);
        padded.digits.insert(padded.digits.end(), d.digits.begin(), d.digits.end());
        REQUIRE(evaluate(m, d) == evaluate(m, padded));
        // minimization preserves every evaluation
        REQUIRE(evaluate(m, d) == evaluate(unminimized, d));
    }
}

TEST_CASE("thue-morse width machine probes") {
    // small training box; the probes sit inside it
    const std::uint64_t train = 127;
    Word t = sequence_prefix(SequenceId::thue_morse, 2 * (train + 1));
    FactorWidths fw(t, {.max_len = static_cast<std::size_t>(train + 1)});
    auto o = make_oracle("tm-width", 2, base2_msd, train,
                         [&fw](std::span<const std::uint64_t> a) {
                             return static_cast<int>(
                                 fw.sw(static_cast<std::size_t>(a[0]),
                                       static_cast<std::size_t>(a[1])));
                         });
    Dfao m = minimize(guess_dfao(o));
    CHECK(evaluate_nat(m, 0, 0) == 0); // the empty factor has no factorization
    CHECK(evaluate_nat(m, 1, 2) == 1);
    CHECK(evaluate_nat(m, 5, 4) == 2);
    CHECK(evaluate_nat(m, 45, 22) == 7);
    CHECK(evaluate(m, encode_pair(45, 22, base2_msd)) == 7);
    CHECK(evaluate(m, encode_pair(1, 2, base2_msd)) == 1);

    // padded pair inputs give the same outputs
    for (std::uint64_t i = 0; i <= 60; ++i) {
        for (std::uint64_t n = 0; n <= 60; ++n) {
            DigitString d = encode_pair(i, n, base2_msd);
            DigitString padded;
            padded.arity = 2;
            padded.digits = {0, 0, 0, 0};
            padded.digits.insert(padded.digits.end(), d.digits.begin(),
                                 d.digits.end());
            REQUIRE(evaluate(m, d) == evaluate(m, padded));
        }
    }
}

TEST_CASE("synthesis failure carries a diagnostic") {
    // an oracle that depends on bits far beyond any sampled suffix: the
    // learner cannot stay consistent with its own data and must say so
    auto o = make_oracle("deep", 1, base2_msd, (1u << 20),
                         [](std::span<const std::uint64_t> a) {
                             return (a[0] >> 19) & 1 ? 1 : 0;
                         });
    try {
        Dfao m = guess_dfao(o, 2);
        // acceptable alternative: the guess may come out correct
        CHECK(verify_against_oracle(m, o, (1u << 20)).ok);
    } catch (const SynthesisError& e) {
        CHECK(std::string(e.what()).find("disagrees") != std::string::npos);
    }
}
