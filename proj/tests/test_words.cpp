#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repfact/word.hpp"

using namespace repfact;

TEST_CASE("fibonacci prefix") {
    CHECK(sequence_prefix(SequenceId::fibonacci, 8).to_string() == "01001010");
    CHECK(sequence_prefix(SequenceId::fibonacci, 0).empty());
    CHECK(fixed_point_prefix(fibonacci_spec(), 8).to_string() == "01001010");
}

TEST_CASE("thue-morse prefix and factors") {
    Word t = sequence_prefix(SequenceId::thue_morse, 16);
    CHECK(t.factor(0, 8).to_string() == "01101001");
    CHECK(t.factor(5, 6).to_string() == "001100"); // 0^2 1^2 0^2
    CHECK(t.factor(1, 2).to_string() == "11");
    CHECK(t.factor(5, 2).to_string() == "00");
    CHECK(t.factor(0, t.size()) == t);
    CHECK_THROWS_AS((void)t.factor(15, 2), std::out_of_range);
}

TEST_CASE("regular paperfolding prefix via morphism and coding") {
    CHECK(sequence_prefix(SequenceId::regular_paperfolding, 16).to_string() ==
          "0010011000110110");
}

TEST_CASE("rudin-shapiro prefix") {
    CHECK(sequence_prefix(SequenceId::rudin_shapiro, 8).to_string() == "00010010");
}

TEST_CASE("non-prolongable specs are rejected") {
    MorphismSpec bad{{{1, 0}, {0}}, {}, 0}; // rules(0) does not start with 0
    CHECK_THROWS_AS((void)fixed_point_prefix(bad, 4), std::invalid_argument);
    MorphismSpec short_rule{{{0}, {1}}, {}, 0}; // not growing
    CHECK_THROWS_AS((void)fixed_point_prefix(short_rule, 4), std::invalid_argument);
}

TEST_CASE("prefix stability") {
    for (auto id : {SequenceId::fibonacci, SequenceId::thue_morse,
                    SequenceId::regular_paperfolding, SequenceId::rudin_shapiro}) {
        Word big = sequence_prefix(id, 256);
        for (std::size_t m : {0u, 1u, 17u, 100u, 255u}) {
            Word small = sequence_prefix(id, m);
            CHECK(big.factor(0, m) == small);
        }
    }
}

TEST_CASE("paperfolding word construction") {
    CHECK(paperfolding_word({}).empty());

    UnfoldingInstructions all_plus;
    all_plus.steps.assign(4, 1);
    CHECK(paperfolding_word(all_plus) ==
          sequence_prefix(SequenceId::regular_paperfolding, 15));

    UnfoldingInstructions six = UnfoldingInstructions::from_string("+-+-+-");
    CHECK(paperfolding_word(six).size() == 63);
}

TEST_CASE("paperfolding words agree with the morphism construction up to 12") {
    for (std::size_t k = 1; k <= 12; ++k) {
        UnfoldingInstructions u;
        u.steps.assign(k, 1);
        Word folded = paperfolding_word(u);
        CHECK(folded ==
              sequence_prefix(SequenceId::regular_paperfolding, (1u << k) - 1));
    }
}

TEST_CASE("paperfolding palindromic complement structure") {
    UnfoldingInstructions u = UnfoldingInstructions::from_string("-++-+-+");
    Word prev({}, 2);
    for (std::size_t j = 1; j <= u.steps.size(); ++j) {
        UnfoldingInstructions partial;
        partial.steps.assign(u.steps.begin(), u.steps.begin() + j);
        Word w = paperfolding_word(partial);
        // each stage extends the previous one
        CHECK(w.factor(0, prev.size()) == prev);
        // second half is the complemented reverse of the first
        std::size_t half = prev.size();
        for (std::size_t q = 0; q < half; ++q) {
            CHECK(w[half + 1 + q] == 1 - w[half - 1 - q]);
        }
        prev = w;
    }
}

TEST_CASE("instruction parsing") {
    auto u = UnfoldingInstructions::from_string("-+1");
    REQUIRE(u.steps.size() == 3);
    CHECK(u.steps[0] == -1);
    CHECK(u.steps[1] == 1);
    CHECK(u.steps[2] == 1);
    CHECK(u.to_string() == "-++");
    CHECK_THROWS_AS(UnfoldingInstructions::from_string("+x"), std::invalid_argument);
}

TEST_CASE("word display helpers") {
    Word w = Word::from_string("alfalfa");
    CHECK(w.alphabet_size() == 3);
    CHECK(w.display_1based(1, 3) == "alf");
    Word digits = Word::from_string("0102");
    CHECK(digits.alphabet_size() == 3);
    CHECK(digits[3] == 2);
}
