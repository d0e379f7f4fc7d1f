#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "repfact/brute.hpp"
#include "repfact/factorize.hpp"
#include "repfact/word.hpp"

using namespace repfact;

TEST_CASE("the worked example aaaababa") {
    Word w = Word::from_string("aaaababa");
    WidthProfile p = width_profile(w);
    CHECK(p.sw == 2);
    CHECK(p.lw == 3);
    CHECK(p.total == 3);
    CHECK(p.counts == std::map<std::size_t, BigInt>{{2, BigInt(2)}, {3, BigInt(1)}});
    CHECK_FALSE(p.unique);
    CHECK(two_first_term_factorizations(w)); // first blocks aaaa, aaa, aa differ
}

TEST_CASE("salsa has no factorization") {
    Word w = Word::from_string("salsa");
    WidthProfile p = width_profile(w);
    CHECK(p.sw == 0);
    CHECK(p.lw == 0);
    CHECK(p.total == 0);
    CHECK_FALSE(shortest_factorization(w).has_value());
    CHECK_FALSE(longest_factorization(w).has_value());
}

TEST_CASE("witnesses and tie-breaks") {
    Word w = Word::from_string("0011");
    auto s = shortest_factorization(w);
    REQUIRE(s.has_value());
    CHECK(s->cuts == std::vector<std::size_t>{0, 2, 4});
    CHECK(s->width() == 2);
    CHECK_FALSE(two_first_term_factorizations(w));

    Word a = Word::from_string("aaaababa");
    auto longest = longest_factorization(a);
    REQUIRE(longest.has_value());
    CHECK(longest->width() == 3);
    CHECK(longest->cuts == std::vector<std::size_t>{0, 2, 4, 8}); // (aa)(aa)(baba)
    auto shortest = shortest_factorization(a);
    REQUIRE(shortest.has_value());
    CHECK(shortest->cuts == std::vector<std::size_t>{0, 3, 8}); // lexicographically least
}

TEST_CASE("thue-morse sample factors") {
    Word t = sequence_prefix(SequenceId::thue_morse, 80);
    CHECK(width_profile(t.factor(45, 22)).sw == 7);
    auto s = shortest_factorization(t.factor(5, 12));
    REQUIRE(s.has_value());
    CHECK(s->width() == 4);
    CHECK(s->cuts == std::vector<std::size_t>{0, 2, 4, 6, 12}); // 0^2 1^2 0^2 (101)^2
}

TEST_CASE("rudin-shapiro prefix of length 65") {
    // 64 itself is not factorizable; 65 is, with every block of length <= 8
    Word rs = sequence_prefix(SequenceId::rudin_shapiro, 65);
    WidthProfile p64 = width_profile(rs.factor(0, 64));
    CHECK(p64.sw == 0);
    auto longest = longest_factorization(rs);
    REQUIRE(longest.has_value());
    CHECK(longest->width() == 15);
    CHECK(longest->width() * 8 >= 65);
}

TEST_CASE("empty word is rejected") {
    Word empty({}, 2);
    CHECK_THROWS_AS((void)width_profile(empty), std::invalid_argument);
    CHECK_THROWS_AS((void)two_first_term_factorizations(empty), std::invalid_argument);
}

TEST_CASE("profiles match brute force on all binary words up to length 10") {
    for (std::size_t len = 1; len <= 10; ++len) {
        for (std::size_t bits = 0; bits < (std::size_t(1) << len); ++bits) {
            std::vector<Symbol> symbols(len);
            for (std::size_t q = 0; q < len; ++q) symbols[q] = (bits >> q) & 1;
            Word w(std::move(symbols), 2);
            WidthProfile dp = width_profile(w);
            WidthProfile ref = brute::profile(w);
            REQUIRE(dp.sw == ref.sw);
            REQUIRE(dp.lw == ref.lw);
            REQUIRE(dp.total == ref.total);
            REQUIRE(dp.counts == ref.counts);

            // witnesses stay consistent with the profile and their invariants
            auto s = shortest_factorization(w);
            auto l = longest_factorization(w);
            REQUIRE(s.has_value() == (dp.sw > 0));
            if (s) {
                CHECK(s->width() == dp.sw);
                CHECK(s->cuts.front() == 0);
                CHECK(s->cuts.back() == len);
                for (std::size_t q = 0; q + 1 < s->cuts.size(); ++q) {
                    CHECK(brute::is_repetition(
                        w.factor(s->cuts[q], s->cuts[q + 1] - s->cuts[q])));
                }
            }
            if (l) CHECK(l->width() == dp.lw);

            // two_first_term agrees with enumeration
            bool expect = false;
            std::set<std::size_t> firsts;
            brute::enumerate_factorizations(
                w, [&](const Factorization& f) { firsts.insert(f.cuts[1]); });
            expect = firsts.size() >= 2;
            CHECK(two_first_term_factorizations(w) == expect);
        }
    }
}

TEST_CASE("subadditivity of sw under concatenation") {
    std::mt19937 rng(23);
    for (int round = 0; round < 300; ++round) {
        std::size_t la = 1 + rng() % 8, lb = 1 + rng() % 8;
        std::vector<Symbol> sa, sb;
        for (std::size_t q = 0; q < la; ++q) sa.push_back(rng() % 2);
        for (std::size_t q = 0; q < lb; ++q) sb.push_back(rng() % 2);
        Word u(sa, 2), v(sb, 2);
        WidthProfile pu = width_profile(u), pv = width_profile(v);
        if (pu.sw == 0 || pv.sw == 0) continue;
        std::vector<Symbol> sc = sa;
        sc.insert(sc.end(), sb.begin(), sb.end());
        WidthProfile puv = width_profile(Word(sc, 2));
        CHECK(puv.sw >= 1);
        CHECK(puv.sw <= pu.sw + pv.sw);
    }
}

TEST_CASE("bulk tables agree with single-word profiles") {
    Word t = sequence_prefix(SequenceId::thue_morse, 64);
    FactorWidths fw(t, {.max_len = 16, .longest = true, .totals = true});
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t n = 1; n <= fw.row_len(i); ++n) {
            WidthProfile p = width_profile(t.factor(i, n));
            CHECK(fw.sw(i, n) == p.sw);
            CHECK(fw.lw(i, n) == p.lw);
            CHECK(fw.total(i, n) == p.total);
            CHECK(fw.factorizable(i, n) == (p.sw > 0));
            CHECK(fw.two_first_term(i, n) ==
                  two_first_term_factorizations(t.factor(i, n)));
        }
    }
}

TEST_CASE("profile_all_factors emission contract") {
    Word w = Word::from_string("0110");
    std::vector<std::tuple<std::size_t, std::size_t>> order;
    profile_all_factors(w, 2, [&](std::size_t i, std::size_t n, const WidthProfile& p) {
        order.emplace_back(i, n);
        WidthProfile direct = width_profile(w.factor(i, n));
        CHECK(p.sw == direct.sw);
        CHECK(p.lw == direct.lw);
        CHECK(p.total == direct.total);
    });
    // factors with 1 <= n <= min(2, |w| - i), i ascending then n ascending
    std::vector<std::tuple<std::size_t, std::size_t>> expected = {
        {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
    CHECK(order == expected);
}

TEST_CASE("bulk profiles respect the family width bounds") {
    profile_all_factors(sequence_prefix(SequenceId::thue_morse, 128), 32,
                        [](std::size_t, std::size_t, const WidthProfile& p) {
                            REQUIRE(p.sw <= 7);
                        });
    profile_all_factors(sequence_prefix(SequenceId::fibonacci, 128), 32,
                        [](std::size_t, std::size_t, const WidthProfile& p) {
                            REQUIRE(p.sw <= 3);
                        });
}

TEST_CASE("capped prefix factorizability is a refinement of the general DP") {
    Word rs = sequence_prefix(SequenceId::rudin_shapiro, 128);
    auto capped = capped_prefix_factorizable(rs, 8);
    CHECK_FALSE(capped[0]);
    for (std::size_t n = 1; n <= rs.size(); ++n) {
        if (capped[n]) CHECK(width_profile(rs.factor(0, n)).sw > 0);
    }
    CHECK(capped[65]);
    // the refinement is strict: rs[0..36] factors, but only with a block
    // longer than 8
    CHECK_FALSE(capped[37]);
    CHECK(width_profile(rs.factor(0, 37)).sw > 0);
}

TEST_CASE("width cap clamps values above the cap and keeps the rest exact") {
    Word t = sequence_prefix(SequenceId::thue_morse, 128);
    FactorWidths exact(t, {.max_len = 64});
    FactorWidths capped(t, {.max_len = 64, .width_cap = 3});
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t n = 1; n <= exact.row_len(i); ++n) {
            if (exact.sw(i, n) <= 3) {
                CHECK(capped.sw(i, n) == exact.sw(i, n));
            } else {
                CHECK(capped.sw(i, n) == 4);
            }
            CHECK(capped.factorizable(i, n) == exact.factorizable(i, n));
        }
    }
}

TEST_CASE("factorization counts use exact arithmetic") {
    // factorizations of 0^n are compositions of n into parts >= 2, counted
    // by Fibonacci(n-1); at n = 130 the count needs more than 64 bits
    Word zeros(std::vector<Symbol>(130, 0), 2);
    WidthProfile p = width_profile(zeros);
    BigInt fib_prev = 1, fib_cur = 1;
    for (int q = 3; q <= 129; ++q) {
        BigInt nxt = fib_prev + fib_cur;
        fib_prev = fib_cur;
        fib_cur = nxt;
    }
    CHECK(p.total == fib_cur);
    CHECK(p.total > BigInt("18446744073709551615")); // beyond uint64
    CHECK(p.sw == 1);
    CHECK(p.lw == 65);
}
