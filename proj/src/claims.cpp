#include "repfact/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "repfact/brute.hpp"
#include "repfact/dfao.hpp"
#include "repfact/factorize.hpp"
#include "repfact/numeration.hpp"
#include "repfact/parallel.hpp"
#include "repfact/repetition.hpp"
#include "repfact/synthesis.hpp"
#include "repfact/word.hpp"

namespace repfact::claims {

namespace {

std::string render_blocks(const Word& w, const Factorization& f) {
    std::string out;
    for (std::size_t s = 0; s + 1 < f.cuts.size(); ++s) {
        out += "(" + w.factor(f.cuts[s], f.cuts[s + 1] - f.cuts[s]).to_string() + ")";
    }
    return out;
}

Witness witness(std::string sequence, std::int64_t i, std::int64_t n,
                std::string detail) {
    return Witness{std::move(sequence), i, n, std::move(detail)};
}

std::int64_t get(const Params& p, const std::string& key) { return p.at(key); }

// ---------------------------------------------------------------- intro

void claim_intro_example(const Params&, ClaimReport& r) {
    const Word w = Word::from_string("aaaababa");
    std::vector<std::string> rendered;
    brute::enumerate_factorizations(w, [&](const Factorization& f) {
        rendered.push_back(render_blocks(w, f));
    });
    std::sort(rendered.begin(), rendered.end());
    const std::vector<std::string> expected = {"(aa)(aa)(baba)", "(aaa)(ababa)",
                                               "(aaaa)(baba)"};
    WidthProfile p = width_profile(w);
    r.pass = rendered == expected && p.sw == 2 && p.lw == 3 && p.total == 3 &&
             p.counts == std::map<std::size_t, BigInt>{{2, BigInt(2)}, {3, BigInt(1)}};
    if (r.pass) {
        for (const auto& f : rendered) r.witnesses.push_back(witness("aaaababa", 0, 8, f));
        r.witnesses.push_back(witness("aaaababa", 0, 8, "sw=2 lw=3 total=3"));
    } else {
        std::string got = "sw=" + std::to_string(p.sw) + " lw=" + std::to_string(p.lw) +
                          " total=" + p.total.str() + " factorizations:";
        for (const auto& f : rendered) got += " " + f;
        r.witnesses.push_back(witness("aaaababa", 0, 8, got));
    }
}

// ------------------------------------------------------ exhaustive oracle

void claim_dp_oracle_exhaustive(const Params& p, ClaimReport& r) {
    const std::size_t max_len = static_cast<std::size_t>(get(p, "bound"));
    std::size_t checked = 0;
    std::optional<Witness> failure;

    for (std::size_t len = 1; len <= max_len && !failure; ++len) {
        const std::size_t count = std::size_t(1) << len;
        std::vector<std::optional<Witness>> bad(count);
        parallel_for(0, count, [&](std::size_t bits) {
            std::vector<Symbol> symbols(len);
            for (std::size_t j = 0; j < len; ++j) symbols[j] = (bits >> j) & 1;
            Word w(std::move(symbols), 2);

            WidthProfile dp = width_profile(w);
            WidthProfile ref = brute::profile(w);
            bool ok = dp.sw == ref.sw && dp.lw == ref.lw && dp.total == ref.total &&
                      dp.counts == ref.counts && dp.unique == ref.unique;
            if (ok) {
                auto shortest = shortest_factorization(w);
                auto longest = longest_factorization(w);
                ok = (dp.sw == 0) == !shortest.has_value() &&
                     (dp.lw == 0) == !longest.has_value() &&
                     (!shortest || shortest->width() == dp.sw) &&
                     (!longest || longest->width() == dp.lw);
            }
            if (!ok) {
                bad[bits] = witness("binary", static_cast<std::int64_t>(bits),
                                    static_cast<std::int64_t>(len),
                                    "profile mismatch on " + w.to_string());
            }
        });
        for (const auto& b : bad) {
            if (b && !failure) failure = b;
        }
        checked += count;
    }

    r.pass = !failure.has_value();
    if (failure) {
        r.witnesses.push_back(*failure);
    } else {
        r.witnesses.push_back(witness("binary", 0, static_cast<std::int64_t>(max_len),
                                      std::to_string(checked) +
                                          " words matched brute-force enumeration"));
    }
}

// ------------------------------------------------------------- fibonacci

void claim_fib_factor_bound(const Params& p, ClaimReport& r) {
    const std::size_t prefix = static_cast<std::size_t>(get(p, "bound"));
    const std::size_t max_len = static_cast<std::size_t>(get(p, "max_len"));
    Word f = sequence_prefix(SequenceId::fibonacci, prefix);
    FactorWidths fw(f, {.max_len = max_len});

    std::optional<Witness> violation;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> first_attained;
    for (std::size_t i = 0; i < f.size() && !violation; ++i) {
        for (std::size_t n = 1; n <= fw.row_len(i); ++n) {
            std::size_t sw = fw.sw(i, n);
            if (sw > 3) {
                violation = witness("fibonacci", static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(n),
                                    "sw=" + std::to_string(sw) + " exceeds 3");
                break;
            }
            first_attained.emplace(sw, std::make_pair(i, n));
        }
    }
    r.pass = !violation && first_attained.count(3) == 1;
    if (violation) {
        r.witnesses.push_back(*violation);
    } else if (!r.pass) {
        r.witnesses.push_back(witness("fibonacci", 0, 0, "width 3 never attained"));
    } else {
        for (std::size_t sw = 1; sw <= 3; ++sw) {
            auto [i, n] = first_attained.at(sw);
            r.witnesses.push_back(witness("fibonacci", static_cast<std::int64_t>(i),
                                          static_cast<std::int64_t>(n),
                                          "first factor with sw=" + std::to_string(sw)));
        }
    }
}

void claim_fib_prefix_bound(const Params& p, ClaimReport& r) {
    const std::size_t prefix = static_cast<std::size_t>(get(p, "bound"));
    Word f = sequence_prefix(SequenceId::fibonacci, prefix);
    RepetitionTable table(f);

    constexpr std::size_t kNone = std::size_t(-1);
    std::vector<std::size_t> minw(prefix + 1, kNone);
    minw[0] = 0;
    std::size_t longest = table.longest_repetition();
    for (std::size_t j = 2; j <= prefix; ++j) {
        std::size_t k_min = j > longest ? j - longest : 0;
        for (std::size_t k = k_min; k + 2 <= j; ++k) {
            if (minw[k] == kNone || !table.at(k, j - k)) continue;
            minw[j] = std::min(minw[j], minw[k] + 1);
        }
    }

    std::optional<Witness> violation;
    std::optional<std::size_t> first2;
    for (std::size_t n = 1; n <= prefix; ++n) {
        std::size_t sw = minw[n] == kNone ? 0 : minw[n];
        if (sw > 2) {
            violation = witness("fibonacci", 0, static_cast<std::int64_t>(n),
                                "prefix sw=" + std::to_string(sw) + " exceeds 2");
            break;
        }
        if (sw == 2 && !first2) first2 = n;
    }
    r.pass = !violation && first2.has_value();
    if (violation) {
        r.witnesses.push_back(*violation);
    } else if (!first2) {
        r.witnesses.push_back(witness("fibonacci", 0, 0, "width 2 never attained"));
    } else {
        r.witnesses.push_back(witness("fibonacci", 0, static_cast<std::int64_t>(*first2),
                                      "first prefix with sw=2"));
    }
}

// ------------------------------------------------------------ thue-morse

void claim_tm_width_bound(const Params& p, ClaimReport& r) {
    const std::size_t prefix = static_cast<std::size_t>(get(p, "bound"));
    const std::size_t max_len = static_cast<std::size_t>(get(p, "max_len"));
    Word t = sequence_prefix(SequenceId::thue_morse, prefix);
    FactorWidths fw(t, {.max_len = max_len});

    std::optional<Witness> violation;
    for (std::size_t i = 0; i < t.size() && !violation; ++i) {
        for (std::size_t n = 1; n <= fw.row_len(i); ++n) {
            std::size_t sw = fw.sw(i, n);
            if (sw > 7) {
                violation = witness("thue_morse", static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(n),
                                    "sw=" + std::to_string(sw) + " exceeds 7");
                break;
            }
        }
    }

    const std::vector<std::pair<std::size_t, std::size_t>> table1 = {
        {1, 2}, {5, 4}, {5, 6}, {5, 12}, {5, 14}, {45, 20}, {45, 22}};
    bool witnesses_ok = true;
    std::vector<Witness> rows;
    for (std::size_t k = 0; k < table1.size(); ++k) {
        auto [i, n] = table1[k];
        std::size_t sw = fw.sw(i, n);
        rows.push_back(witness("thue_morse", static_cast<std::int64_t>(i),
                               static_cast<std::int64_t>(n),
                               t.factor(i, n).to_string() + " has width " +
                                   std::to_string(sw)));
        if (sw != k + 1) witnesses_ok = false;
    }

    r.pass = !violation && witnesses_ok;
    if (violation) r.witnesses.push_back(*violation);
    r.witnesses.insert(r.witnesses.end(), rows.begin(), rows.end());
}

void claim_tm_uniqueness(const Params& p, ClaimReport& r) {
    const std::size_t prefix = static_cast<std::size_t>(get(p, "bound"));
    const std::size_t max_len = static_cast<std::size_t>(get(p, "max_len"));
    Word t = sequence_prefix(SequenceId::thue_morse, prefix);
    FactorWidths fw(t, {.max_len = max_len, .totals = true});

    std::size_t factorizable = 0;
    std::optional<Witness> violation;
    for (std::size_t i = 0; i < t.size() && !violation; ++i) {
        for (std::size_t n = 1; n <= fw.row_len(i); ++n) {
            if (!fw.factorizable(i, n)) continue;
            ++factorizable;
            if (fw.total(i, n) != 1) {
                violation = witness("thue_morse", static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(n),
                                    "factorization count " + fw.total(i, n).str());
                break;
            }
            if (fw.two_first_term(i, n)) {
                violation = witness("thue_morse", static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(n),
                                    "two factorizations with distinct first blocks");
                break;
            }
        }
    }
    r.pass = !violation;
    if (violation) {
        r.witnesses.push_back(*violation);
    } else {
        r.witnesses.push_back(
            witness("thue_morse", 0, static_cast<std::int64_t>(max_len),
                    std::to_string(factorizable) +
                        " factorizable factors, each with exactly one factorization"));
    }
}

void claim_tm_dfao_28(const Params& p, ClaimReport& r) {
    const std::uint64_t train = static_cast<std::uint64_t>(get(p, "bound"));
    const std::uint64_t verify = static_cast<std::uint64_t>(get(p, "verify"));
    const std::size_t depth = static_cast<std::size_t>(get(p, "suffix_depth"));

    const std::size_t need = static_cast<std::size_t>(2 * verify);
    Word t = sequence_prefix(SequenceId::thue_morse, need);
    FactorWidths fw(t, {.max_len = static_cast<std::size_t>(verify)});

    OracleSpec oracle;
    oracle.id = "tm-width";
    oracle.arity = 2;
    oracle.numeration = NumerationSystem::base_k_system(2, DigitOrder::msd);
    oracle.training_bound = train;
    oracle.eval = [&fw](std::span<const std::uint64_t> args) {
        const auto i = static_cast<std::size_t>(args[0]);
        const auto n = static_cast<std::size_t>(args[1]);
        return static_cast<int>(fw.sw(i, n));
    };

    Dfao guessed = guess_dfao(oracle, depth);
    Dfao m = minimize(guessed);
    const std::size_t states = m.state_count();

    OracleCheck check = verify_against_oracle(m, oracle, verify);

    r.pass = states == 28 && m.dead.has_value() && check.ok;
    r.witnesses.push_back(witness("thue_morse", static_cast<std::int64_t>(states), 0,
                                  "minimized width DFAO has " + std::to_string(states) +
                                      " states (dead state " +
                                      (m.dead ? "included" : "missing") + ")"));
    if (!check.ok) {
        r.witnesses.push_back(witness(
            "thue_morse", static_cast<std::int64_t>(check.counterexample[0]),
            static_cast<std::int64_t>(check.counterexample[1]),
            "machine disagrees with the width DP here"));
    } else {
        r.witnesses.push_back(witness("thue_morse", static_cast<std::int64_t>(verify),
                                      static_cast<std::int64_t>(verify),
                                      "agrees with the width DP on the whole box"));
    }
}

// ----------------------------------------------------------- paperfolding

void claim_rp_width_bound(const Params& p, ClaimReport& r) {
    const std::size_t prefix = static_cast<std::size_t>(get(p, "bound"));
    const std::size_t max_len = static_cast<std::size_t>(get(p, "max_len"));
    Word rp = sequence_prefix(SequenceId::regular_paperfolding, prefix);
    FactorWidths fw(rp, {.max_len = max_len});

    std::optional<Witness> violation;
    std::optional<std::pair<std::size_t, std::size_t>> attained10;
    for (std::size_t i = 0; i < rp.size() && !violation; ++i) {
        for (std::size_t n = 1; n <= fw.row_len(i); ++n) {
            std::size_t sw = fw.sw(i, n);
            if (sw > 10) {
                violation = witness("regular_paperfolding", static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(n),
                                    "sw=" + std::to_string(sw) + " exceeds 10");
                break;
            }
            if (sw == 10 && !attained10) attained10 = {i, n};
        }
    }
    r.pass = !violation && attained10.has_value();
    if (violation) {
        r.witnesses.push_back(*violation);
    } else if (!attained10) {
        r.witnesses.push_back(witness("regular_paperfolding", 0, 0,
                                      "width 10 never attained"));
    } else {
        r.witnesses.push_back(
            witness("regular_paperfolding", static_cast<std::int64_t>(attained10->first),
                    static_cast<std::int64_t>(attained10->second),
                    "first factor with sw=10"));
    }
}

// Scan of one finite paperfolding word. Profiles factors up to an adaptive
// cap: a factorization's last block is a repetition, so factorizable
// lengths step down by at most the longest repetition; once a window of
// that width above the longest factorizable length is empty, no longer
// factor can be factorizable either.
struct PfScan {
    std::size_t max_fac_len = 0;
    std::size_t max_fac_i = 0;
    std::size_t max_sw = 0;
    std::size_t max_sw_i = 0, max_sw_n = 0;
    bool attains10 = false;
    bool all_le7 = true;
    bool overflow = false; // some sw > 10
    std::size_t over_i = 0, over_n = 0, over_sw = 0;
};

PfScan scan_paperfolding(const Word& w) {
    PfScan out;
    RepetitionTable full(w);
    const std::size_t maxrep = full.longest_repetition();
    if (maxrep == 0) return out;

    std::size_t cap = std::min(w.size(), 4 * maxrep);
    for (;;) {
        FactorWidths fw(w, {.max_len = cap});
        out = PfScan{};
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t n = 1; n <= fw.row_len(i); ++n) {
                std::size_t sw = fw.sw(i, n);
                if (sw == 0) continue;
                if (n > out.max_fac_len) {
                    out.max_fac_len = n;
                    out.max_fac_i = i;
                }
                if (sw > out.max_sw) {
                    out.max_sw = sw;
                    out.max_sw_i = i;
                    out.max_sw_n = n;
                }
                if (sw == 10) out.attains10 = true;
                if (sw > 7) out.all_le7 = false;
                if (sw > 10 && !out.overflow) {
                    out.overflow = true;
                    out.over_i = i;
                    out.over_n = n;
                    out.over_sw = sw;
                }
            }
        }
        if (cap >= w.size() || out.max_fac_len + maxrep <= cap) break;
        cap = std::min(w.size(), cap * 2);
    }
    return out;
}

UnfoldingInstructions instructions_from_mask(std::size_t len, std::size_t mask) {
    UnfoldingInstructions u;
    u.steps.resize(len);
    for (std::size_t j = 0; j < len; ++j) {
        u.steps[j] = (mask >> j) & 1 ? std::int8_t(-1) : std::int8_t(1);
    }
    return u;
}

void for_each_instruction_set(
    std::size_t min_len, std::size_t max_len,
    const std::function<void(const UnfoldingInstructions&, const PfScan&)>& visit) {
    for (std::size_t len = min_len; len <= max_len; ++len) {
        const std::size_t count = std::size_t(1) << len;
        std::vector<PfScan> scans(count);
        parallel_for(0, count, [&](std::size_t mask) {
            scans[mask] = scan_paperfolding(
                paperfolding_word(instructions_from_mask(len, mask)));
        });
        for (std::size_t mask = 0; mask < count; ++mask) {
            visit(instructions_from_mask(len, mask), scans[mask]);
        }
    }
}

void claim_pf_width_bound(const Params& p, ClaimReport& r) {
    const std::size_t max_instr = static_cast<std::size_t>(get(p, "bound"));
    std::optional<Witness> violation;
    std::size_t words = 0;
    std::size_t max_sw = 0;
    std::string max_sw_u;
    std::size_t max_sw_i = 0, max_sw_n = 0;

    for_each_instruction_set(1, max_instr,
                             [&](const UnfoldingInstructions& u, const PfScan& s) {
        ++words;
        if (s.overflow && !violation) {
            violation = witness("paperfolding " + u.to_string(),
                                static_cast<std::int64_t>(s.over_i),
                                static_cast<std::int64_t>(s.over_n),
                                "sw=" + std::to_string(s.over_sw) + " exceeds 10");
        }
        if (s.max_sw > max_sw) {
            max_sw = s.max_sw;
            max_sw_u = u.to_string();
            max_sw_i = s.max_sw_i;
            max_sw_n = s.max_sw_n;
        }
    });

    r.pass = !violation;
    if (violation) {
        r.witnesses.push_back(*violation);
    } else {
        r.witnesses.push_back(witness("paperfolding", 0,
                                      static_cast<std::int64_t>(words),
                                      std::to_string(words) + " words scanned"));
        r.witnesses.push_back(witness("paperfolding " + max_sw_u,
                                      static_cast<std::int64_t>(max_sw_i),
                                      static_cast<std::int64_t>(max_sw_n),
                                      "largest width observed: " +
                                          std::to_string(max_sw)));
    }
}

void claim_pf_length_bound(const Params& p, ClaimReport& r) {
    const std::size_t max_instr = static_cast<std::size_t>(get(p, "bound"));
    std::optional<Witness> violation;
    std::size_t global_max = 0;
    std::string global_u;
    std::size_t global_i = 0;

    for_each_instruction_set(1, max_instr,
                             [&](const UnfoldingInstructions& u, const PfScan& s) {
        if (s.max_fac_len > 45 && !violation) {
            violation = witness("paperfolding " + u.to_string(),
                                static_cast<std::int64_t>(s.max_fac_i),
                                static_cast<std::int64_t>(s.max_fac_len),
                                "factorizable factor longer than 45");
        }
        if (s.max_fac_len > global_max) {
            global_max = s.max_fac_len;
            global_u = u.to_string();
            global_i = s.max_fac_i;
        }
    });

    r.pass = !violation && global_max == 45;
    if (violation) {
        r.witnesses.push_back(*violation);
    } else {
        r.witnesses.push_back(witness("paperfolding " + global_u,
                                      static_cast<std::int64_t>(global_i),
                                      static_cast<std::int64_t>(global_max),
                                      "longest factorizable factor, length " +
                                          std::to_string(global_max)));
    }
}

void claim_pf_dichotomy(const Params& p, ClaimReport& r) {
    const std::size_t min_instr = static_cast<std::size_t>(get(p, "min_instr"));
    const std::size_t max_instr = static_cast<std::size_t>(get(p, "bound"));

    std::optional<Witness> violation;
    std::size_t class_a = 0, class_b = 0;
    std::string first_a, first_b;

    for_each_instruction_set(min_instr, max_instr,
                             [&](const UnfoldingInstructions& u, const PfScan& s) {
        if (s.all_le7) {
            if (class_a++ == 0) first_a = u.to_string();
        } else if (s.attains10) {
            if (class_b++ == 0) first_b = u.to_string();
        } else if (!violation) {
            violation = witness("paperfolding " + u.to_string(),
                                static_cast<std::int64_t>(s.max_sw_i),
                                static_cast<std::int64_t>(s.max_sw_n),
                                "max width " + std::to_string(s.max_sw) +
                                    " falls strictly between 7 and 10");
        }
    });

    // the word family folded by -+++... must land in the <= 7 class
    bool special_ok = true;
    std::string special_bad;
    for (std::size_t len = min_instr; len <= max_instr; ++len) {
        UnfoldingInstructions u;
        u.steps.assign(len, 1);
        u.steps[0] = -1;
        PfScan s = scan_paperfolding(paperfolding_word(u));
        if (!s.all_le7) {
            special_ok = false;
            special_bad = u.to_string();
            break;
        }
    }

    r.pass = !violation && class_a > 0 && class_b > 0 && special_ok;
    if (violation) r.witnesses.push_back(*violation);
    if (!special_ok) {
        r.witnesses.push_back(witness("paperfolding " + special_bad, 0, 0,
                                      "-+++... word has a factor of width > 7"));
    }
    if (class_a > 0) {
        r.witnesses.push_back(witness("paperfolding " + first_a, 0, 0,
                                      "all widths <= 7 (" + std::to_string(class_a) +
                                          " such words)"));
    }
    if (class_b > 0) {
        r.witnesses.push_back(witness("paperfolding " + first_b, 0, 0,
                                      "width 10 attained (" + std::to_string(class_b) +
                                          " such words)"));
    }
}

// ---------------------------------------------------------- rudin-shapiro

void claim_rs_23_states(const Params& p, ClaimReport& r) {
    const std::uint64_t train = static_cast<std::uint64_t>(get(p, "bound"));
    const std::uint64_t induct = static_cast<std::uint64_t>(get(p, "induct"));
    const std::size_t cap = static_cast<std::size_t>(get(p, "cap"));

    const auto n_max = static_cast<std::size_t>(train);
    Word rs = sequence_prefix(SequenceId::rudin_shapiro, n_max);
    std::vector<bool> dp = capped_prefix_factorizable(rs, cap);

    OracleSpec oracle;
    oracle.id = "rsrf";
    oracle.arity = 1;
    oracle.numeration = NumerationSystem::base_k_system(2, DigitOrder::msd);
    oracle.training_bound = train;
    oracle.eval = [&dp](std::span<const std::uint64_t> args) {
        return dp[static_cast<std::size_t>(args[0])] ? 1 : 0;
    };

    Dfao m = minimize(guess_dfao(oracle));
    const std::size_t states = m.state_count();
    OracleCheck check = verify_against_oracle(m, oracle, train);
    bool inductive = inductive_check_rsrf(m, cap, induct);
    bool unbounded = accepts_arbitrarily_large(m);

    // the largest accepted prefix length has a factorization into blocks
    // <= cap, so its longest width is at least n / cap
    std::size_t largest = 0;
    for (std::size_t n = 0; n <= std::min<std::size_t>(induct, n_max); ++n) {
        if (dp[n]) largest = n;
    }
    bool lw_ok = false;
    std::size_t lw_val = 0;
    if (largest > 0) {
        auto longest = longest_factorization(rs.factor(0, largest));
        lw_val = longest ? longest->width() : 0;
        lw_ok = lw_val * cap >= largest;
    }

    r.pass = states == 23 && check.ok && inductive && unbounded && lw_ok;
    r.witnesses.push_back(witness("rudin_shapiro", static_cast<std::int64_t>(states), 0,
                                  "minimized prefix acceptor has " +
                                      std::to_string(states) + " states"));
    if (!check.ok) {
        r.witnesses.push_back(
            witness("rudin_shapiro", static_cast<std::int64_t>(check.counterexample[0]),
                    0, "machine disagrees with the capped DP here"));
    }
    r.witnesses.push_back(witness("rudin_shapiro", 0,
                                  static_cast<std::int64_t>(induct),
                                  std::string("induction step and closure: ") +
                                      (inductive ? "hold" : "FAIL")));
    r.witnesses.push_back(witness("rudin_shapiro", 0, 0,
                                  std::string("accepts arbitrarily large n: ") +
                                      (unbounded ? "yes" : "NO")));
    r.witnesses.push_back(witness("rudin_shapiro", 0,
                                  static_cast<std::int64_t>(largest),
                                  "largest accepted prefix has lw=" +
                                      std::to_string(lw_val) + " >= " +
                                      std::to_string(largest) + "/" +
                                      std::to_string(cap)));
}

// ------------------------------------------------------------- numeration

void claim_zeckendorf_roundtrip(const Params& p, ClaimReport& r) {
    const std::uint64_t bound = static_cast<std::uint64_t>(get(p, "bound"));
    const std::size_t bij_len = static_cast<std::size_t>(get(p, "bij_len"));

    const auto msd = NumerationSystem::zeckendorf(DigitOrder::msd);
    const auto lsd = NumerationSystem::zeckendorf(DigitOrder::lsd);
    std::optional<Witness> failure;

    for (std::uint64_t n = 0; n <= bound && !failure; ++n) {
        for (const auto& sys : {msd, lsd}) {
            DigitString d = encode(n, sys);
            for (std::size_t q = 0; q + 1 < d.length(); ++q) {
                std::size_t a = sys.order == DigitOrder::msd ? q : d.length() - 2 - q;
                if (d.at(a, 0) == 1 && d.at(a + 1, 0) == 1) {
                    failure = witness("zeckendorf", static_cast<std::int64_t>(n), 0,
                                      "encoding contains adjacent 1s: " + d.to_string());
                }
            }
            if (decode(d, sys) != n) {
                failure = witness("zeckendorf", static_cast<std::int64_t>(n), 0,
                                  "round trip failed via " + sys.to_string());
            }
        }
    }

    // canonical strings of each length decode to pairwise distinct values
    // that re-encode to the same string
    std::size_t canonical = 0;
    if (!failure) {
        std::vector<std::pair<std::uint64_t, std::string>> seen;
        for (std::size_t len = 1; len <= bij_len && !failure; ++len) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
                DigitString d;
                d.arity = 1;
                bool has11 = false, leading_zero = false;
                for (std::size_t q = 0; q < len; ++q) {
                    unsigned digit = (bits >> (len - 1 - q)) & 1;
                    d.digits.push_back(digit);
                }
                for (std::size_t q = 0; q + 1 < len; ++q) {
                    if (d.digits[q] == 1 && d.digits[q + 1] == 1) has11 = true;
                }
                leading_zero = len > 1 && d.digits[0] == 0;
                if (has11 || leading_zero) continue;
                std::uint64_t value = decode(d, msd);
                seen.emplace_back(value, d.to_string());
                ++canonical;
                if (encode(value, msd) != d) {
                    failure = witness("zeckendorf", static_cast<std::int64_t>(value), 0,
                                      "canonical string does not re-encode: " +
                                          d.to_string());
                    break;
                }
            }
        }
        if (!failure) {
            std::sort(seen.begin(), seen.end());
            for (std::size_t q = 0; q + 1 < seen.size(); ++q) {
                if (seen[q].first == seen[q + 1].first) {
                    failure = witness(
                        "zeckendorf", static_cast<std::int64_t>(seen[q].first), 0,
                        "two canonical strings share a value: " + seen[q].second +
                            " and " + seen[q + 1].second);
                    break;
                }
            }
        }
    }

    r.pass = !failure;
    if (failure) {
        r.witnesses.push_back(*failure);
    } else {
        r.witnesses.push_back(witness("zeckendorf", static_cast<std::int64_t>(bound), 0,
                                      "round trip holds in both digit orders"));
        r.witnesses.push_back(witness("zeckendorf", 0,
                                      static_cast<std::int64_t>(bij_len),
                                      std::to_string(canonical) +
                                          " canonical strings, all values distinct"));
    }
}

// -------------------------------------------------------- automata algebra

struct RepFamily {
    std::string name;
    NumerationSystem numeration;
    std::uint64_t train;
    const FactorWidths* widths;
    std::size_t saturation_width; // rep_B and rep_{B+1} accept the same pairs
};

void claim_automata_algebra(const Params& p, ClaimReport& r) {
    const std::uint64_t grid = static_cast<std::uint64_t>(get(p, "bound"));
    const std::uint64_t tm_train = static_cast<std::uint64_t>(get(p, "tm_train"));
    const std::uint64_t fib_train = static_cast<std::uint64_t>(get(p, "fib_train"));

    Word t = sequence_prefix(SequenceId::thue_morse,
                             static_cast<std::size_t>(2 * tm_train));
    FactorWidths tm(t, {.max_len = static_cast<std::size_t>(tm_train)});
    Word f = sequence_prefix(SequenceId::fibonacci,
                             static_cast<std::size_t>(2 * fib_train));
    FactorWidths fib(f, {.max_len = static_cast<std::size_t>(fib_train)});

    const RepFamily families[] = {
        {"thue_morse", NumerationSystem::base_k_system(2, DigitOrder::msd), tm_train,
         &tm, 7},
        {"fibonacci", NumerationSystem::zeckendorf(DigitOrder::msd), fib_train,
         &fib, 3},
    };

    std::optional<Witness> failure;
    for (const auto& family : families) {
        if (failure) break;
        auto make_rep = [&family](std::size_t width) {
            OracleSpec oracle;
            oracle.id = family.name + "-rep" + std::to_string(width);
            oracle.arity = 2;
            oracle.numeration = family.numeration;
            oracle.training_bound = family.train;
            const FactorWidths* fw = family.widths;
            oracle.eval = [fw, width](std::span<const std::uint64_t> args) {
                const auto i = static_cast<std::size_t>(args[0]);
                const auto n = static_cast<std::size_t>(args[1]);
                const std::size_t sw = fw->sw(i, n);
                return (sw >= 1 && sw <= width) ? 1 : 0;
            };
            return minimize(guess_dfao(oracle));
        };
        std::vector<Dfao> reps;
        for (std::size_t width = 1; width <= 3; ++width) {
            reps.push_back(make_rep(width));
        }

        // minimize idempotence
        for (std::size_t k = 0; k < reps.size(); ++k) {
            if (minimize(reps[k]).state_count() != reps[k].state_count()) {
                failure = witness(family.name, static_cast<std::int64_t>(k + 1), 0,
                                  "minimize is not idempotent on rep acceptor");
                break;
            }
        }
        if (failure) break;

        // equivalence contract: reflexive, symmetric, counterexamples concrete
        EquivalenceResult same = equivalent(reps[2], minimize(reps[2]));
        if (!same.equivalent) {
            failure = witness(family.name, 3, 0,
                              "acceptor is not equivalent to its own minimization");
            break;
        }
        EquivalenceResult diff = equivalent(reps[1], reps[2]);
        EquivalenceResult diff_rev = equivalent(reps[2], reps[1]);
        if (diff.equivalent || diff_rev.equivalent || !diff.counterexample) {
            failure = witness(family.name, 2, 3,
                              "rep2 and rep3 should differ with a witness");
            break;
        }
        if (evaluate(reps[1], *diff.counterexample) ==
            evaluate(reps[2], *diff.counterexample)) {
            failure = witness(family.name, 2, 3,
                              "equivalence counterexample does not separate");
            break;
        }

        // prioritized product equals the smallest accepted width
        Dfao combined = combine({{&reps[2], 3}, {&reps[1], 2}, {&reps[0], 1}});
        for (std::uint64_t i = 0; i <= grid && !failure; ++i) {
            for (std::uint64_t n = 0; n <= grid; ++n) {
                const std::size_t sw =
                    family.widths->sw(static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(n));
                const int expected = (sw >= 1 && sw <= 3) ? static_cast<int>(sw) : 0;
                if (evaluate_nat(combined, i, n) != expected) {
                    failure = witness(family.name, static_cast<std::int64_t>(i),
                                      static_cast<std::int64_t>(n),
                                      "combine output differs from the width DP");
                    break;
                }
            }
        }
        if (failure) break;
        r.witnesses.push_back(witness(
            family.name, static_cast<std::int64_t>(grid),
            static_cast<std::int64_t>(grid),
            "combine(rep3=3, rep2=2, rep1=1) matches min width on the grid"));

        // width saturation as a machine identity: the acceptor for widths
        // up to B and the one for widths up to B+1 recognize the same pairs
        const std::size_t b = family.saturation_width;
        Dfao rep_b = make_rep(b);
        Dfao rep_b1 = make_rep(b + 1);
        EquivalenceResult saturated = equivalent(rep_b, rep_b1);
        if (!saturated.equivalent) {
            failure = witness(family.name, static_cast<std::int64_t>(b),
                              static_cast<std::int64_t>(b + 1),
                              "rep" + std::to_string(b) + " and rep" +
                                  std::to_string(b + 1) +
                                  " differ on " + saturated.counterexample->to_string());
            break;
        }
        r.witnesses.push_back(witness(
            family.name, static_cast<std::int64_t>(b), static_cast<std::int64_t>(b + 1),
            "rep" + std::to_string(b) + " is equivalent to rep" +
                std::to_string(b + 1)));
        r.witnesses.push_back(witness(
            family.name, static_cast<std::int64_t>(minimize(combined).state_count()), 0,
            "informational: minimized 3-width DFAO state count"));
    }

    r.pass = !failure;
    if (failure) r.witnesses.push_back(*failure);
}

// ---------------------------------------------------------------- registry

struct ClaimDef {
    ClaimInfo info;
    Params defaults;
    void (*run)(const Params&, ClaimReport&);
};

const std::vector<ClaimDef>& registry() {
    static const std::vector<ClaimDef> defs = {
        {{"automata-algebra",
          "minimize idempotence, equivalence witnesses, combine = min width",
          "On synthesized rep acceptors for Thue-Morse (base 2) and Fibonacci "
          "(Zeckendorf): minimize is idempotent, inequivalent machines yield "
          "concrete counterexamples, combine(rep3=3, rep2=2, rep1=1) equals the "
          "DP width wherever it is at most 3 on all i, n <= bound, and the "
          "width bound saturates as a machine identity (rep7 = rep8 for "
          "Thue-Morse, rep3 = rep4 for Fibonacci)."},
         {{"bound", 64}, {"tm_train", 511}, {"fib_train", 376}},
         claim_automata_algebra},
        {{"dp-oracle-exhaustive",
          "width DP equals brute-force enumeration on all short binary words",
          "For every binary word of length <= bound, the DP width profile "
          "(sw, lw, per-width counts, total, uniqueness) equals brute-force "
          "cut-set enumeration, and witness factorizations match sw/lw."},
         {{"bound", 12}},
         claim_dp_oracle_exhaustive},
        {{"fib-factor-bound",
          "Fibonacci factors have sw in {0,1,2,3}, width 3 attained",
          "Over the Fibonacci prefix of length bound, every factor of length "
          "<= max_len has sw <= 3 and width 3 occurs."},
         {{"bound", 2000}, {"max_len", 200}},
         claim_fib_factor_bound},
        {{"fib-prefix-bound",
          "Fibonacci prefixes have sw in {0,1,2}, width 2 attained",
          "Every prefix of the Fibonacci word up to length bound has sw <= 2 "
          "and width 2 occurs."},
         {{"bound", 2000}},
         claim_fib_prefix_bound},
        {{"intro-example",
          "aaaababa has exactly the three known factorizations",
          "aaaababa = (aaaa)(baba) = (aaa)(ababa) = (aa)(aa)(baba); sw = 2, "
          "lw = 3, and no other factorization exists."},
         {},
         claim_intro_example},
        {{"pf-dichotomy",
          "paperfolding words split into width <= 7 and width = 10 classes",
          "For every instruction sequence with min_instr <= |u| <= bound, either "
          "all factorizable factors have sw <= 7 or some factor has sw = 10; "
          "both classes occur, and the -+++... family lies in the first."},
         {{"bound", 10}, {"min_instr", 8}},
         claim_pf_dichotomy},
        {{"pf-length-bound",
          "factorizable paperfolding factors have length <= 45, 45 attained",
          "Over all instruction sequences with |u| <= bound, every factorizable "
          "factor has length <= 45, and 45 is reached."},
         {{"bound", 10}},
         claim_pf_length_bound},
        {{"pf-width-bound",
          "all paperfolding factors have sw <= 10",
          "Over all instruction sequences with |u| <= bound, every factor of "
          "the folded word has sw <= 10."},
         {{"bound", 10}},
         claim_pf_width_bound},
        {{"rp-width-bound",
          "regular paperfolding factors have sw <= 10, width 10 attained",
          "Over the regular paperfolding prefix of length bound, every factor "
          "of length <= max_len has sw <= 10 and width 10 occurs."},
         {{"bound", 4096}, {"max_len", 64}},
         claim_rp_width_bound},
        {{"rs-23-states",
          "Rudin-Shapiro capped-prefix acceptor: 23 states, verified inductively",
          "The acceptor guessed from the blocks-<=cap prefix DP on n <= bound "
          "minimizes to exactly 23 states, matches the DP on the whole box, "
          "passes the two-sided induction up to induct, accepts arbitrarily "
          "large n, and the largest accepted prefix has lw >= n/cap."},
         {{"bound", 16384}, {"induct", 4096}, {"cap", 8}},
         claim_rs_23_states},
        {{"tm-dfao-28",
          "Thue-Morse width DFAO minimizes to 28 states",
          "The DFAO guessed from the width DP on i, n <= bound, minimized, has "
          "exactly 28 states including the dead state and agrees with the DP "
          "on all i, n <= verify."},
         {{"bound", 512}, {"verify", 1024}, {"suffix_depth", 12}},
         claim_tm_dfao_28},
        {{"tm-uniqueness",
          "factorizable Thue-Morse factors factor uniquely",
          "Every factorizable factor of length <= max_len in the Thue-Morse "
          "prefix of length bound has exactly one factorization, and no factor "
          "has two factorizations with different first-block lengths."},
         {{"bound", 4096}, {"max_len", 128}},
         claim_tm_uniqueness},
        {{"tm-width-bound",
          "Thue-Morse factors have sw <= 7; the seven sample factors hit 1..7",
          "Over the Thue-Morse prefix of length bound, every factor of length "
          "<= max_len has sw <= 7, and the sample factors at (1,2), (5,4), "
          "(5,6), (5,12), (5,14), (45,20), (45,22) have widths 1..7 exactly."},
         {{"bound", 4096}, {"max_len", 128}},
         claim_tm_width_bound},
        {{"zeckendorf-roundtrip",
          "Zeckendorf encode/decode round-trips; canonical strings are distinct",
          "decode(encode(n)) = n for all n <= bound in both digit orders, "
          "encodings never contain adjacent 1s, and canonical strings of length "
          "<= bij_len decode to pairwise distinct naturals."},
         {{"bound", 100000}, {"bij_len", 16}},
         claim_zeckendorf_roundtrip},
    };
    return defs;
}

const ClaimDef& find_claim(const std::string& id) {
    for (const auto& def : registry()) {
        if (def.info.id == id) return def;
    }
    std::string message = "unknown claim '" + id + "'; valid claims:";
    for (const auto& def : registry()) message += " " + def.info.id;
    throw std::invalid_argument(message);
}

} // namespace

std::vector<ClaimInfo> enumerate_claims() {
    std::vector<ClaimInfo> out;
    out.reserve(registry().size());
    for (const auto& def : registry()) out.push_back(def.info);
    return out;
}

Params claim_defaults(const std::string& claim_id) {
    return find_claim(claim_id).defaults;
}

ClaimReport run_claim(const std::string& claim_id, const Params& overrides) {
    const ClaimDef& def = find_claim(claim_id);
    Params params = def.defaults;
    for (const auto& [key, value] : overrides) {
        auto it = params.find(key);
        if (it == params.end()) {
            std::string message = "claim '" + claim_id + "' has no parameter '" +
                                  key + "'; valid parameters:";
            for (const auto& [k, v] : params) {
                message += " " + k;
                (void)v;
            }
            if (params.empty()) message += " (none)";
            throw std::invalid_argument(message);
        }
        it->second = value;
    }

    ClaimReport report;
    report.claim_id = claim_id;
    report.parameters = params;
    const auto begin = std::chrono::steady_clock::now();
    try {
        def.run(params, report);
    } catch (const std::exception& e) {
        report.pass = false;
        report.witnesses.push_back(
            Witness{claim_id, 0, 0, std::string("checker failed: ") + e.what()});
    }
    const auto end = std::chrono::steady_clock::now();
    report.runtime_seconds = std::chrono::duration<double>(end - begin).count();
    if (!report.pass && report.witnesses.empty()) {
        report.witnesses.push_back(Witness{claim_id, 0, 0, "no witness recorded"});
    }
    return report;
}

std::string ClaimReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : parameters) j["parameters"][key] = value;
    j["status"] = pass ? "pass" : "fail";
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) {
        nlohmann::ordered_json entry;
        entry["sequence"] = w.sequence;
        entry["i"] = w.i;
        entry["n"] = w.n;
        entry["detail"] = w.detail;
        j["witnesses"].push_back(entry);
    }
    j["runtime_seconds"] = runtime_seconds;
    return j.dump(2);
}

} // namespace repfact::claims
