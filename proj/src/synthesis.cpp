#include "repfact/synthesis.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "repfact/factorize.hpp"
#include "repfact/parallel.hpp"
#include "repfact/repetition.hpp"
#include "repfact/word.hpp"

namespace repfact {

namespace {

// Symbols are flat tuple indices, track 0 most significant.
using Sym = unsigned;
using Str = std::vector<Sym>;

struct LearnContext {
    const OracleSpec* oracle;
    unsigned digit_bound;
    std::size_t arity;
    std::size_t alphabet;
    std::size_t max_string_len; // every valid string this long decodes in-box
    bool zeckendorf;
    DigitOrder order;
    std::vector<Str> suffix_pool; // sorted by length; lengths non-decreasing
    std::vector<std::size_t> pool_cutoff_by_len; // entries with |x| <= L

    std::size_t cutoff(std::size_t prefix_len) const {
        if (prefix_len > max_string_len) return 0; // out of box: no evidence
        std::size_t avail = max_string_len - prefix_len;
        avail = std::min(avail, pool_cutoff_by_len.size() - 1);
        return pool_cutoff_by_len[avail];
    }
};

// Value of an arbitrary digit string: decode every track (illegal
// Zeckendorf tracks mean the dead value 0) and ask the oracle.
int string_value(const LearnContext& ctx, const Str& s) {
    const unsigned bound = ctx.digit_bound;
    std::vector<std::uint64_t> args(ctx.arity, 0);
    if (ctx.zeckendorf) {
        for (std::size_t t = 0; t < ctx.arity; ++t) {
            unsigned prev = 0;
            for (std::size_t p = 0; p < s.size(); ++p) {
                std::size_t pos = ctx.order == DigitOrder::msd ? p : s.size() - 1 - p;
                std::size_t shift = ctx.arity - 1 - t;
                unsigned digit = s[pos];
                for (std::size_t k = 0; k < shift; ++k) digit /= bound;
                digit %= bound;
                if (digit == 1 && prev == 1) return 0; // illegal representation
                prev = digit;
            }
        }
        // Zeckendorf value: msd-first digit d at distance r from the lsd end
        // contributes fib value with index r (1, 2, 3, 5, ...).
        for (std::size_t t = 0; t < ctx.arity; ++t) {
            std::uint64_t fib_prev = 1, fib_cur = 1, value = 0;
            for (std::size_t p = 0; p < s.size(); ++p) {
                std::size_t pos = ctx.order == DigitOrder::msd ? s.size() - 1 - p : p;
                std::size_t shift = ctx.arity - 1 - t;
                unsigned digit = s[pos];
                for (std::size_t k = 0; k < shift; ++k) digit /= bound;
                digit %= bound;
                if (digit) value += fib_cur;
                std::uint64_t nxt = fib_prev + fib_cur;
                fib_prev = fib_cur;
                fib_cur = nxt;
            }
            args[t] = value;
        }
    } else {
        for (std::size_t t = 0; t < ctx.arity; ++t) {
            std::uint64_t value = 0;
            std::size_t shift = ctx.arity - 1 - t;
            for (std::size_t p = 0; p < s.size(); ++p) {
                std::size_t pos = ctx.order == DigitOrder::msd ? p : s.size() - 1 - p;
                unsigned digit = s[pos];
                for (std::size_t k = 0; k < shift; ++k) digit /= bound;
                digit %= bound;
                value = value * bound + digit;
            }
            args[t] = value;
        }
    }
    return ctx.oracle->eval(args);
}

std::size_t max_in_box_length(const OracleSpec& o) {
    const std::uint64_t bound = o.training_bound;
    if (o.numeration.kind == NumerationSystem::Kind::zeckendorf) {
        // longest L with F(L+2) - 1 <= bound, basis values 1, 2, 3, 5, ...
        std::uint64_t fib_prev = 1, fib_cur = 1;
        std::size_t len = 0;
        for (;;) {
            std::uint64_t nxt = fib_prev + fib_cur; // F(len+3)
            if (nxt - 1 > bound) break;
            fib_prev = fib_cur;
            fib_cur = nxt;
            ++len;
        }
        return len;
    }
    const std::uint64_t k = o.numeration.base;
    std::size_t len = 0;
    std::uint64_t max_val = 0;
    while (max_val * k + (k - 1) <= bound) {
        max_val = max_val * k + (k - 1);
        ++len;
    }
    return len;
}

std::vector<Str> build_suffix_pool(std::size_t alphabet, std::size_t depth,
                                   std::size_t max_len) {
    depth = std::min(depth, max_len);
    std::vector<Str> pool;
    pool.push_back({}); // empty suffix: the value of the prefix itself

    // exhaustive short suffixes
    std::size_t exhaustive = 0;
    std::size_t count = 1;
    while (exhaustive < depth && count * alphabet <= 2048) {
        count *= alphabet;
        ++exhaustive;
    }
    std::vector<Str> level{{}};
    for (std::size_t len = 1; len <= exhaustive; ++len) {
        std::vector<Str> next;
        next.reserve(level.size() * alphabet);
        for (const auto& s : level) {
            for (Sym a = 0; a < alphabet; ++a) {
                Str e = s;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        }
        level = std::move(next);
        pool.insert(pool.end(), level.begin(), level.end());
    }

    // deterministic random sample of longer suffixes
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (std::size_t len = exhaustive + 1; len <= depth; ++len) {
        std::set<Str> sample;
        const std::size_t want = 64;
        for (std::size_t tries = 0; tries < want * 8 && sample.size() < want; ++tries) {
            Str s(len);
            for (auto& sym : s) sym = static_cast<Sym>(rng() % alphabet);
            sample.insert(std::move(s));
        }
        pool.insert(pool.end(), sample.begin(), sample.end());
    }
    return pool;
}

std::string render(const Str& s, const Dfao& shape) {
    DigitString d;
    d.arity = shape.arity;
    for (Sym sym : s) {
        auto tuple = shape.symbol_tuple(sym);
        d.digits.insert(d.digits.end(), tuple.begin(), tuple.end());
    }
    return d.to_string();
}

Dfao guess_once(const LearnContext& ctx) {
    std::vector<Str> reps;
    std::vector<std::vector<int>> sigs; // values over the pool prefix
    std::vector<std::vector<int>> trans;

    auto signature = [&](const Str& u) {
        std::vector<int> sig;
        const std::size_t n = ctx.cutoff(u.size());
        sig.reserve(n);
        Str scratch = u;
        for (std::size_t x = 0; x < n; ++x) {
            scratch.resize(u.size());
            scratch.insert(scratch.end(), ctx.suffix_pool[x].begin(),
                           ctx.suffix_pool[x].end());
            sig.push_back(string_value(ctx, scratch));
        }
        return sig;
    };

    auto class_of = [&](const Str& u) {
        std::vector<int> sig = signature(u);
        for (std::size_t c = 0; c < reps.size(); ++c) {
            const std::size_t overlap = std::min(sig.size(), sigs[c].size());
            if (std::equal(sig.begin(), sig.begin() + overlap, sigs[c].begin())) {
                return static_cast<int>(c);
            }
        }
        reps.push_back(u);
        sigs.push_back(std::move(sig));
        trans.emplace_back();
        return static_cast<int>(reps.size() - 1);
    };

    class_of({}); // start class
    for (std::size_t c = 0; c < reps.size(); ++c) {
        trans[c].resize(ctx.alphabet);
        for (Sym a = 0; a < ctx.alphabet; ++a) {
            Str u = reps[c];
            u.push_back(a);
            trans[c][a] = class_of(u);
        }
    }

    Dfao m;
    m.numeration = ctx.oracle->numeration;
    m.arity = ctx.arity;
    m.start = 0;
    m.outputs.resize(reps.size());
    m.transitions.resize(reps.size() * ctx.alphabet);
    for (std::size_t c = 0; c < reps.size(); ++c) {
        m.outputs[c] = sigs[c].empty() ? 0 : sigs[c][0];
        for (Sym a = 0; a < ctx.alphabet; ++a) {
            m.transitions[c * ctx.alphabet + a] = trans[c][a];
        }
    }
    // designate the absorbing zero state when present
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        if (m.outputs[s] != 0) continue;
        bool absorbing = true;
        for (std::size_t a = 0; a < ctx.alphabet; ++a) {
            if (m.next(static_cast<int>(s), a) != static_cast<int>(s)) {
                absorbing = false;
                break;
            }
        }
        if (absorbing) { m.dead = static_cast<int>(s); break; }
    }
    m.validate();
    return m;
}

OracleCheck check_box(const Dfao& m, const OracleSpec& o, std::uint64_t bound) {
    const std::uint64_t side = bound + 1;
    std::uint64_t cells = 1;
    for (std::size_t t = 0; t < o.arity; ++t) cells *= side;

    // scan first coordinate in parallel; keep the lexicographically first
    // mismatch so reports are deterministic
    std::vector<std::optional<std::vector<std::uint64_t>>> found(side);
    parallel_for(0, side, [&](std::size_t head) {
        std::vector<std::uint64_t> args(o.arity, 0);
        args[0] = head;
        std::uint64_t inner = cells / side;
        for (std::uint64_t rest = 0; rest < inner; ++rest) {
            std::uint64_t r = rest;
            for (std::size_t t = o.arity; t-- > 1;) {
                args[t] = r % side;
                r /= side;
            }
            if (evaluate_nat(m, args) != o.eval(args)) {
                found[head] = args;
                return;
            }
        }
    });
    for (const auto& hit : found) {
        if (hit) return {false, *hit};
    }
    return {true, {}};
}

} // namespace

Dfao guess_dfao(const OracleSpec& o, std::size_t suffix_depth) {
    if (!o.eval) throw std::invalid_argument("oracle has no eval function");
    if (o.arity == 0) throw std::invalid_argument("oracle arity must be positive");

    const bool zeck = o.numeration.kind == NumerationSystem::Kind::zeckendorf;
    if (suffix_depth == 0) suffix_depth = zeck ? 16 : 12;

    LearnContext ctx;
    ctx.oracle = &o;
    ctx.digit_bound = o.numeration.digit_bound();
    ctx.arity = o.arity;
    ctx.alphabet = 1;
    for (std::size_t t = 0; t < o.arity; ++t) ctx.alphabet *= ctx.digit_bound;
    ctx.max_string_len = max_in_box_length(o);
    ctx.zeckendorf = zeck;
    ctx.order = o.numeration.order;
    if (ctx.max_string_len == 0) {
        throw std::invalid_argument("training bound too small to sample any string");
    }

    const std::size_t max_depth = suffix_depth + 8;
    Dfao last;
    OracleCheck verdict;
    for (std::size_t depth = suffix_depth; depth <= max_depth; depth += 4) {
        ctx.suffix_pool = build_suffix_pool(ctx.alphabet, depth, ctx.max_string_len);
        std::stable_sort(ctx.suffix_pool.begin(), ctx.suffix_pool.end(),
                         [](const Str& x, const Str& y) { return x.size() < y.size(); });
        ctx.pool_cutoff_by_len.assign(ctx.max_string_len + 1, 0);
        for (std::size_t len = 0; len <= ctx.max_string_len; ++len) {
            std::size_t cut = 0;
            while (cut < ctx.suffix_pool.size() && ctx.suffix_pool[cut].size() <= len) {
                ++cut;
            }
            ctx.pool_cutoff_by_len[len] = cut;
        }

        last = guess_once(ctx);
        verdict = check_box(last, o, o.training_bound);
        if (verdict.ok) return last;
    }

    DigitString bad = encode_tuple(verdict.counterexample, o.numeration);
    throw SynthesisError(
        "guessed machine disagrees with its training data; suffix depth too small",
        bad.to_string(), render({}, last));
}

OracleCheck verify_against_oracle(const Dfao& m, const OracleSpec& o,
                                  std::uint64_t bound) {
    if (m.arity != o.arity || !(m.numeration == o.numeration)) {
        throw std::invalid_argument("machine and oracle signatures do not match");
    }
    return check_box(m, o, bound);
}

bool inductive_check_rsrf(const Dfao& m, std::size_t cap, std::uint64_t bound) {
    if (m.arity != 1 || !m.is_acceptor()) {
        throw std::invalid_argument("inductive check needs an arity-1 acceptor");
    }
    const std::size_t n_max = static_cast<std::size_t>(bound);
    Word rs = sequence_prefix(SequenceId::rudin_shapiro, n_max);
    RepetitionTable table(rs, cap);
    std::vector<bool> dp = capped_prefix_factorizable(rs, cap);

    std::vector<bool> accepted(n_max + 1, false);
    for (std::size_t n = 0; n <= n_max; ++n) accepted[n] = evaluate_nat(m, n) == 1;

    // base cases straight against the capped DP
    for (std::size_t n = 0; n <= std::min(cap, n_max); ++n) {
        if (accepted[n] != dp[n]) return false;
    }
    // induction step: closure under appending a repetition block
    for (std::size_t n = cap + 1; n <= n_max; ++n) {
        for (std::size_t i = 1; i <= cap; ++i) {
            if (accepted[n - i] && table.at(n - i, i) && !accepted[n]) return false;
        }
    }
    // converse closure: accepted prefixes end in a repetition block over an
    // accepted (or empty) remainder, so acceptance implies factorizability
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (!accepted[n]) continue;
        bool justified = false;
        for (std::size_t i = 2; i <= std::min(cap, n); ++i) {
            if (table.at(n - i, i) && (n - i == 0 || accepted[n - i])) {
                justified = true;
                break;
            }
        }
        if (!justified) return false;
    }
    return true;
}

namespace {

// canonicality checker: accepts exactly the canonical encodings of naturals
struct CanonicalChecker {
    // small explicit DFA; state 0 is the start
    std::vector<std::vector<int>> next; // [state][digit]
    std::vector<bool> accept;
};

CanonicalChecker make_checker(const NumerationSystem& sys) {
    const unsigned k = sys.digit_bound();
    const bool zeck = sys.kind == NumerationSystem::Kind::zeckendorf;
    CanonicalChecker c;
    if (sys.order == DigitOrder::msd) {
        if (!zeck) {
            // states: 0 start, 1 read "0", 2 in-number, 3 reject
            c.next = {{1, 2}, {3, 3}, {2, 2}, {3, 3}};
            for (auto& row : c.next) row.resize(k, row.back());
            for (unsigned d = 1; d < k; ++d) { c.next[0][d] = 2; c.next[2][d] = 2; }
            c.accept = {false, true, true, false};
        } else {
            // states: 0 start, 1 read "0", 2 after 0-digit, 3 after 1-digit,
            // 4 reject
            c.next = {{1, 3}, {4, 4}, {2, 3}, {2, 4}, {4, 4}};
            c.accept = {false, true, true, true, false};
        }
    } else {
        if (!zeck) {
            // canonical lsd: last digit nonzero, or exactly "0"
            // states: 0 start, 1 read "0" only, 2 ends-nonzero, 3 ends-zero
            c.next = {{1, 2}, {3, 2}, {3, 2}, {3, 2}};
            for (auto& row : c.next) row.resize(k, row.back());
            for (unsigned d = 1; d < k; ++d) {
                c.next[0][d] = 2; c.next[1][d] = 2; c.next[2][d] = 2; c.next[3][d] = 2;
            }
            c.accept = {false, true, true, false};
        } else {
            // lsd Zeckendorf: no adjacent 1s and most significant digit (the
            // last one read) must be 1, or the string is exactly "0".
            // states: 0 start, 1 read "0" only, 2 last 0, 3 last 1, 4 reject
            c.next = {{1, 3}, {2, 3}, {2, 3}, {2, 4}, {4, 4}};
            c.accept = {false, true, false, true, false};
        }
    }
    return c;
}

} // namespace

bool accepts_arbitrarily_large(const Dfao& m) {
    m.validate();
    if (m.arity != 1) {
        throw std::invalid_argument("accepts_arbitrarily_large needs arity 1");
    }
    if (!m.is_acceptor()) {
        throw std::invalid_argument("accepts_arbitrarily_large needs a boolean acceptor");
    }
    const unsigned k = m.numeration.digit_bound();
    CanonicalChecker c = make_checker(m.numeration);
    const std::size_t cn = c.accept.size();

    auto id = [&](int ms, int cs) { return static_cast<std::size_t>(ms) * cn + cs; };
    const std::size_t total = m.state_count() * cn;

    // forward reachability from (start, start)
    std::vector<bool> reach(total, false);
    std::vector<std::size_t> stack{id(m.start, 0)};
    reach[stack[0]] = true;
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        int ms = static_cast<int>(q / cn), cs = static_cast<int>(q % cn);
        for (unsigned d = 0; d < k; ++d) {
            std::size_t to = id(m.next(ms, d), c.next[cs][d]);
            if (!reach[to]) { reach[to] = true; stack.push_back(to); }
        }
    }

    // backward reachability from accepting product states
    std::vector<std::vector<std::size_t>> rev(total);
    for (std::size_t q = 0; q < total; ++q) {
        if (!reach[q]) continue;
        int ms = static_cast<int>(q / cn), cs = static_cast<int>(q % cn);
        for (unsigned d = 0; d < k; ++d) {
            rev[id(m.next(ms, d), c.next[cs][d])].push_back(q);
        }
    }
    std::vector<bool> useful(total, false);
    for (std::size_t q = 0; q < total; ++q) {
        if (reach[q] && m.outputs[q / cn] == 1 && c.accept[q % cn] && !useful[q]) {
            useful[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        for (std::size_t p : rev[q]) {
            if (reach[p] && !useful[p]) { useful[p] = true; stack.push_back(p); }
        }
    }

    // a cycle within the trimmed subgraph means infinitely many accepted
    // canonical strings
    std::vector<int> color(total, 0);
    std::vector<std::pair<std::size_t, unsigned>> dfs;
    for (std::size_t root = 0; root < total; ++root) {
        if (!reach[root] || !useful[root] || color[root] != 0) continue;
        dfs.emplace_back(root, 0);
        color[root] = 1;
        while (!dfs.empty()) {
            const std::size_t q = dfs.back().first;
            if (dfs.back().second >= k) {
                color[q] = 2;
                dfs.pop_back();
                continue;
            }
            const unsigned d = dfs.back().second++;
            int ms = static_cast<int>(q / cn), cs = static_cast<int>(q % cn);
            std::size_t to = id(m.next(ms, d), c.next[cs][d]);
            if (!reach[to] || !useful[to]) continue;
            if (color[to] == 1) return true;
            if (color[to] == 0) {
                color[to] = 1;
                dfs.emplace_back(to, 0);
            }
        }
    }
    return false;
}

} // namespace repfact
