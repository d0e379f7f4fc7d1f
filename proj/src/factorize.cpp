#include "repfact/factorize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "repfact/parallel.hpp"

namespace repfact {

namespace {

constexpr std::uint16_t kNone = std::numeric_limits<std::uint16_t>::max();

// Sparse width polynomial: (width, count) pairs sorted by width. The value
// attached to prefix length j lists how many factorizations of each width
// w[i..i+j-1] has.
using Poly = std::vector<std::pair<std::size_t, BigInt>>;

void add_shifted(Poly& acc, const Poly& src) {
    // acc += x * src, merging sorted by width
    Poly merged;
    merged.reserve(acc.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < acc.size() || b < src.size()) {
        std::size_t wa = a < acc.size() ? acc[a].first : std::size_t(-1);
        std::size_t wb = b < src.size() ? src[b].first + 1 : std::size_t(-1);
        if (wa == wb) {
            merged.emplace_back(wa, acc[a].second + src[b].second);
            ++a, ++b;
        } else if (wa < wb) {
            merged.push_back(acc[a++]);
        } else {
            merged.emplace_back(wb, src[b++].second);
        }
    }
    acc = std::move(merged);
}

// Width polynomials for every prefix length 0..n_max of the factor starting
// at i, using the shared repetition table.
std::vector<Poly> poly_rows(const RepetitionTable& table, std::size_t i,
                            std::size_t n_max) {
    std::vector<Poly> rows(n_max + 1);
    rows[0] = {{0, BigInt(1)}};
    const std::size_t block_cap = table.longest_repetition();
    for (std::size_t j = 2; j <= n_max; ++j) {
        Poly acc;
        std::size_t k_min = j > block_cap ? j - block_cap : 0;
        for (std::size_t k = k_min; k + 2 <= j; ++k) {
            if (rows[k].empty()) continue;
            if (table.at(i + k, j - k)) add_shifted(acc, rows[k]);
        }
        rows[j] = std::move(acc);
    }
    return rows;
}

WidthProfile profile_from_poly(const Poly& poly) {
    WidthProfile p;
    if (poly.empty()) return p;
    p.sw = poly.front().first;
    p.lw = poly.back().first;
    for (const auto& [width, count] : poly) {
        p.counts.emplace(width, count);
        p.total += count;
    }
    p.unique = (p.total == 1);
    return p;
}

// Suffix DP on a single word: widths achievable for w[k..] so witnesses can
// be grown greedily from the left with lexicographically smallest cuts.
struct SuffixWidths {
    std::vector<std::uint16_t> minw; // kNone = not factorizable
    std::vector<std::uint16_t> maxw;
};

SuffixWidths suffix_widths(const Word& w, const RepetitionTable& table) {
    const std::size_t n = w.size();
    SuffixWidths s;
    s.minw.assign(n + 1, kNone);
    s.maxw.assign(n + 1, kNone);
    s.minw[n] = 0;
    s.maxw[n] = 0;
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t b = k + 2; b <= n; ++b) {
            if (!table.at(k, b - k)) continue;
            if (s.minw[b] != kNone) {
                s.minw[k] = std::min<std::uint16_t>(s.minw[k], s.minw[b] + 1);
                s.maxw[k] = (s.maxw[k] == kNone)
                                ? s.maxw[b] + 1
                                : std::max<std::uint16_t>(s.maxw[k], s.maxw[b] + 1);
            }
        }
    }
    return s;
}

std::optional<Factorization> witness(const Word& w, bool want_longest) {
    if (w.empty()) throw std::invalid_argument("factorization of the empty word");
    RepetitionTable table(w);
    SuffixWidths s = suffix_widths(w, table);
    const std::size_t n = w.size();
    if (s.minw[0] == kNone) return std::nullopt;

    const auto& goal = want_longest ? s.maxw : s.minw;
    Factorization f;
    f.cuts.push_back(0);
    std::size_t pos = 0;
    while (pos < n) {
        const std::uint16_t remaining = goal[pos];
        const std::size_t before = pos;
        // smallest next cut keeps the cut sequence lexicographically least
        for (std::size_t b = pos + 2; b <= n; ++b) {
            if (!table.at(pos, b - pos)) continue;
            if (goal[b] != kNone && goal[b] + 1 == remaining) {
                f.cuts.push_back(b);
                pos = b;
                break;
            }
        }
        if (pos == before) {
            throw std::logic_error("suffix width table is inconsistent");
        }
    }
    return f;
}

} // namespace

WidthProfile width_profile(const Word& w) {
    if (w.empty()) throw std::invalid_argument("width_profile of the empty word");
    RepetitionTable table(w);
    auto rows = poly_rows(table, 0, w.size());
    return profile_from_poly(rows[w.size()]);
}

std::optional<Factorization> shortest_factorization(const Word& w) {
    return witness(w, false);
}

std::optional<Factorization> longest_factorization(const Word& w) {
    return witness(w, true);
}

bool two_first_term_factorizations(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("two_first_term_factorizations of the empty word");
    }
    RepetitionTable table(w);
    SuffixWidths s = suffix_widths(w, table);
    const std::size_t n = w.size();
    std::size_t first_lengths = 0;
    for (std::size_t t = 2; t <= n; ++t) {
        if (!table.at(0, t)) continue;
        if (t == n || s.minw[t] != kNone) {
            if (++first_lengths >= 2) return true;
        }
    }
    return false;
}

FactorWidths::FactorWidths(const Word& w, Options opt)
    : len_(w.size()),
      max_len_(opt.max_len == 0 ? w.size() : std::min(opt.max_len, w.size())),
      width_cap_(opt.width_cap),
      has_lw_(opt.longest),
      has_totals_(opt.totals),
      table_(w, max_len_) {
    const std::size_t row = max_len_ + 1;
    sw_.assign(len_ * row, 0);
    if (has_lw_) lw_.assign(len_ * row, 0);
    if (has_totals_) totals_.assign(len_ * row, BigInt(0));

    // no block is longer than the longest repetition in the table
    const std::size_t block_cap = table_.longest_repetition();

    parallel_for(0, len_, [&](std::size_t i) {
        const std::size_t n_max = row_len(i);
        std::vector<std::uint16_t> minw(n_max + 1, kNone);
        std::vector<std::uint16_t> maxw;
        std::vector<BigInt> cnt;
        minw[0] = 0;
        if (has_lw_) { maxw.assign(n_max + 1, kNone); maxw[0] = 0; }
        if (has_totals_) { cnt.assign(n_max + 1, BigInt(0)); cnt[0] = 1; }

        for (std::size_t j = 2; j <= n_max; ++j) {
            std::size_t k_min = j > block_cap ? j - block_cap : 0;
            for (std::size_t k = k_min; k + 2 <= j; ++k) {
                if (minw[k] == kNone || !table_.at(i + k, j - k)) continue;
                minw[j] = std::min<std::uint16_t>(minw[j], minw[k] + 1);
                if (has_lw_) {
                    maxw[j] = (maxw[j] == kNone)
                                  ? maxw[k] + 1
                                  : std::max<std::uint16_t>(maxw[j], maxw[k] + 1);
                }
                if (has_totals_) cnt[j] += cnt[k];
            }
            // with a width cap, values above it only mean "more than cap"
            if (width_cap_ && minw[j] != kNone && minw[j] > width_cap_) {
                minw[j] = static_cast<std::uint16_t>(width_cap_ + 1);
            }
        }
        for (std::size_t n = 1; n <= n_max; ++n) {
            const std::size_t idx = i * row + n;
            sw_[idx] = (minw[n] == kNone) ? 0 : minw[n];
            if (has_lw_) lw_[idx] = (maxw[n] == kNone) ? 0 : maxw[n];
            if (has_totals_) totals_[idx] = std::move(cnt[n]);
        }
    });
}

std::size_t FactorWidths::row_len(std::size_t i) const {
    if (i >= len_) return 0;
    return std::min(max_len_, len_ - i);
}

std::size_t FactorWidths::index(std::size_t i, std::size_t n) const {
    if (i >= len_ || n > row_len(i)) {
        throw std::out_of_range("FactorWidths query out of range");
    }
    return i * (max_len_ + 1) + n;
}

std::size_t FactorWidths::sw(std::size_t i, std::size_t n) const {
    if (n == 0) return 0;
    return sw_[index(i, n)];
}

std::size_t FactorWidths::lw(std::size_t i, std::size_t n) const {
    if (!has_lw_) throw std::logic_error("FactorWidths built without longest widths");
    if (n == 0) return 0;
    return lw_[index(i, n)];
}

const BigInt& FactorWidths::total(std::size_t i, std::size_t n) const {
    if (!has_totals_) throw std::logic_error("FactorWidths built without totals");
    static const BigInt zero(0);
    if (n == 0) return zero;
    return totals_[index(i, n)];
}

bool FactorWidths::factorizable(std::size_t i, std::size_t n) const {
    return n > 0 && sw(i, n) > 0;
}

bool FactorWidths::two_first_term(std::size_t i, std::size_t n) const {
    if (n == 0) return false;
    (void)index(i, n);
    std::size_t first_lengths = 0;
    const std::size_t cap = std::min(n, table_.max_block());
    for (std::size_t t = 2; t <= cap; ++t) {
        if (!table_.at(i, t)) continue;
        if (t == n || (n - t <= row_len(i + t) && factorizable(i + t, n - t))) {
            if (++first_lengths >= 2) return true;
        }
    }
    return false;
}

std::vector<bool> capped_prefix_factorizable(const Word& w, std::size_t block_cap) {
    const std::size_t n_max = w.size();
    RepetitionTable table(w, block_cap);
    std::vector<bool> dp(n_max + 1, false);
    dp[0] = true; // seed: a factorization chain may start here
    for (std::size_t j = 2; j <= n_max; ++j) {
        for (std::size_t b = 2; b <= std::min(block_cap, j); ++b) {
            if (dp[j - b] && table.at(j - b, b)) { dp[j] = true; break; }
        }
    }
    dp[0] = false; // the empty word itself has no factorization
    return dp;
}

void profile_all_factors(
    const Word& w, std::size_t max_len,
    const std::function<void(std::size_t, std::size_t, const WidthProfile&)>& emit) {
    if (max_len > w.size()) {
        throw std::invalid_argument("profile_all_factors: max_len exceeds word length");
    }
    const std::size_t len = w.size();
    RepetitionTable table(w, max_len);

    // chunks of start positions are profiled in parallel and emitted in order
    const std::size_t chunk = std::max<std::size_t>(1, 4 * thread_budget());
    std::vector<std::vector<WidthProfile>> buffer(chunk);
    for (std::size_t base = 0; base < len; base += chunk) {
        const std::size_t count = std::min(chunk, len - base);
        parallel_for(0, count, [&](std::size_t off) {
            const std::size_t i = base + off;
            const std::size_t n_max = std::min(max_len, len - i);
            auto rows = poly_rows(table, i, n_max);
            auto& out = buffer[off];
            out.clear();
            out.reserve(n_max);
            for (std::size_t n = 1; n <= n_max; ++n) {
                out.push_back(profile_from_poly(rows[n]));
            }
        });
        for (std::size_t off = 0; off < count; ++off) {
            for (std::size_t n = 1; n <= buffer[off].size(); ++n) {
                emit(base + off, n, buffer[off][n - 1]);
            }
        }
    }
}

} // namespace repfact
