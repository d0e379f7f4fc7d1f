#include "repfact/repetition.hpp"

#include <algorithm>
#include <stdexcept>

namespace repfact {

std::set<std::size_t> periods(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periods of the empty word");
    const std::size_t n = w.size();
    std::set<std::size_t> out;
    for (std::size_t p = 1; p <= n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (w[i] != w[i + p]) { ok = false; break; }
        }
        if (ok) out.insert(p);
    }
    return out;
}

bool is_repetition(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_repetition of the empty word");
    const std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (w[i] != w[i + p]) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

RepetitionTable::RepetitionTable(const Word& w)
    : RepetitionTable(w, w.size()) {}

RepetitionTable::RepetitionTable(const Word& w, std::size_t max_block)
    : len_(w.size()), max_block_(std::min(max_block, w.size())) {
    row_width_ = max_block_ + 1;
    bits_.assign(len_ * row_width_, false);
    build(w);
}

bool RepetitionTable::at(std::size_t i, std::size_t n) const {
    if (i + n > len_) throw std::out_of_range("RepetitionTable::at out of range");
    if (n > max_block_) throw std::out_of_range("RepetitionTable::at beyond block cap");
    if (n < 2) return false;
    return bits_[i * row_width_ + n];
}

void RepetitionTable::build(const Word& w) {
    if (len_ < 2 || max_block_ < 2) return;

    // reach[i] = max over shifts p handled so far of p + lce_p(i), where
    // lce_p(i) is the longest common extension of w[i..] and w[i+p..].
    // w[i..i+n-1] is a repetition iff some p <= n/2 has reach >= n, so after
    // processing shift p the rows n = 2p and n = 2p+1 are complete.
    std::vector<std::size_t> reach(len_, 0);
    std::vector<std::size_t> lce(len_ + 1, 0);

    const std::size_t max_shift = max_block_ / 2;
    for (std::size_t p = 1; p <= max_shift; ++p) {
        lce[len_ - p] = 0;
        for (std::size_t i = len_ - p; i-- > 0;) {
            lce[i] = (w[i] == w[i + p]) ? lce[i + 1] + 1 : 0;
        }
        for (std::size_t i = 0; i + p < len_; ++i) {
            reach[i] = std::max(reach[i], p + lce[i]);
        }
        for (std::size_t n : {2 * p, 2 * p + 1}) {
            if (n > max_block_) break;
            for (std::size_t i = 0; i + n <= len_; ++i) {
                if (reach[i] >= n) {
                    bits_[i * row_width_ + n] = true;
                    longest_ = std::max(longest_, n);
                }
            }
        }
    }
}

} // namespace repfact
