#include "repfact/brute.hpp"

#include <stdexcept>

namespace repfact::brute {

std::vector<std::size_t> periods(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periods of the empty word");
    std::vector<std::size_t> out;
    const std::size_t n = w.size();
    for (std::size_t p = 1; p <= n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (w[i] != w[i + p]) { ok = false; break; }
        }
        if (ok) out.push_back(p);
    }
    return out;
}

bool is_repetition(const Word& w) {
    if (w.empty()) return false;
    return 2 * repfact::brute::periods(w).front() <= w.size();
}

namespace {

void extend(const Word& w, std::vector<std::size_t>& cuts,
            const std::function<void(const Factorization&)>& visit) {
    const std::size_t start = cuts.back();
    if (start == w.size()) {
        visit(Factorization{cuts});
        return;
    }
    for (std::size_t end = start + 2; end <= w.size(); ++end) {
        if (!repfact::brute::is_repetition(w.factor(start, end - start))) continue;
        cuts.push_back(end);
        extend(w, cuts, visit);
        cuts.pop_back();
    }
}

} // namespace

void enumerate_factorizations(const Word& w,
                              const std::function<void(const Factorization&)>& visit) {
    if (w.empty()) throw std::invalid_argument("factorizations of the empty word");
    std::vector<std::size_t> cuts{0};
    extend(w, cuts, visit);
}

WidthProfile profile(const Word& w) {
    WidthProfile p;
    enumerate_factorizations(w, [&](const Factorization& f) {
        p.counts[f.width()] += 1;
        p.total += 1;
    });
    if (p.total > 0) {
        p.sw = p.counts.begin()->first;
        p.lw = p.counts.rbegin()->first;
        p.unique = (p.total == 1);
    }
    return p;
}

} // namespace repfact::brute
