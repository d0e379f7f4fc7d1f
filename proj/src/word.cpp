#include "repfact/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

namespace repfact {

Word::Word(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    for (Symbol s : symbols_) {
        if (s >= alphabet_size_) {
            throw std::invalid_argument(
                "word symbol " + std::to_string(int(s)) +
                " outside alphabet of size " + std::to_string(alphabet_size_));
        }
    }
}

Word Word::from_string(std::string_view text) {
    bool all_digits = !text.empty() &&
                      std::all_of(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    if (all_digits) {
        Symbol maxv = 0;
        for (char c : text) {
            auto s = static_cast<Symbol>(c - '0');
            maxv = std::max(maxv, s);
            symbols.push_back(s);
        }
        return Word(std::move(symbols), std::size_t(maxv) + 1);
    }
    std::array<int, 256> seen{};
    seen.fill(-1);
    Symbol next = 0;
    std::vector<char> display;
    for (unsigned char c : text) {
        if (seen[c] < 0) {
            seen[c] = next++;
            display.push_back(static_cast<char>(c));
        }
        symbols.push_back(static_cast<Symbol>(seen[c]));
    }
    Word w(std::move(symbols), next);
    w.display_ = std::move(display);
    return w;
}

Word Word::factor(std::size_t i, std::size_t n) const {
    if (i > size() || n > size() - i) {
        throw std::out_of_range("factor(" + std::to_string(i) + ", " +
                                std::to_string(n) + ") out of range for length " +
                                std::to_string(size()));
    }
    Word w(std::vector<Symbol>(symbols_.begin() + i, symbols_.begin() + i + n),
           alphabet_size_);
    w.display_ = display_;
    return w;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(size());
    for (Symbol s : symbols_) {
        if (s < display_.size()) {
            out.push_back(display_[s]);
        } else {
            out.push_back(alphabet_size_ <= 10 ? char('0' + s) : char('a' + s));
        }
    }
    return out;
}

std::string Word::display_1based(std::size_t i, std::size_t n) const {
    if (i == 0) throw std::out_of_range("display_1based indexes from 1");
    return factor(i - 1, n).to_string();
}

UnfoldingInstructions UnfoldingInstructions::from_string(std::string_view text) {
    UnfoldingInstructions u;
    u.steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+':
            case '1': u.steps.push_back(1); break;
            case '-': u.steps.push_back(-1); break;
            default:
                throw std::invalid_argument(
                    std::string("bad unfolding instruction character '") + c + "'");
        }
    }
    return u;
}

std::string UnfoldingInstructions::to_string() const {
    std::string out;
    out.reserve(steps.size());
    for (auto s : steps) out.push_back(s > 0 ? '+' : '-');
    return out;
}

const char* sequence_name(SequenceId id) {
    switch (id) {
        case SequenceId::fibonacci: return "fibonacci";
        case SequenceId::thue_morse: return "thue_morse";
        case SequenceId::regular_paperfolding: return "regular_paperfolding";
        case SequenceId::rudin_shapiro: return "rudin_shapiro";
    }
    throw std::invalid_argument("unknown sequence id");
}

MorphismSpec fibonacci_spec() {
    return MorphismSpec{{{0, 1}, {0}}, {}, 0};
}

MorphismSpec thue_morse_spec() {
    return MorphismSpec{{{0, 1}, {1, 0}}, {}, 0};
}

MorphismSpec regular_paperfolding_spec() {
    // 0 -> 01, 1 -> 21, 2 -> 03, 3 -> 23 under the coding n -> floor(n/2)
    return MorphismSpec{{{0, 1}, {2, 1}, {0, 3}, {2, 3}}, {0, 0, 1, 1}, 0};
}

namespace {

void check_prolongable(const MorphismSpec& spec) {
    if (spec.seed >= spec.rules.size()) {
        throw std::invalid_argument("morphism seed has no rule");
    }
    const auto& seed_rule = spec.rules[spec.seed];
    if (seed_rule.size() < 2 || seed_rule.front() != spec.seed) {
        throw std::invalid_argument(
            "morphism is not prolongable: rules(seed) must start with the seed "
            "and have length >= 2");
    }
    for (const auto& rule : spec.rules) {
        if (rule.empty()) throw std::invalid_argument("erasing morphism rule");
        for (Symbol s : rule) {
            if (s >= spec.rules.size()) {
                throw std::invalid_argument("morphism rule uses symbol " +
                                            std::to_string(int(s)) +
                                            " that has no rule");
            }
        }
    }
    if (!spec.coding.empty() && spec.coding.size() < spec.rules.size()) {
        throw std::invalid_argument("coding does not cover the internal alphabet");
    }
}

} // namespace

Word fixed_point_prefix(const MorphismSpec& spec, std::size_t n) {
    check_prolongable(spec);

    std::size_t coded_alphabet = 0;
    if (spec.coding.empty()) {
        coded_alphabet = spec.rules.size();
    } else {
        for (Symbol s : spec.coding) coded_alphabet = std::max<std::size_t>(coded_alphabet, s + 1);
    }
    if (n == 0) return Word({}, coded_alphabet);

    std::vector<Symbol> buf{spec.seed};
    while (buf.size() < n) {
        std::vector<Symbol> next;
        next.reserve(buf.size() * 2);
        for (Symbol s : buf) {
            const auto& img = spec.rules[s];
            next.insert(next.end(), img.begin(), img.end());
            if (next.size() >= n) break;
        }
        if (next.size() <= buf.size()) {
            throw std::invalid_argument("morphism iteration does not grow");
        }
        buf = std::move(next);
    }
    buf.resize(n);
    if (!spec.coding.empty()) {
        for (Symbol& s : buf) s = spec.coding[s];
    }
    return Word(std::move(buf), coded_alphabet);
}

namespace {

Word rudin_shapiro_prefix(std::size_t n) {
    std::vector<Symbol> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        // parity of (overlapping) "11" occurrences in the binary expansion
        std::uint64_t x = v;
        out.push_back(static_cast<Symbol>(__builtin_popcountll(x & (x >> 1)) & 1));
    }
    return Word(std::move(out), 2);
}

} // namespace

Word sequence_prefix(SequenceId id, std::size_t n) {
    switch (id) {
        case SequenceId::fibonacci: return fixed_point_prefix(fibonacci_spec(), n);
        case SequenceId::thue_morse: return fixed_point_prefix(thue_morse_spec(), n);
        case SequenceId::regular_paperfolding:
            return fixed_point_prefix(regular_paperfolding_spec(), n);
        case SequenceId::rudin_shapiro: return rudin_shapiro_prefix(n);
    }
    throw std::invalid_argument("unknown sequence id");
}

Word paperfolding_word(const UnfoldingInstructions& u) {
    std::vector<Symbol> w;
    w.reserve(u.steps.empty() ? 0 : (std::size_t(1) << u.steps.size()) - 1);
    for (auto step : u.steps) {
        if (step != 1 && step != -1) {
            throw std::invalid_argument("unfolding instructions must be +1 or -1");
        }
        std::vector<Symbol> next;
        next.reserve(w.size() * 2 + 1);
        next = w;
        next.push_back(step > 0 ? 0 : 1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) next.push_back(1 - *it);
        w = std::move(next);
    }
    return Word(std::move(w), 2);
}

} // namespace repfact
