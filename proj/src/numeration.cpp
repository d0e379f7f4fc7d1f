#include "repfact/numeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace repfact {

NumerationSystem NumerationSystem::base_k_system(unsigned k, DigitOrder order) {
    if (k < 2) throw std::invalid_argument("base must be at least 2");
    return NumerationSystem{Kind::base_k, k, order};
}

NumerationSystem NumerationSystem::zeckendorf(DigitOrder order) {
    return NumerationSystem{Kind::zeckendorf, 2, order};
}

std::string NumerationSystem::to_string() const {
    std::string out = kind == Kind::zeckendorf ? "zeckendorf"
                                               : "base_" + std::to_string(base);
    out += order == DigitOrder::msd ? " msd" : " lsd";
    return out;
}

NumerationSystem NumerationSystem::parse(const std::string& kind_token,
                                         const std::string& order_token) {
    DigitOrder order;
    if (order_token == "msd") order = DigitOrder::msd;
    else if (order_token == "lsd") order = DigitOrder::lsd;
    else throw std::invalid_argument("unknown digit order '" + order_token + "'");

    if (kind_token == "zeckendorf") return zeckendorf(order);
    if (kind_token.rfind("base_", 0) == 0) {
        unsigned k = static_cast<unsigned>(std::stoul(kind_token.substr(5)));
        return base_k_system(k, order);
    }
    throw std::invalid_argument("unknown numeration kind '" + kind_token + "'");
}

void DigitString::push_tuple(std::span<const unsigned> tuple) {
    if (tuple.size() != arity) {
        throw std::invalid_argument("tuple arity mismatch");
    }
    digits.insert(digits.end(), tuple.begin(), tuple.end());
}

std::string DigitString::to_string() const {
    std::string out;
    for (std::size_t p = 0; p < length(); ++p) {
        out.push_back('[');
        for (std::size_t t = 0; t < arity; ++t) {
            if (t) out.push_back(',');
            out += std::to_string(at(p, t));
        }
        out.push_back(']');
    }
    return out;
}

namespace {

// Zeckendorf basis values 1, 2, 3, 5, 8, ... up to and including the first
// value > n.
std::vector<std::uint64_t> fib_basis(std::uint64_t n) {
    std::vector<std::uint64_t> basis{1, 2};
    while (basis.back() <= n) {
        basis.push_back(basis[basis.size() - 1] + basis[basis.size() - 2]);
    }
    return basis;
}

// Digits msd-first, canonical (no leading zeros except for zero itself).
std::vector<unsigned> raw_digits_msd(std::uint64_t n, const NumerationSystem& sys) {
    if (n == 0) return {0};
    std::vector<unsigned> digits;
    if (sys.kind == NumerationSystem::Kind::base_k) {
        while (n > 0) {
            digits.push_back(static_cast<unsigned>(n % sys.base));
            n /= sys.base;
        }
        std::reverse(digits.begin(), digits.end());
    } else {
        auto basis = fib_basis(n);
        std::size_t top = basis.size() - 1;
        while (basis[top] > n) --top; // greedy: largest basis value <= n
        for (std::size_t j = top + 1; j-- > 0;) {
            if (basis[j] <= n) {
                digits.push_back(1);
                n -= basis[j];
            } else {
                digits.push_back(0);
            }
        }
    }
    return digits;
}

} // namespace

DigitString encode(std::uint64_t n, const NumerationSystem& sys) {
    auto digits = raw_digits_msd(n, sys);
    if (sys.order == DigitOrder::lsd) std::reverse(digits.begin(), digits.end());
    DigitString out;
    out.arity = 1;
    out.digits.assign(digits.begin(), digits.end());
    return out;
}

std::uint64_t decode_track(const DigitString& d, std::size_t track,
                           const NumerationSystem& sys) {
    if (track >= d.arity) throw std::out_of_range("decode_track: no such track");
    const std::size_t len = d.length();
    std::vector<unsigned> digits(len);
    for (std::size_t p = 0; p < len; ++p) digits[p] = d.at(p, track);
    if (sys.order == DigitOrder::lsd) std::reverse(digits.begin(), digits.end());

    // digits are now msd-first
    const unsigned bound = sys.digit_bound();
    for (unsigned dig : digits) {
        if (dig >= bound) {
            throw std::invalid_argument("digit " + std::to_string(dig) +
                                        " out of range for " + sys.to_string());
        }
    }
    if (sys.kind == NumerationSystem::Kind::base_k) {
        std::uint64_t value = 0;
        for (unsigned dig : digits) value = value * sys.base + dig;
        return value;
    }
    // Zeckendorf: reject adjacent 1s anywhere; they correspond to the
    // dead state for illegal Fibonacci representations.
    for (std::size_t p = 0; p + 1 < digits.size(); ++p) {
        if (digits[p] == 1 && digits[p + 1] == 1) {
            throw std::invalid_argument("illegal Zeckendorf representation: adjacent 1s");
        }
    }
    std::uint64_t value = 0;
    std::uint64_t fib_prev = 1, fib_cur = 1; // basis value for the last position is 1
    // walk lsd-to-msd, tracking basis values 1, 2, 3, 5, ...
    for (std::size_t p = digits.size(); p-- > 0;) {
        if (digits[p] == 1) value += fib_cur;
        std::uint64_t nxt = fib_prev + fib_cur;
        fib_prev = fib_cur;
        fib_cur = nxt;
    }
    return value;
}

std::uint64_t decode(const DigitString& d, const NumerationSystem& sys) {
    if (d.arity != 1) {
        throw std::invalid_argument("decode requires an arity-1 digit string");
    }
    if (d.length() == 0) return 0;
    return decode_track(d, 0, sys);
}

DigitString encode_tuple(std::span<const std::uint64_t> values,
                         const NumerationSystem& sys) {
    if (values.empty()) throw std::invalid_argument("encode_tuple of no values");
    std::vector<std::vector<unsigned>> tracks;
    std::size_t max_len = 0;
    tracks.reserve(values.size());
    for (std::uint64_t v : values) {
        tracks.push_back(raw_digits_msd(v, sys));
        max_len = std::max(max_len, tracks.back().size());
    }
    for (auto& t : tracks) {
        // pad on the msd side; reversal below puts lsd padding on the right
        t.insert(t.begin(), max_len - t.size(), 0);
        if (sys.order == DigitOrder::lsd) std::reverse(t.begin(), t.end());
    }
    DigitString out;
    out.arity = values.size();
    out.digits.reserve(max_len * values.size());
    for (std::size_t p = 0; p < max_len; ++p) {
        for (const auto& t : tracks) out.digits.push_back(t[p]);
    }
    return out;
}

DigitString encode_pair(std::uint64_t a, std::uint64_t b,
                        const NumerationSystem& sys) {
    const std::uint64_t vals[2] = {a, b};
    return encode_tuple(vals, sys);
}

} // namespace repfact
