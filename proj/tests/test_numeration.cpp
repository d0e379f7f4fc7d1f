#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repfact/numeration.hpp"

using namespace repfact;

namespace {
const auto zeck_msd = NumerationSystem::zeckendorf(DigitOrder::msd);
const auto zeck_lsd = NumerationSystem::zeckendorf(DigitOrder::lsd);
const auto base2_msd = NumerationSystem::base_k_system(2, DigitOrder::msd);
const auto base2_lsd = NumerationSystem::base_k_system(2, DigitOrder::lsd);
const auto base3_msd = NumerationSystem::base_k_system(3, DigitOrder::msd);

DigitString from_bits(std::initializer_list<unsigned> bits) {
    DigitString d;
    d.arity = 1;
    d.digits.assign(bits.begin(), bits.end());
    return d;
}
} // namespace

TEST_CASE("zero encodes as a single digit") {
    for (const auto& sys : {zeck_msd, base2_msd, base3_msd}) {
        DigitString d = encode(0, sys);
        CHECK(d.length() == 1);
        CHECK(d.at(0, 0) == 0);
        CHECK(decode(d, sys) == 0);
    }
}

TEST_CASE("known encodings") {
    CHECK(encode(6, base2_msd).to_string() == "[1][1][0]");
    CHECK(encode(6, base2_lsd).to_string() == "[0][1][1]");
    CHECK(encode(4, zeck_msd).to_string() == "[1][0][1]"); // 3 + 1
    CHECK(decode(from_bits({1, 0, 1, 0, 0}), zeck_msd) == 11); // 8 + 3
    CHECK(decode(from_bits({0, 0, 1, 0}), zeck_msd) == 2); // padding-insensitive
}

TEST_CASE("illegal Zeckendorf strings are rejected") {
    CHECK_THROWS_AS((void)decode(from_bits({1, 1}), zeck_msd), std::invalid_argument);
    CHECK_THROWS_AS((void)decode(from_bits({0, 1, 1, 0}), zeck_lsd),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)decode(from_bits({2}), base2_msd), std::invalid_argument);
}

TEST_CASE("round trips in every system") {
    for (const auto& sys : {zeck_msd, zeck_lsd, base2_msd, base2_lsd, base3_msd}) {
        for (std::uint64_t n = 0; n <= 10000; ++n) {
            CAPTURE(sys.to_string());
            REQUIRE(decode(encode(n, sys), sys) == n);
        }
    }
}

TEST_CASE("zeckendorf canonical strings never contain adjacent ones") {
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        DigitString d = encode(n, zeck_msd);
        for (std::size_t q = 0; q + 1 < d.length(); ++q) {
            REQUIRE(!(d.at(q, 0) == 1 && d.at(q + 1, 0) == 1));
        }
    }
}

TEST_CASE("pair encodings") {
    CHECK(encode_pair(0, 0, base2_msd).to_string() == "[0,0]");
    CHECK(encode_pair(4, 1, zeck_msd).to_string() == "[1,0][0,0][1,1]");
    CHECK(encode_pair(5, 3, base2_msd).to_string() == "[1,0][0,1][1,1]");
    // lsd systems pad on the right
    CHECK(encode_pair(1, 2, base2_lsd).to_string() == "[1,0][0,1]");
}

TEST_CASE("pair projections recover the components") {
    for (const auto& sys : {zeck_msd, base2_msd, base2_lsd}) {
        for (std::uint64_t a = 0; a <= 60; ++a) {
            for (std::uint64_t b = 0; b <= 60; ++b) {
                DigitString d = encode_pair(a, b, sys);
                REQUIRE(decode_track(d, 0, sys) == a);
                REQUIRE(decode_track(d, 1, sys) == b);
            }
        }
    }
}

TEST_CASE("tuple encoding generalizes pairs") {
    const std::uint64_t vals[3] = {4, 0, 9};
    DigitString d = encode_tuple(vals, base2_msd);
    CHECK(d.arity == 3);
    CHECK(decode_track(d, 0, base2_msd) == 4);
    CHECK(decode_track(d, 1, base2_msd) == 0);
    CHECK(decode_track(d, 2, base2_msd) == 9);
}

TEST_CASE("rendering") {
    CHECK(encode_pair(4, 1, zeck_msd).to_string() == "[1,0][0,0][1,1]");
    CHECK(NumerationSystem::parse("base_2", "msd") == base2_msd);
    CHECK(NumerationSystem::parse("zeckendorf", "lsd") == zeck_lsd);
    CHECK_THROWS_AS(NumerationSystem::parse("roman", "msd"), std::invalid_argument);
    CHECK(base3_msd.to_string() == "base_3 msd");
}
