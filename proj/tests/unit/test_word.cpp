#include <doctest.h>

#include <sstream>
#include <string>

#include "rolap/error.hpp"
#include "rolap/word.hpp"

using rolap::BitWord;

namespace {

BitWord w(const char* s) { return BitWord::parse(s); }

std::string to_chars(std::uint64_t v, int len) {
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i) {
        if ((v >> (len - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

}  // namespace

TEST_CASE("from_integer pads on the left") {
    CHECK(BitWord::from_integer(3, 4).to_string() == "0011");
    CHECK(BitWord::from_integer(0, 5).to_string() == "00000");
    CHECK(BitWord::from_integer(11, 6).to_string() == "001011");
    CHECK_THROWS_AS((void)BitWord::from_integer(16, 4), rolap::DomainError);
    CHECK_THROWS_AS((void)BitWord::from_integer(0, 0), rolap::DomainError);
    CHECK(BitWord::from_integer(~std::uint64_t{0}, 64).to_string() == std::string(64, '1'));
}

TEST_CASE("prefix and suffix") {
    CHECK(w("0111").prefix(2) == w("01"));
    CHECK(w("0111").suffix(2) == w("11"));
    CHECK(w("0111").prefix(4) == w("0111"));
    CHECK(w("0111").suffix(4) == w("0111"));
    CHECK_THROWS_AS((void)w("0111").prefix(0), rolap::DomainError);
    CHECK_THROWS_AS((void)w("0111").suffix(5), rolap::DomainError);
}

TEST_CASE("t_overlap examples") {
    CHECK(rolap::t_overlap(w("0111"), w("1101"), 2));
    CHECK(rolap::t_overlap(w("0000"), w("0000"), 3));
    CHECK_FALSE(rolap::t_overlap(w("0011"), w("0011"), 2));
    CHECK_THROWS_AS((void)rolap::t_overlap(w("011"), w("0111"), 1), rolap::DomainError);
    CHECK_THROWS_AS((void)rolap::t_overlap(w("0111"), w("0111"), 0), rolap::DomainError);
}

TEST_CASE("cyclic_shift") {
    CHECK(w("0011").cyclic_shift(1) == w("0110"));
    CHECK(w("0011").cyclic_shift(0) == w("0011"));
    CHECK(w("1000").cyclic_shift(3) == w("0100"));
    CHECK_THROWS_AS((void)w("1000").cyclic_shift(4), rolap::DomainError);
}

TEST_CASE("parsing and printing") {
    CHECK(w("001011").value() == 11);
    CHECK(w("001011").length() == 6);
    CHECK_THROWS_AS((void)BitWord::parse("0102"), rolap::ParseError);
    CHECK_THROWS_AS((void)BitWord::parse(""), rolap::ParseError);
    std::ostringstream os;
    os << w("0110");
    CHECK(os.str() == "0110");
    CHECK(w("0110").complement() == w("1001"));
    CHECK(w("01").concat(w("110")) == w("01110"));
    CHECK(w("01").at(1) == false);
    CHECK(w("01").at(2) == true);
}

TEST_CASE("ordering is lexicographic within a length") {
    CHECK(w("0011") < w("0100"));
    CHECK(w("111") < w("0000"));
    CHECK(w("0011") != w("011"));
}

TEST_CASE("t_overlap agrees with a character reference for all words up to length 10") {
    for (int len = 1; len <= 10; ++len) {
        const std::uint64_t count = std::uint64_t{1} << len;
        std::vector<std::string> text;
        for (std::uint64_t v = 0; v < count; ++v) text.push_back(to_chars(v, len));
        long mismatches = 0;
        for (std::uint64_t u = 0; u < count; ++u) {
            const BitWord bu = BitWord::from_integer(u, len);
            for (std::uint64_t v = 0; v < count; ++v) {
                const BitWord bv = BitWord::from_integer(v, len);
                for (int t = 1; t <= len; ++t) {
                    const bool ref = text[u].compare(0, static_cast<std::size_t>(t), text[v],
                                                     static_cast<std::size_t>(len - t), static_cast<std::size_t>(t)) == 0;
                    if (ref != rolap::t_overlap(bu, bv, t)) ++mismatches;
                }
            }
        }
        CHECK_MESSAGE(mismatches == 0, "length " << len);
    }
}

TEST_CASE("prefix of from_integer is the integer quotient") {
    for (int k = 1; k <= 12; ++k) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            const BitWord word = BitWord::from_integer(m, k);
            for (int t = 1; t <= k; ++t) {
                REQUIRE(word.prefix(t) == BitWord::from_integer(m >> (k - t), t));
            }
        }
    }
}

TEST_CASE("cyclic shifts compose additively") {
    for (int len = 1; len <= 8; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            const BitWord word = BitWord::from_integer(v, len);
            for (int i = 0; i < len; ++i) {
                for (int j = 0; j < len; ++j) {
                    REQUIRE(word.cyclic_shift(i).cyclic_shift(j) == word.cyclic_shift((i + j) % len));
                }
            }
        }
    }
}
