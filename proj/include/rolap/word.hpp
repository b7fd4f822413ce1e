#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace rolap {

inline constexpr int kMaxWordLength = 64;

/// Fixed-length binary word packed into a machine word.
///
/// Position 1 is the leftmost symbol and maps to the most significant bit, so
/// the packed value is the big-endian integer the word spells.  Bits above
/// `length()` are always zero.
class BitWord {
public:
    constexpr BitWord() = default;

    /// Throws DomainError unless 1 <= length <= 64 and value < 2^length.
    static BitWord from_integer(std::uint64_t value, int length);

    /// Parses '0'/'1' characters, most significant first.
    static BitWord parse(std::string_view text);

    [[nodiscard]] constexpr int length() const noexcept { return length_; }
    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return bits_; }

    /// Symbol at 1-based position i (1 = leftmost).
    [[nodiscard]] bool at(int i) const;

    [[nodiscard]] BitWord prefix(int t) const;
    [[nodiscard]] BitWord suffix(int t) const;

    /// Left rotation by j: a_1..a_l -> a_{j+1}..a_l a_1..a_j.
    [[nodiscard]] BitWord cyclic_shift(int j) const;

    /// this ∥ other
    [[nodiscard]] BitWord concat(const BitWord& other) const;

    [[nodiscard]] BitWord complement() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(const BitWord&, const BitWord&) = default;

    /// Orders by length, then by value; for equal lengths this is lexicographic order.
    friend constexpr std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    constexpr BitWord(std::uint64_t bits, int length) noexcept : bits_(bits), length_(length) {}

    std::uint64_t bits_ = 0;
    int length_ = 0;
};

/// Mask with the low `t` bits set; valid for 0 <= t <= 64.
[[nodiscard]] constexpr std::uint64_t low_mask(int t) noexcept {
    return t >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << t) - 1);
}

/// True iff the t-prefix of u equals the t-suffix of v.
/// Throws DomainError on length mismatch or t outside [1, length].
[[nodiscard]] bool t_overlap(const BitWord& u, const BitWord& v, int t);

/// Unchecked packed form of t_overlap for hot loops: both words have length n.
[[nodiscard]] constexpr bool packed_overlap(std::uint64_t u, std::uint64_t v, int n, int t) noexcept {
    return (u >> (n - t)) == (v & low_mask(t));
}

std::ostream& operator<<(std::ostream& os, const BitWord& w);

}  // namespace rolap

template <>
struct std::hash<rolap::BitWord> {
    std::size_t operator()(const rolap::BitWord& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.value() * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(w.length()));
    }
};
