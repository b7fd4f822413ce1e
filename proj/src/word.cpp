#include "rolap/word.hpp"

#include "rolap/error.hpp"

namespace rolap {

BitWord BitWord::from_integer(std::uint64_t value, int length) {
    if (length < 1 || length > kMaxWordLength) {
        throw DomainError("word length " + std::to_string(length) + " outside [1, 64]");
    }
    if (length < 64 && value >> length != 0) {
        throw DomainError("value " + std::to_string(value) + " does not fit in " + std::to_string(length) + " bits");
    }
    return BitWord(value, length);
}

BitWord BitWord::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength)) {
        throw ParseError("word must have 1..64 symbols, got " + std::to_string(text.size()));
    }
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParseError("invalid symbol '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitWord(bits, static_cast<int>(text.size()));
}

bool BitWord::at(int i) const {
    if (i < 1 || i > length_) throw DomainError("position " + std::to_string(i) + " out of range");
    return (bits_ >> (length_ - i)) & 1U;
}

BitWord BitWord::prefix(int t) const {
    if (t < 1 || t > length_) throw DomainError("prefix length " + std::to_string(t) + " out of range");
    return BitWord(bits_ >> (length_ - t), t);
}

BitWord BitWord::suffix(int t) const {
    if (t < 1 || t > length_) throw DomainError("suffix length " + std::to_string(t) + " out of range");
    return BitWord(bits_ & low_mask(t), t);
}

BitWord BitWord::cyclic_shift(int j) const {
    if (j < 0 || j >= length_) throw DomainError("shift " + std::to_string(j) + " out of range");
    if (j == 0) return *this;
    const std::uint64_t rotated = ((bits_ << j) | (bits_ >> (length_ - j))) & low_mask(length_);
    return BitWord(rotated, length_);
}

BitWord BitWord::concat(const BitWord& other) const {
    if (length_ + other.length_ > kMaxWordLength) {
        throw CapacityError("concatenation exceeds 64 bits");
    }
    if (length_ == 0) return other;
    if (other.length_ == 0) return *this;
    return BitWord((bits_ << other.length_) | other.bits_, length_ + other.length_);
}

BitWord BitWord::complement() const noexcept {
    return BitWord(~bits_ & low_mask(length_), length_);
}

std::string BitWord::to_string() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
        if ((bits_ >> (length_ - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

bool t_overlap(const BitWord& u, const BitWord& v, int t) {
    if (u.length() != v.length()) throw DomainError("t_overlap: words differ in length");
    if (t < 1 || t > u.length()) throw DomainError("t_overlap: t = " + std::to_string(t) + " out of range");
    return packed_overlap(u.value(), v.value(), u.length(), t);
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) {
    return os << w.to_string();
}

}  // namespace rolap
