#include "rolap/numeric.hpp"

#include <algorithm>

#include "rolap/error.hpp"

namespace rolap {

BigInt pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

BigInt ipow(const BigInt& base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::string to_decimal(const Rational& r, int places) {
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;

    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::max(places, 0)));
    const BigInt scaled = (num * scale * 2 + den) / (den * 2);

    std::string digits = scaled.str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places)) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
    }
    if (negative && scaled != 0) digits.insert(0, 1, '-');
    return digits;
}

BigInt SymbolicSize::evaluate(int n) const {
    if (n < offset) {
        throw DomainError("cannot evaluate at n=" + std::to_string(n) + " below offset " + std::to_string(offset));
    }
    return coefficient << (n - offset);
}

BigInt SymbolicSize::coefficient_at(int target_offset) const {
    if (target_offset < offset) {
        throw DomainError("target offset below current offset");
    }
    return coefficient << (target_offset - offset);
}

Rational SymbolicSize::density() const {
    return Rational(coefficient, pow2(static_cast<unsigned>(offset)));
}

std::string SymbolicSize::to_string() const {
    return coefficient.str() + " x 2^(n-" + std::to_string(offset) + ")";
}

bool operator==(const SymbolicSize& a, const SymbolicSize& b) {
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const SymbolicSize& a, const SymbolicSize& b) {
    // a1 * 2^-c1 vs a2 * 2^-c2: shift the operand with the smaller offset.
    const int common = std::max(a.offset, b.offset);
    const BigInt lhs = a.coefficient << (common - a.offset);
    const BigInt rhs = b.coefficient << (common - b.offset);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace rolap
