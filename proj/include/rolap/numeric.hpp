#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rolap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] BigInt pow2(unsigned e);
[[nodiscard]] BigInt ipow(const BigInt& base, unsigned e);
[[nodiscard]] BigInt binomial(unsigned n, unsigned k);

/// Decimal rendering of an exact rational, rounded half away from zero.
[[nodiscard]] std::string to_decimal(const Rational& r, int places = 1);

/// Exact family size coefficient * 2^(n - offset), independent of n.
struct SymbolicSize {
    BigInt coefficient;
    int offset = 0;

    /// Concrete size at word length n; throws DomainError when n < offset.
    [[nodiscard]] BigInt evaluate(int n) const;

    /// Coefficient after rewriting at a larger offset (coefficient * 2^(target - offset)).
    [[nodiscard]] BigInt coefficient_at(int target_offset) const;

    /// Value of the size divided by 2^n, i.e. coefficient / 2^offset.
    [[nodiscard]] Rational density() const;

    /// "216 x 2^(n-12)"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SymbolicSize& a, const SymbolicSize& b);
    friend std::strong_ordering operator<=>(const SymbolicSize& a, const SymbolicSize& b);
};

}  // namespace rolap
