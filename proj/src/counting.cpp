#include "rolap/counting.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "rolap/error.hpp"
#include "rolap/word.hpp"

namespace rolap {

FibTable::FibTable(int z) : z_(z) {
    if (z < 1) throw DomainError("n-step Fibonacci needs z >= 1");
    // Indices -z+2 .. 0 are zero, then F_1 = 1.
    values_.assign(static_cast<std::size_t>(z - 1), BigInt(0));
    values_.emplace_back(1);
    window_sum_ = 1;
}

const BigInt& FibTable::operator()(long i) {
    const long first = 2L - z_;
    if (i < first) {
        throw DomainError("F_" + std::to_string(i) + "^(" + std::to_string(z_) + ") is undefined");
    }
    const auto idx = static_cast<std::size_t>(i - first);
    while (values_.size() <= idx) {
        BigInt next = window_sum_;
        window_sum_ += next;
        if (values_.size() >= static_cast<std::size_t>(z_)) {
            window_sum_ -= values_[values_.size() - static_cast<std::size_t>(z_)];
        }
        values_.push_back(std::move(next));
    }
    return values_[idx];
}

BigInt fib_nstep(int z, long i) {
    FibTable table(z);
    return table(i);
}

BigInt count_no_zero_run(int len, int z) {
    if (len < 0 || z < 1) throw DomainError("count_no_zero_run needs len >= 0, z >= 1");
    return fib_nstep(z, len + 2L);
}

namespace {

std::uint64_t rotate_left(std::uint64_t w, int j, int len) noexcept {
    if (j % len == 0) return w;
    j %= len;
    return ((w << j) | (w >> (len - j))) & low_mask(len);
}

}  // namespace

std::uint64_t phi(int len, int weight, int z) {
    if (len > 24) throw CapacityError("phi: exhaustive enumeration limited to length 24");
    if (len < 2 || z < 1 || z >= len) throw DomainError("phi needs 1 <= z < len");
    if (weight < 0 || weight >= len) throw DomainError("phi needs 0 <= weight < len");
    if (weight == 0) return 1;

    std::uint64_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << len;
    // Gosper's hack over all words of the given weight.
    for (std::uint64_t w = low_mask(weight); w < limit;) {
        std::uint64_t shadow = 0;
        for (int j = 1; j <= z; ++j) shadow |= rotate_left(w, j, len);
        if ((w & shadow) == 0) ++count;
        const std::uint64_t c = w & (~w + 1);
        const std::uint64_t r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
    }
    return count;
}

BigInt cyclic_no_zero_run(int len, int z) {
    if (z < 1 || z >= len) throw DomainError("cyclic_no_zero_run needs 1 <= z < len");
    // First one at position i (i leading zeros), last one followed by j zeros; the
    // wrapped run has i + j = s < z zeros and the span between is 1 m 1 (or a lone 1)
    // of length len - s with no internal run of z zeros: F_{len-s}^(z) of them.
    FibTable fib(z);
    BigInt total = 0;
    for (int s = 0; s < z; ++s) total += BigInt(s + 1) * fib(len - s);
    return total;
}

BigInt nu(int a) {
    if (a < 2 || a > 30) throw DomainError("nu needs 2 <= a <= 30");
    return cyclic_no_zero_run(1 << a, a - 1);
}

BigInt nu_brute_force(int a) {
    if (a < 2) throw DomainError("nu needs a >= 2");
    if (a > 4) throw CapacityError("nu brute force limited to a <= 4");
    const int len = 1 << a;
    const int z = a - 1;
    const std::uint64_t mask = low_mask(len);
    std::uint64_t count = 0;
    for (std::uint64_t w = 1; w <= mask; ++w) {
        // A cyclic zero run of length >= z is a position where z consecutive
        // (cyclic) positions of the complement are all one.
        const std::uint64_t zeros = ~w & mask;
        std::uint64_t run = zeros;
        for (int j = 1; j < z; ++j) run &= rotate_left(zeros, j, len);
        if (run == 0) ++count;
    }
    return count;
}

double scaled_ratio(const BigInt& value, unsigned e) {
    // Keep 60 significant bits before converting.
    const unsigned bits = value == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
    const int drop = static_cast<int>(bits) - 60;
    if (drop <= 0) return std::ldexp(value.convert_to<double>(), -static_cast<int>(e));
    const BigInt top = value >> drop;
    return std::ldexp(top.convert_to<double>(), drop - static_cast<int>(e));
}

Rational upper_bound_weak(int n, int k, int q) {
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (k < 1 || k > n - 1) throw DomainError("upper_bound_weak needs 1 <= k <= n-1");
    return Rational(ipow(BigInt(q), static_cast<unsigned>(n)), BigInt(2 * n - 2 * k + 1));
}

Rational upper_bound_1k(int n, int k, int q) {
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (k < 1 || 2 * k > n) throw DomainError("upper_bound_1k needs 1 <= k <= n/2");
    return Rational(ipow(BigInt(q), static_cast<unsigned>(n)), BigInt(2 * k));
}

BigInt upper_bound_graph(int n, int k) {
    if (k < 2 || n < k + 2) throw DomainError("upper_bound_graph needs k >= 2 and n >= k+2");
    return pow2(static_cast<unsigned>(n - 4)) + pow2(static_cast<unsigned>(n - k - 2));
}

std::string to_string(ExplicitBound b) {
    switch (b) {
        case ExplicitBound::gen1: return "gen1";
        case ExplicitBound::gen2: return "gen2";
        case ExplicitBound::gen3: return "gen3";
    }
    return "?";
}

ExplicitBound parse_explicit_bound(const std::string& s) {
    if (s == "gen1") return ExplicitBound::gen1;
    if (s == "gen2") return ExplicitBound::gen2;
    if (s == "gen3") return ExplicitBound::gen3;
    throw DomainError("unknown bound variant '" + s + "'");
}

bool is_power_of_two(long v) noexcept {
    return v > 0 && std::has_single_bit(static_cast<unsigned long>(v));
}

Rational lower_bound_explicit(int k, ExplicitBound variant) {
    if (k < 2) throw DomainError("explicit lower bounds need k >= 2");
    switch (variant) {
        case ExplicitBound::gen1: return Rational(100, 967 * BigInt(k));
        case ExplicitBound::gen2: return Rational(2, 9 * BigInt(k));
        case ExplicitBound::gen3:
            if (!is_power_of_two(k)) throw DomainError("gen3 bound needs k a power of two");
            return Rational(1, 4 * BigInt(k));
    }
    throw DomainError("unknown bound variant");
}

Rational zero_run_union_bound(int k, int z) {
    if (z < 1 || z > k - 1) throw DomainError("needs 1 <= z <= k-1");
    return (Rational(1) - Rational(k, pow2(static_cast<unsigned>(z)))) * pow2(static_cast<unsigned>(k - 1));
}

Rational zero_run_first_occurrence_bound(int k, int z) {
    if (z < 1 || z > k - 1) throw DomainError("needs 1 <= z <= k-1");
    return (Rational(1) - Rational(k, pow2(static_cast<unsigned>(z + 1)))) * pow2(static_cast<unsigned>(k - 1));
}

ClassicBounds classic_bounds(int n) {
    if (n < 3) throw DomainError("classic bounds need n >= 3");
    ClassicBounds b;
    const BigInt top = pow2(static_cast<unsigned>(n));
    b.nine_n = Rational(top, BigInt(9 * n));
    if (is_power_of_two(n)) b.eight_n = Rational(top, BigInt(8 * n));
    b.lev_asymptotic_constant = 2.0 * std::numbers::e;
    b.lev_asymptotic_value = std::ldexp(1.0, n) / (b.lev_asymptotic_constant * n);
    return b;
}

}  // namespace rolap
