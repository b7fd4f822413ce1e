#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rolap/numeric.hpp"

namespace rolap {

/// Memoized n-step Fibonacci numbers for a fixed step count z:
///   F_i = 0 for -z+2 <= i <= 0, F_1 = 1, F_i = F_{i-1} + ... + F_{i-z} for i >= 2.
///
/// Not synchronized; use one instance per thread.
class FibTable {
public:
    explicit FibTable(int z);

    [[nodiscard]] int step() const noexcept { return z_; }

    /// F_i for i >= -z+2; throws DomainError below that.
    [[nodiscard]] const BigInt& operator()(long i);

private:
    int z_;
    std::vector<BigInt> values_;  // values_[j] = F_{j - z + 2}
    BigInt window_sum_;           // sum of the last z stored values
};

/// F_i^(z); z >= 1, i >= -z+2.
[[nodiscard]] BigInt fib_nstep(int z, long i);

/// Number of binary words of length len with no run of z consecutive zeros (= F_{len+2}^(z)).
[[nodiscard]] BigInt count_no_zero_run(int len, int z);

/// phi(len, weight, z): words of length len and the given weight whose cyclically
/// consecutive ones are separated by at least z zeros.  Exact enumeration, len <= 24.
[[nodiscard]] std::uint64_t phi(int len, int weight, int z);

/// Words of length len with no cyclic run of z or more zeros (the all-zero word excluded).
/// Counted by splitting at the first and last one: sum_{s<z} (s+1) F_{len-s}^(z).
[[nodiscard]] BigInt cyclic_no_zero_run(int len, int z);

/// nu_a: cyclic_no_zero_run(2^a, a-1); a >= 2.
[[nodiscard]] BigInt nu(int a);

/// Exhaustive-scan version of nu for a <= 4 (at most 2^16 words).
[[nodiscard]] BigInt nu_brute_force(int a);

/// value / 2^e as a double, for large e.
[[nodiscard]] double scaled_ratio(const BigInt& value, unsigned e);

// Upper bounds -----------------------------------------------------------

/// (k, n-1)-overlap-free codes over q symbols: q^n / (2n - 2k + 1).
[[nodiscard]] Rational upper_bound_weak(int n, int k, int q = 2);

/// (1, k)-overlap-free codes, k <= n/2: q^n / (2k).
[[nodiscard]] Rational upper_bound_1k(int n, int k, int q = 2);

/// Independent-set bound for binary (1, k)-overlap-free codes: 2^(n-4) + 2^(n-k-2).
[[nodiscard]] BigInt upper_bound_graph(int n, int k);

// Lower bounds -----------------------------------------------------------

enum class ExplicitBound { gen1, gen2, gen3 };

[[nodiscard]] std::string to_string(ExplicitBound b);
[[nodiscard]] ExplicitBound parse_explicit_bound(const std::string& s);

/// Coefficient c with C(k, n) >= c * 2^n: 100/(967k), 2/(9k), or 1/(4k) (k a power of two).
[[nodiscard]] Rational lower_bound_explicit(int k, ExplicitBound variant);

/// (1 - k 2^-z) 2^(k-1): union bound over all runs; F_{k+1}^(z) exceeds it strictly.
[[nodiscard]] Rational zero_run_union_bound(int k, int z);

/// (1 - k 2^(-z-1)) 2^(k-1): union bound over first occurrences; F_{k+1}^(z) is at least this.
[[nodiscard]] Rational zero_run_first_occurrence_bound(int k, int z);

/// Lower bounds on the Gilbert-Levenshtein size S(n).
struct ClassicBounds {
    Rational nine_n;                  ///< 2^n / (9n)
    std::optional<Rational> eight_n;  ///< 2^n / (8n), n a power of two
    /// Asymptotic 2^n / (2e n); e is irrational so only the symbolic form is exact.
    std::string lev_asymptotic_symbolic = "1/(2e*n) * 2^n";
    double lev_asymptotic_constant = 0;  ///< 2e, for display
    double lev_asymptotic_value = 0;     ///< 2^n / (2e n), for display
};

[[nodiscard]] ClassicBounds classic_bounds(int n);

[[nodiscard]] bool is_power_of_two(long v) noexcept;

}  // namespace rolap
