#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rolap/codecheck.hpp"
#include "rolap/numeric.hpp"

namespace rolap {

// Doubling -----------------------------------------------------------------

/// One level of the doubling sequence; words are packed k-bit integers, ascending.
struct DoublingStep {
    int k = 0;
    std::vector<std::uint64_t> prefixes;
    std::vector<std::uint64_t> suffixes;
    /// Words that appeared in both doubled sets, ascending.
    std::vector<std::uint64_t> duplicates;
    /// For each duplicate, whether the prefix copy was the one removed.
    std::vector<bool> removed_from_prefixes;

    [[nodiscard]] std::uint64_t product() const noexcept { return prefixes.size() * suffixes.size(); }
    [[nodiscard]] SymbolicSize size() const;
    [[nodiscard]] PrefixSuffixSystem system() const;
};

/// steps[i] holds level k = i + 1.
struct DoublingTrace {
    std::vector<DoublingStep> steps;

    [[nodiscard]] const DoublingStep& at(int k) const { return steps.at(static_cast<std::size_t>(k - 1)); }
};

inline constexpr int kMaxDoublingK = 23;

/// Starts from P = {0}, S = {1}.  Each step extends P on the right and S on the
/// left by one bit, then removes one copy of every word in both sets: duplicates
/// are taken in ascending order and removed from whichever set is currently
/// larger, from S on ties.  1 <= k_max <= 23, else CapacityError.
[[nodiscard]] DoublingTrace doubling(int k_max);

// m-minimum ----------------------------------------------------------------

struct MMinimumResult {
    int k = 0;
    std::uint64_t m = 0;
    PrefixSuffixSystem system;
    SymbolicSize size;
};

inline constexpr int kMaxMMinimumK = 20;

/// P = {0, ..., m-1}, S = every k-word whose suffixes avoid all prefixes of P;
/// the m in [1, 2^(k-1)] maximizing |P| |S| (smallest m on ties).
/// 2 <= k <= 20, else CapacityError.
[[nodiscard]] MMinimumResult m_minimum(int k);

/// |S| for the prefix set {0, ..., m-1}; 1 <= m <= 2^k.
[[nodiscard]] std::uint64_t m_minimum_suffix_count(int k, std::uint64_t m);

// Zero block ---------------------------------------------------------------

struct ZeroBlockResult {
    int k = 0;
    int z = 0;
    SymbolicSize size;  ///< F_{k+1}^(z) 2^(k-z) x 2^(n-2k)
    std::optional<PrefixSuffixSystem> system;
};

inline constexpr int kMaxZeroBlockEmitK = 24;

/// Coefficient F_{k+1}^(z) 2^(k-z) of the zero-block family for a fixed z, 1 <= z <= k-1.
[[nodiscard]] BigInt zero_block_coefficient(int k, int z);

/// Scans z in [1, k-1] for the largest coefficient (smallest z on ties).  With
/// emit_sets the explicit P (words opening with z zeros) and S (words ending in 1
/// without z consecutive zeros) are attached; that needs k <= 24.  k >= 2.
[[nodiscard]] ZeroBlockResult zero_block(int k, bool emit_sets = false);

/// The explicit zero-block system for one z; k <= 24.
[[nodiscard]] PrefixSuffixSystem zero_block_system(int k, int z);

// Gilbert-Levenshtein ------------------------------------------------------

struct GilbertLevenshteinResult {
    int n = 0;
    int z = 0;
    BigInt size;                   ///< S(n) = F_{n-z}^(z)
    std::vector<BigInt> per_z;     ///< per_z[z-1] = F_{n-z}^(z), z = 1..n-1
    std::optional<Code> code;
};

inline constexpr int kMaxGilbertLevenshteinEmitN = 32;

/// L_z: words 0^z 1 m 1 where m has no z consecutive zeros (for z = n-1 the single
/// word 0^(n-1) 1).  3 <= n <= 32, 1 <= z <= n-1.
[[nodiscard]] Code gilbert_levenshtein_code(int n, int z);

/// Best z in [1, n-1] (smallest on ties); n >= 3.  emit_code needs n <= 32.
[[nodiscard]] GilbertLevenshteinResult gilbert_levenshtein(int n, bool emit_code = false);

}  // namespace rolap
