#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rolap/numeric.hpp"
#include "rolap/word.hpp"

namespace rolap {

/// A set of distinct words sharing one length n, kept sorted ascending.
class Code {
public:
    explicit Code(int n);
    /// Throws DomainError on a length mismatch; duplicates are rejected.
    Code(int n, std::vector<BitWord> words);

    [[nodiscard]] int length() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
    [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
    [[nodiscard]] const std::vector<BitWord>& words() const noexcept { return words_; }
    [[nodiscard]] bool contains(const BitWord& w) const;

    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    friend bool operator==(const Code&, const Code&) = default;

private:
    int n_;
    std::vector<BitWord> words_;
};

/// Prefix set P and suffix set S of k-words; generates codes P ∥ x ∥ S.
struct PrefixSuffixSystem {
    int k = 0;
    std::vector<BitWord> prefixes;  ///< P, sorted, distinct
    std::vector<BitWord> suffixes;  ///< S, sorted, distinct

    /// Sorts, deduplicates and checks every member has length k.
    static PrefixSuffixSystem make(int k, std::vector<BitWord> prefixes, std::vector<BitWord> suffixes);
    static PrefixSuffixSystem from_integers(int k, std::span<const std::uint64_t> prefixes,
                                            std::span<const std::uint64_t> suffixes);
};

/// Ordered pair (u, v) whose t-prefix of u equals t-suffix of v.
struct OverlapWitness {
    BitWord u;
    BitWord v;
    int t = 0;

    friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

struct OverlapCheck {
    bool ok = true;
    std::optional<OverlapWitness> witness;  ///< smallest (t, u, v) when !ok
};

/// (t1, t2)-overlap-freeness over all ordered pairs, self-pairs included.
/// Requires 1 <= t1 <= t2 <= n-1 (DomainError otherwise).
[[nodiscard]] OverlapCheck is_overlap_free(const Code& code, int t1, int t2);

struct SystemCheck {
    bool ok = true;
    int t = 0;                    ///< first t with P|_t ∩ S|_t non-empty
    std::optional<BitWord> word;  ///< smallest colliding t-word
};

/// P|_t ∩ S|_t = ∅ for all 1 <= t <= k.
[[nodiscard]] SystemCheck validate_system(const PrefixSuffixSystem& sys);

/// { p ∥ x ∥ s }; n >= 2k, n <= 64.  Oversized requests throw CapacityError
/// (use symbolic_size for the count).
[[nodiscard]] Code expand_system(const PrefixSuffixSystem& sys, int n);

/// |P| |S| x 2^(n - 2k)
[[nodiscard]] SymbolicSize symbolic_size(const PrefixSuffixSystem& sys);

/// Upper limit on expand_system output, in words.
inline constexpr std::uint64_t kMaxExpandedWords = std::uint64_t{1} << 26;

struct MaxCodeResult {
    std::size_t size = 0;
    Code code{1};
    std::size_t candidates = 0;  ///< words free of self-overlaps in [t1, t2]
};

/// Exact maximum (t1, t2)-overlap-free code of length n <= 10, via maximum clique
/// in the compatibility graph of self-compatible words.  With `canonical`, the
/// lexicographically smallest optimum (as a sorted word list) is returned.
[[nodiscard]] MaxCodeResult brute_force_max_code(int n, int t1, int t2, bool canonical = false);

// Code files ---------------------------------------------------------------

/// "# n=<n> q=2" header, then one word per line.
void write_code(std::ostream& os, const Code& code);
void write_code_file(const std::string& path, const Code& code);

/// Blank lines and '#' comments are ignored; a "# n=<int>" header fixes the length,
/// otherwise the first word does.  Throws ParseError on malformed input.
[[nodiscard]] Code read_code(std::istream& is);
[[nodiscard]] Code read_code_file(const std::string& path);

}  // namespace rolap
