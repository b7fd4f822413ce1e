#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rolap/word.hpp"

namespace rolap {

/// Bipartite incompatibility graph G_k.  Prefix vertex x_p and suffix vertex y_s
/// are adjacent iff some t-prefix of p (1 <= t <= k) equals the t-suffix of s.
class OverlapGraph {
public:
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::uint64_t side_size() const noexcept { return std::uint64_t{1} << k_; }

    [[nodiscard]] bool adjacent(std::uint64_t p, std::uint64_t s) const noexcept {
        return (adj_[p * row_blocks_ + (s >> 6)] >> (s & 63)) & 1U;
    }

    /// Suffix vertices adjacent to x_p, ascending.
    [[nodiscard]] std::vector<std::uint64_t> neighbors(std::uint64_t p) const;

    friend OverlapGraph build_overlap_graph(int k);

private:
    int k_ = 0;
    std::size_t row_blocks_ = 0;
    std::vector<std::uint64_t> adj_;  // 2^k rows of 2^k bits
};

inline constexpr int kMaxGraphK = 16;

/// Throws CapacityError unless 1 <= k <= 16.
[[nodiscard]] OverlapGraph build_overlap_graph(int k);

/// Definitional adjacency test used to cross-check the table.
[[nodiscard]] bool prefix_meets_suffix(std::uint64_t p, std::uint64_t s, int k) noexcept;

enum class Objective { product, cardinality };

[[nodiscard]] std::string to_string(Objective o);

struct SearchOptions {
    bool canonical = false;                     ///< lexicographically smallest X_C among optima
    unsigned threads = 1;
    std::optional<double> time_budget_seconds;  ///< stop early; result flagged non-optimal
};

/// Non-trivial independent set X_C ∪ Y_C of G_k.
struct SearchResult {
    int k = 0;
    Objective objective = Objective::product;
    std::vector<BitWord> x_set;  ///< prefix words, ascending
    std::vector<BitWord> y_set;  ///< suffix words, ascending
    bool optimal = true;
    std::uint64_t nodes = 0;

    [[nodiscard]] std::uint64_t product() const noexcept { return x_set.size() * y_set.size(); }
    [[nodiscard]] std::uint64_t cardinality() const noexcept { return x_set.size() + y_set.size(); }
};

/// Maximizes |X_C| |Y_C|; among product optima the largest |X_C| + |Y_C| is
/// returned, which is the independence figure Table-style summaries list with it.
/// Exact for any k within capacity given time; k <= 6 completes quickly.
[[nodiscard]] SearchResult max_product_search(const OverlapGraph& g, const SearchOptions& opts = {});

/// Maximizes |X_C| + |Y_C| over non-trivial independent sets (ties: larger product).
[[nodiscard]] SearchResult max_cardinality_search(const OverlapGraph& g, const SearchOptions& opts = {});

/// No edge joins X_C and Y_C, both sides non-empty and duplicate-free.
[[nodiscard]] bool is_independent(const OverlapGraph& g, const SearchResult& r);

/// Complements every word: independence and side sizes are preserved.
[[nodiscard]] SearchResult complement_sides(const SearchResult& r);

/// Complements and reverses every word, swapping the prefix and suffix roles:
/// independence is preserved and |X_C|, |Y_C| are exchanged.
[[nodiscard]] SearchResult reverse_complement_sides(const SearchResult& r);

struct MatchingCertificate {
    int k = 0;
    /// Edges x_p -- y_s inside X_0 x Y_1; p starts with 0, s ends with 1.
    std::vector<std::pair<BitWord, BitWord>> matching;
    /// {0^k} ∪ Y_1
    SearchResult extremal;
    bool matching_verified = false;
    bool extremal_verified = false;
};

/// The matching of size 2^(k-1) - 1 in X_0 x Y_1 (identity on words 0...1 plus
/// u 0^r <-> 1^r u, u ending in 1) and the independent set {0^k} ∪ Y_1 of size
/// 2^(k-1) + 1, each checked edge by edge with the definitional predicate.
/// 2 <= k <= 16.
[[nodiscard]] MatchingCertificate mis_matching_certificate(int k);

}  // namespace rolap
