#pragma once

#include <cstddef>
#include <vector>

#include "rolap/detail/bitset.hpp"

namespace rolap::detail {

/// Exact maximum clique by branch and bound with greedy-coloring bounds
/// (Tomita-style).  `adjacency[v]` is the neighbourhood of v, without v.
class MaxClique {
public:
    explicit MaxClique(std::vector<Bitset> adjacency);

    /// A maximum clique inside `candidates`, vertices ascending.
    [[nodiscard]] std::vector<std::size_t> solve(const Bitset& candidates);

    /// A clique of size >= target inside `candidates`, or empty if none exists.
    [[nodiscard]] std::vector<std::size_t> find_at_least(const Bitset& candidates, std::size_t target);

    /// Lexicographically smallest maximum clique (as an ascending vertex list).
    [[nodiscard]] std::vector<std::size_t> solve_canonical(const Bitset& candidates);

    [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }

private:
    void expand(std::vector<std::size_t>& current, Bitset candidates);
    void color_sort(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const;

    std::vector<Bitset> adjacency_;
    std::vector<std::size_t> best_;
    std::size_t threshold_ = 0;  // only cliques strictly larger than this are recorded
    bool stop_at_threshold_ = false;
    bool done_ = false;
};

}  // namespace rolap::detail
