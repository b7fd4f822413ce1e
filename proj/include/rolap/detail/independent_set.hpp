#pragma once

#include <cstddef>
#include <vector>

#include "rolap/detail/bitset.hpp"

namespace rolap::detail {

/// Exact maximum independent set by branch and reduce: degree-0/1 reductions,
/// connected components solved apart, greedy clique-cover bound, branching on a
/// vertex of largest degree.  Suited to sparse graphs, where clique search on
/// the complement has to wade through very large cliques.
class IndependentSet {
public:
    /// `conflicts[v]` is the neighbourhood of v, without v.
    explicit IndependentSet(std::vector<Bitset> conflicts);

    [[nodiscard]] std::vector<std::size_t> solve(const Bitset& candidates);

    /// Some independent set of at least `target` vertices, or empty if none exists.
    [[nodiscard]] std::vector<std::size_t> find_at_least(const Bitset& candidates, std::size_t target);

    /// Lexicographically smallest maximum independent set (ascending vertex list).
    [[nodiscard]] std::vector<std::size_t> solve_canonical(const Bitset& candidates);

private:
    /// Best set inside `pool`; only sets larger than `floor` are worth finding.
    std::vector<std::size_t> search(Bitset pool, std::size_t floor);
    [[nodiscard]] std::size_t clique_cover(const Bitset& pool) const;
    [[nodiscard]] Bitset component_of(std::size_t v, const Bitset& pool) const;

    std::vector<Bitset> conflicts_;
};

}  // namespace rolap::detail
