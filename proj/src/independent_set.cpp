#include "rolap/detail/independent_set.hpp"

#include <algorithm>

namespace rolap::detail {

IndependentSet::IndependentSet(std::vector<Bitset> conflicts) : conflicts_(std::move(conflicts)) {}

std::size_t IndependentSet::clique_cover(const Bitset& pool) const {
    Bitset uncovered = pool;
    std::size_t cliques = 0;
    for (std::size_t v = uncovered.find_first(); v < uncovered.bits(); v = uncovered.find_first()) {
        Bitset grow = uncovered;
        grow &= conflicts_[v];
        uncovered.reset(v);
        for (std::size_t u = grow.find_first(); u < grow.bits(); u = grow.find_first()) {
            uncovered.reset(u);
            grow.reset(u);
            grow &= conflicts_[u];
        }
        ++cliques;
    }
    return cliques;
}

Bitset IndependentSet::component_of(std::size_t v, const Bitset& pool) const {
    Bitset seen(pool.bits());
    seen.set(v);
    Bitset frontier = seen;
    while (!frontier.none()) {
        Bitset next(pool.bits());
        frontier.for_each([&](std::size_t u) { next |= conflicts_[u]; });
        next &= pool;
        next.subtract(seen);
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

std::vector<std::size_t> IndependentSet::search(Bitset pool, std::size_t floor) {
    std::vector<std::size_t> taken;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = pool.find_first(); v < pool.bits(); v = pool.find_next(v + 1)) {
            const std::size_t degree = conflicts_[v].intersect_count(pool);
            if (degree > 1) continue;
            // An isolated or pendant vertex belongs to some maximum set.
            taken.push_back(v);
            pool.reset(v);
            if (degree == 1) pool.subtract(conflicts_[v]);
            changed = true;
        }
    }
    if (pool.none()) return taken;
    const std::size_t rest_floor = floor > taken.size() ? floor - taken.size() : 0;

    const Bitset first = component_of(pool.find_first(), pool);
    if (first != pool) {
        Bitset others = pool;
        others.subtract(first);
        auto a = search(first, 0);
        auto b = search(others, 0);
        taken.insert(taken.end(), a.begin(), a.end());
        taken.insert(taken.end(), b.begin(), b.end());
        return taken;
    }

    if (clique_cover(pool) <= rest_floor) return taken;

    std::size_t pivot = pool.find_first();
    std::size_t best_degree = 0;
    pool.for_each([&](std::size_t v) {
        const std::size_t d = conflicts_[v].intersect_count(pool);
        if (d > best_degree) {
            best_degree = d;
            pivot = v;
        }
    });

    Bitset with = pool;
    with.subtract(conflicts_[pivot]);
    with.reset(pivot);
    auto best = search(std::move(with), rest_floor > 0 ? rest_floor - 1 : 0);
    best.push_back(pivot);

    Bitset without = pool;
    without.reset(pivot);
    auto other = search(std::move(without), std::max(rest_floor, best.size()));
    if (other.size() > best.size()) best = std::move(other);

    taken.insert(taken.end(), best.begin(), best.end());
    return taken;
}

std::vector<std::size_t> IndependentSet::solve(const Bitset& candidates) {
    auto best = search(candidates, 0);
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::size_t> IndependentSet::find_at_least(const Bitset& candidates, std::size_t target) {
    if (target == 0) return {};
    auto best = search(candidates, target - 1);
    if (best.size() < target) return {};
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::size_t> IndependentSet::solve_canonical(const Bitset& candidates) {
    const std::size_t alpha = solve(candidates).size();
    std::vector<std::size_t> chosen;
    Bitset pool = candidates;
    for (std::size_t v = pool.find_first(); v < pool.bits() && chosen.size() < alpha; v = pool.find_next(v + 1)) {
        // Keep v if some optimum extends chosen ∪ {v} using only later vertices.
        Bitset rest = pool;
        rest.subtract(conflicts_[v]);
        for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
        const std::size_t need = alpha - chosen.size() - 1;
        if (need == 0 || !find_at_least(rest, need).empty()) {
            chosen.push_back(v);
            pool.subtract(conflicts_[v]);
        }
    }
    return chosen;
}

}  // namespace rolap::detail
