#include "rolap/detail/max_clique.hpp"

#include <algorithm>

namespace rolap::detail {

MaxClique::MaxClique(std::vector<Bitset> adjacency) : adjacency_(std::move(adjacency)) {}

void MaxClique::color_sort(const Bitset& candidates, std::vector<std::size_t>& order,
                           std::vector<std::size_t>& colors) const {
    order.clear();
    colors.clear();
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (!uncolored.none()) {
        ++color;
        Bitset available = uncolored;
        for (std::size_t v = available.find_first(); v < available.bits(); v = available.find_next(v + 1)) {
            available.subtract(adjacency_[v]);
            uncolored.reset(v);
            order.push_back(v);
            colors.push_back(color);
        }
    }
}

void MaxClique::expand(std::vector<std::size_t>& current, Bitset candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colors;
    color_sort(candidates, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
        if (done_) return;
        if (current.size() + colors[i] <= std::max(threshold_, best_.size())) return;
        const std::size_t v = order[i];
        current.push_back(v);
        Bitset next = candidates;
        next &= adjacency_[v];
        if (next.none()) {
            if (current.size() > std::max(threshold_, best_.size())) {
                best_ = current;
                if (stop_at_threshold_) done_ = true;
            }
        } else {
            expand(current, std::move(next));
        }
        current.pop_back();
        candidates.reset(v);
    }
}

std::vector<std::size_t> MaxClique::solve(const Bitset& candidates) {
    best_.clear();
    threshold_ = 0;
    stop_at_threshold_ = false;
    done_ = false;
    std::vector<std::size_t> current;
    expand(current, candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
}

std::vector<std::size_t> MaxClique::find_at_least(const Bitset& candidates, std::size_t target) {
    if (target == 0) return {};
    best_.clear();
    threshold_ = target - 1;
    stop_at_threshold_ = true;
    done_ = false;
    std::vector<std::size_t> current;
    expand(current, candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
}

std::vector<std::size_t> MaxClique::solve_canonical(const Bitset& candidates) {
    const std::size_t omega = solve(candidates).size();
    std::vector<std::size_t> chosen;
    Bitset pool = candidates;
    for (std::size_t v = pool.find_first(); v < pool.bits() && chosen.size() < omega; v = pool.find_next(v + 1)) {
        // Keep v if some optimum extends chosen ∪ {v} using only later vertices.
        Bitset rest = pool;
        rest &= adjacency_[v];
        for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
        const std::size_t need = omega - chosen.size() - 1;
        if (need == 0 || !find_at_least(rest, need).empty()) {
            chosen.push_back(v);
            pool &= adjacency_[v];
        }
    }
    return chosen;
}

}  // namespace rolap::detail
