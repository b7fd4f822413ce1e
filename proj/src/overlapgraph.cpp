#include "rolap/overlapgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "rolap/detail/bitset.hpp"
#include "rolap/error.hpp"

namespace rolap {

using detail::Bitset;

bool prefix_meets_suffix(std::uint64_t p, std::uint64_t s, int k) noexcept {
    for (int t = 1; t <= k; ++t) {
        if (packed_overlap(p, s, k, t)) return true;
    }
    return false;
}

OverlapGraph build_overlap_graph(int k) {
    if (k < 1 || k > kMaxGraphK) {
        throw CapacityError("overlap graph supports 1 <= k <= " + std::to_string(kMaxGraphK));
    }
    OverlapGraph g;
    g.k_ = k;
    const std::uint64_t side = std::uint64_t{1} << k;
    g.row_blocks_ = static_cast<std::size_t>((side + 63) / 64);
    g.adj_.assign(static_cast<std::size_t>(side) * g.row_blocks_, 0);
    for (std::uint64_t p = 0; p < side; ++p) {
        std::uint64_t* row = g.adj_.data() + p * g.row_blocks_;
        for (int t = 1; t <= k; ++t) {
            // Every s whose t-suffix is the t-prefix of p: s = h ∥ prefix.
            const std::uint64_t head = p >> (k - t);
            for (std::uint64_t h = 0; h < (std::uint64_t{1} << (k - t)); ++h) {
                const std::uint64_t s = (h << t) | head;
                row[s >> 6] |= std::uint64_t{1} << (s & 63);
            }
        }
    }
    return g;
}

std::vector<std::uint64_t> OverlapGraph::neighbors(std::uint64_t p) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < side_size(); ++s) {
        if (adjacent(p, s)) out.push_back(s);
    }
    return out;
}

std::string to_string(Objective o) {
    return o == Objective::product ? "product" : "cardinality";
}

namespace {

struct Score {
    std::uint64_t primary = 0;
    std::uint64_t secondary = 0;
    friend auto operator<=>(const Score&, const Score&) = default;
};

Score score_of(Objective obj, std::uint64_t x, std::uint64_t y) {
    return obj == Objective::product ? Score{x * y, x + y} : Score{x + y, x * y};
}

std::uint64_t pack(const Score& s) {
    return (std::min<std::uint64_t>(s.primary, 0xFFFFFFFFFFULL) << 24) | std::min<std::uint64_t>(s.secondary, 0xFFFFFF);
}

struct Node {
    std::vector<std::uint32_t> chosen;      // X_0 indices in X_C
    Bitset y;                               // surviving Y_1 indices
    std::vector<std::uint32_t> candidates;  // undecided, ascending
    std::vector<std::uint32_t> excluded;
};

struct Best {
    Score score;
    std::vector<std::uint32_t> chosen;  // ascending
    Bitset y;
    bool found = false;
};

bool better(const Best& a, const Best& b, bool canonical) {
    if (!a.found) return false;
    if (!b.found) return true;
    if (a.score != b.score) return a.score > b.score;
    return canonical && a.chosen < b.chosen;
}

/// Branch and bound over X_C ⊆ X_0 with Y_C = Y_1 \ N(X_C).
class ReducedSearch {
public:
    ReducedSearch(const OverlapGraph& g, Objective obj, const SearchOptions& opts)
        : k_(g.k()), half_(std::size_t{1} << (g.k() - 1)), obj_(obj), opts_(opts) {
        nbr_.assign(half_, Bitset(half_));
        for (std::size_t p = 0; p < half_; ++p) {
            for (std::size_t j = 0; j < half_; ++j) {
                if (g.adjacent(p, 2 * j + 1)) nbr_[p].set(j);
            }
        }
        if (opts_.time_budget_seconds) {
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(*opts_.time_budget_seconds));
        }
    }

    SearchResult run() {
        Node root;
        root.y = Bitset(half_);
        root.y.set_all();
        for (std::uint32_t i = 0; i < half_; ++i) root.candidates.push_back(i);

        const unsigned threads = std::max(1U, opts_.threads);
        Best best;
        if (threads == 1) {
            search(root, best, 0, nullptr);
        } else {
            std::vector<Node> frontier;
            Best seed;
            collect_depth_ = 1;
            while ((std::size_t{1} << collect_depth_) < std::size_t{16} * threads && collect_depth_ < 12) ++collect_depth_;
            search(root, seed, 0, &frontier);
            std::vector<Best> results(frontier.size());
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < frontier.size(); i = next++) search(frontier[i], results[i], 0, nullptr);
                });
            }
            for (auto& th : pool) th.join();
            best = std::move(seed);
            for (auto& r : results) {
                if (better(r, best, opts_.canonical)) best = std::move(r);
            }
        }

        SearchResult out;
        out.k = k_;
        out.objective = obj_;
        out.optimal = !timed_out_.load();
        out.nodes = nodes_.load();
        if (best.found) {
            for (auto i : best.chosen) out.x_set.push_back(BitWord::from_integer(i, k_));
            best.y.for_each([&](std::size_t j) { out.y_set.push_back(BitWord::from_integer(2 * j + 1, k_)); });
        }
        return out;
    }

private:
    bool out_of_time() {
        if (!deadline_) return false;
        if (timed_out_.load(std::memory_order_relaxed)) return true;
        if ((nodes_.load(std::memory_order_relaxed) & 1023) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
        }
        return timed_out_.load(std::memory_order_relaxed);
    }

    void offer(Best& local, const Node& node) {
        const Score s = score_of(obj_, node.chosen.size(), node.y.count());
        Best cand;
        cand.score = s;
        cand.found = true;
        cand.chosen = node.chosen;
        std::sort(cand.chosen.begin(), cand.chosen.end());
        if (!better(cand, local, opts_.canonical)) return;
        cand.y = node.y;
        local = std::move(cand);
        std::uint64_t packed = pack(s);
        std::uint64_t cur = incumbent_.load();
        while (packed > cur && !incumbent_.compare_exchange_weak(cur, packed)) {
        }
    }

    /// Size of a maximum matching between the candidates and the surviving Y.
    std::size_t matching_size(const Node& node) const {
        std::vector<std::int64_t> owner(half_, -1);
        std::size_t matched = 0;
        for (std::size_t ci = 0; ci < node.candidates.size(); ++ci) {
            Bitset seen(half_);
            if (augment(node, ci, owner, seen)) ++matched;
        }
        return matched;
    }

    bool augment(const Node& node, std::size_t ci, std::vector<std::int64_t>& owner, Bitset& seen) const {
        Bitset reach = nbr_[node.candidates[ci]];
        reach &= node.y;
        reach.subtract(seen);
        for (std::size_t j = reach.find_first(); j < reach.bits(); j = reach.find_next(j + 1)) {
            seen.set(j);
            if (owner[j] < 0 || augment(node, static_cast<std::size_t>(owner[j]), owner, seen)) {
                owner[j] = static_cast<std::int64_t>(ci);
                return true;
            }
        }
        return false;
    }

    bool prunable(const Score& bound, const Best& local) const {
        const Score best = std::max(local.found ? local.score : Score{}, unpack(incumbent_.load()));
        if (!local.found && incumbent_.load() == 0) return false;
        return opts_.canonical ? bound < best : bound <= best;
    }

    static Score unpack(std::uint64_t v) { return {v >> 24, v & 0xFFFFFF}; }

    void search(Node& node, Best& local, int depth, std::vector<Node>* frontier) {
        ++nodes_;
        if (out_of_time()) return;

        // Candidates that remove nothing join for free; those that would empty Y never can.
        std::size_t y = node.y.count();
        std::vector<std::uint32_t> open;
        std::vector<std::uint32_t> removal;
        for (auto i : node.candidates) {
            const std::size_t c = nbr_[i].intersect_count(node.y);
            if (c == 0) {
                node.chosen.push_back(i);
            } else if (c < y) {
                open.push_back(i);
                removal.push_back(static_cast<std::uint32_t>(c));
            }
        }
        node.candidates = std::move(open);

        // A rejected vertex that has become free means this set is not closed and is
        // beaten by the branch that kept it.
        for (auto e : node.excluded) {
            if (!nbr_[e].intersects(node.y)) return;
        }

        const std::uint64_t x = node.chosen.size();
        if (x > 0 && y > 0) offer(local, node);

        const std::size_t r = node.candidates.size();
        if (r == 0) return;

        // Adding j candidates removes at least the j-th smallest removal count.
        std::sort(removal.begin(), removal.end());
        std::uint64_t prod_ub = x * y;
        std::uint64_t card_gain = 0;
        for (std::size_t j = 1; j <= r; ++j) {
            const std::uint64_t left = y - removal[j - 1];
            prod_ub = std::max<std::uint64_t>(prod_ub, (x + j) * left);
            if (j > removal[j - 1]) card_gain = std::max<std::uint64_t>(card_gain, j - removal[j - 1]);
        }
        std::uint64_t card_ub = x + y + card_gain;
        Score bound = obj_ == Objective::product ? Score{prod_ub, card_ub} : Score{card_ub, prod_ub};
        if (prunable(bound, local)) return;

        // König: a maximum independent set of the residual bipartite graph has
        // r + y - (maximum matching) vertices.
        const std::uint64_t konig = x + r + y - matching_size(node);
        card_ub = std::min(card_ub, konig);
        prod_ub = std::min(prod_ub, (card_ub / 2) * ((card_ub + 1) / 2));
        bound = obj_ == Objective::product ? Score{prod_ub, card_ub} : Score{card_ub, prod_ub};
        if (prunable(bound, local)) return;

        if (frontier && depth >= collect_depth_) {
            frontier->push_back(node);
            return;
        }

        const std::uint32_t pivot = node.candidates.front();
        Node include;
        include.chosen = node.chosen;
        include.chosen.push_back(pivot);
        include.y = node.y;
        include.y.subtract(nbr_[pivot]);
        include.candidates.assign(node.candidates.begin() + 1, node.candidates.end());
        include.excluded = node.excluded;
        search(include, local, depth + 1, frontier);

        Node exclude;
        exclude.chosen = std::move(node.chosen);
        exclude.y = std::move(node.y);
        exclude.candidates.assign(node.candidates.begin() + 1, node.candidates.end());
        exclude.excluded = std::move(node.excluded);
        exclude.excluded.push_back(pivot);
        search(exclude, local, depth + 1, frontier);
    }

    int k_;
    std::size_t half_;
    Objective obj_;
    SearchOptions opts_;
    std::vector<Bitset> nbr_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<bool> timed_out_{false};
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> incumbent_{0};
    int collect_depth_ = 0;
};

SearchResult run_search(const OverlapGraph& g, Objective obj, const SearchOptions& opts) {
    ReducedSearch search(g, obj, opts);
    return search.run();
}

}  // namespace

SearchResult max_product_search(const OverlapGraph& g, const SearchOptions& opts) {
    return run_search(g, Objective::product, opts);
}

SearchResult max_cardinality_search(const OverlapGraph& g, const SearchOptions& opts) {
    return run_search(g, Objective::cardinality, opts);
}

bool is_independent(const OverlapGraph& g, const SearchResult& r) {
    if (r.x_set.empty() || r.y_set.empty()) return false;
    auto distinct = [](const std::vector<BitWord>& v) {
        auto c = v;
        std::sort(c.begin(), c.end());
        return std::adjacent_find(c.begin(), c.end()) == c.end();
    };
    if (!distinct(r.x_set) || !distinct(r.y_set)) return false;
    for (const auto& p : r.x_set) {
        if (p.length() != g.k()) return false;
        for (const auto& s : r.y_set) {
            if (s.length() != g.k() || g.adjacent(p.value(), s.value())) return false;
        }
    }
    return true;
}

namespace {

std::vector<BitWord> sorted(std::vector<BitWord> v) {
    std::sort(v.begin(), v.end());
    return v;
}

BitWord reverse_word(const BitWord& w) {
    std::uint64_t out = 0;
    for (int i = 0; i < w.length(); ++i) out |= ((w.value() >> i) & 1U) << (w.length() - 1 - i);
    return BitWord::from_integer(out, w.length());
}

}  // namespace

SearchResult complement_sides(const SearchResult& r) {
    SearchResult out = r;
    out.x_set.clear();
    out.y_set.clear();
    for (const auto& w : r.x_set) out.x_set.push_back(w.complement());
    for (const auto& w : r.y_set) out.y_set.push_back(w.complement());
    out.x_set = sorted(std::move(out.x_set));
    out.y_set = sorted(std::move(out.y_set));
    return out;
}

SearchResult reverse_complement_sides(const SearchResult& r) {
    SearchResult out = r;
    out.x_set.clear();
    out.y_set.clear();
    for (const auto& w : r.y_set) out.x_set.push_back(reverse_word(w.complement()));
    for (const auto& w : r.x_set) out.y_set.push_back(reverse_word(w.complement()));
    out.x_set = sorted(std::move(out.x_set));
    out.y_set = sorted(std::move(out.y_set));
    return out;
}

MatchingCertificate mis_matching_certificate(int k) {
    if (k < 2 || k > kMaxGraphK) throw CapacityError("matching certificate supports 2 <= k <= 16");
    MatchingCertificate cert;
    cert.k = k;
    const std::uint64_t half = std::uint64_t{1} << (k - 1);

    for (std::uint64_t p = 0; p < half; ++p) {
        if (p & 1U) {
            // 0 ... 1 matches itself.
            cert.matching.emplace_back(BitWord::from_integer(p, k), BitWord::from_integer(p, k));
        } else if (p != 0) {
            // p = u 0^r with u ending at the last 1; partner s = 1^r u keeps u as a
            // suffix, and r is recoverable as the run of leading ones of s.
            const int r = std::countr_zero(p);
            const std::uint64_t u = p >> r;
            const std::uint64_t s = (low_mask(r) << (k - r)) | u;
            cert.matching.emplace_back(BitWord::from_integer(p, k), BitWord::from_integer(s, k));
        }
    }

    // Edge and disjointness checks use the definitional predicate only.
    std::vector<BitWord> left;
    std::vector<BitWord> right;
    bool ok = cert.matching.size() == half - 1;
    for (const auto& [p, s] : cert.matching) {
        ok = ok && !p.at(1) && s.at(k);
        bool edge = false;
        for (int t = 1; t <= k && !edge; ++t) edge = t_overlap(p, s, t);
        ok = ok && edge;
        left.push_back(p);
        right.push_back(s);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    ok = ok && std::adjacent_find(left.begin(), left.end()) == left.end() &&
         std::adjacent_find(right.begin(), right.end()) == right.end();
    cert.matching_verified = ok;

    cert.extremal.k = k;
    cert.extremal.objective = Objective::cardinality;
    const BitWord zero = BitWord::from_integer(0, k);
    cert.extremal.x_set.push_back(zero);
    bool independent = true;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); s += 2) {
        const BitWord sw = BitWord::from_integer(s, k);
        for (int t = 1; t <= k && independent; ++t) independent = !t_overlap(zero, sw, t);
        cert.extremal.y_set.push_back(sw);
    }
    cert.extremal_verified = independent && cert.extremal.cardinality() == half + 1;
    return cert;
}

}  // namespace rolap
