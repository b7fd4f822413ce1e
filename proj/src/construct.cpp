#include "rolap/construct.hpp"

#include <algorithm>
#include <iterator>

#include "rolap/counting.hpp"
#include "rolap/detail/bitset.hpp"
#include "rolap/error.hpp"
#include "rolap/word.hpp"

namespace rolap {

// Doubling -----------------------------------------------------------------

SymbolicSize DoublingStep::size() const {
    return {BigInt(prefixes.size()) * suffixes.size(), 2 * k};
}

PrefixSuffixSystem DoublingStep::system() const {
    return PrefixSuffixSystem::from_integers(k, prefixes, suffixes);
}

DoublingTrace doubling(int k_max) {
    if (k_max < 1 || k_max > kMaxDoublingK) {
        throw CapacityError("doubling supports 1 <= k_max <= " + std::to_string(kMaxDoublingK));
    }
    DoublingTrace trace;
    DoublingStep first;
    first.k = 1;
    first.prefixes = {0};
    first.suffixes = {1};
    trace.steps.push_back(std::move(first));

    for (int k = 2; k <= k_max; ++k) {
        const DoublingStep& prev = trace.steps.back();
        DoublingStep next;
        next.k = k;
        // p -> p0, p1 keeps order; b s for b = 0 then 1 keeps order too.
        next.prefixes.reserve(2 * prev.prefixes.size());
        for (auto p : prev.prefixes) {
            next.prefixes.push_back(p << 1);
            next.prefixes.push_back((p << 1) | 1U);
        }
        const std::uint64_t top = std::uint64_t{1} << (k - 1);
        next.suffixes.reserve(2 * prev.suffixes.size());
        next.suffixes = prev.suffixes;
        for (auto s : prev.suffixes) next.suffixes.push_back(s | top);

        std::set_intersection(next.prefixes.begin(), next.prefixes.end(), next.suffixes.begin(), next.suffixes.end(),
                              std::back_inserter(next.duplicates));

        std::size_t p_size = next.prefixes.size();
        std::size_t s_size = next.suffixes.size();
        std::vector<std::uint64_t> drop_p;
        std::vector<std::uint64_t> drop_s;
        for (auto d : next.duplicates) {
            const bool from_p = p_size > s_size;
            next.removed_from_prefixes.push_back(from_p);
            if (from_p) {
                drop_p.push_back(d);
                --p_size;
            } else {
                drop_s.push_back(d);
                --s_size;
            }
        }
        auto remove_sorted = [](std::vector<std::uint64_t>& v, const std::vector<std::uint64_t>& drop) {
            std::vector<std::uint64_t> kept;
            kept.reserve(v.size() - drop.size());
            std::set_difference(v.begin(), v.end(), drop.begin(), drop.end(), std::back_inserter(kept));
            v = std::move(kept);
        };
        remove_sorted(next.prefixes, drop_p);
        remove_sorted(next.suffixes, drop_s);
        trace.steps.push_back(std::move(next));
    }
    return trace;
}

// m-minimum ----------------------------------------------------------------

namespace {

/// Surviving suffix set while P grows as 0, 1, 2, ...
class SuffixSieve {
public:
    explicit SuffixSieve(int k) : k_(k), alive_(std::size_t{1} << k) {
        alive_.set_all();
        count_ = std::uint64_t{1} << k;
    }

    /// Adds prefix p; p must be the next integer after the ones already added.
    void add(std::uint64_t p) {
        for (int t = 1; t <= k_; ++t) {
            // Only the smallest word with a given t-prefix brings that prefix in.
            if ((p & low_mask(k_ - t)) != 0) continue;
            const std::uint64_t head = p >> (k_ - t);
            for (std::uint64_t h = 0; h < (std::uint64_t{1} << (k_ - t)); ++h) {
                const std::uint64_t s = (h << t) | head;
                if (alive_.test(s)) {
                    alive_.reset(s);
                    --count_;
                }
            }
        }
    }

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    [[nodiscard]] const detail::Bitset& alive() const noexcept { return alive_; }

private:
    int k_;
    detail::Bitset alive_;
    std::uint64_t count_;
};

void check_mmin_k(int k) {
    if (k < 2 || k > kMaxMMinimumK) {
        throw CapacityError("m-minimum supports 2 <= k <= " + std::to_string(kMaxMMinimumK));
    }
}

}  // namespace

std::uint64_t m_minimum_suffix_count(int k, std::uint64_t m) {
    check_mmin_k(k);
    if (m < 1 || m > (std::uint64_t{1} << k)) throw DomainError("m must lie in [1, 2^k]");
    SuffixSieve sieve(k);
    for (std::uint64_t p = 0; p < m; ++p) sieve.add(p);
    return sieve.count();
}

MMinimumResult m_minimum(int k) {
    check_mmin_k(k);
    const std::uint64_t limit = std::uint64_t{1} << (k - 1);
    std::uint64_t best_m = 0;
    std::uint64_t best_product = 0;
    {
        SuffixSieve sieve(k);
        for (std::uint64_t m = 1; m <= limit; ++m) {
            sieve.add(m - 1);
            const std::uint64_t product = m * sieve.count();
            if (product > best_product) {
                best_product = product;
                best_m = m;
            }
        }
    }

    SuffixSieve sieve(k);
    std::vector<std::uint64_t> prefixes;
    for (std::uint64_t p = 0; p < best_m; ++p) {
        sieve.add(p);
        prefixes.push_back(p);
    }
    std::vector<std::uint64_t> suffixes;
    sieve.alive().for_each([&](std::size_t s) { suffixes.push_back(s); });

    MMinimumResult out;
    out.k = k;
    out.m = best_m;
    out.system = PrefixSuffixSystem::from_integers(k, prefixes, suffixes);
    out.size = symbolic_size(out.system);
    return out;
}

// Zero block ---------------------------------------------------------------

namespace {

/// True when the low len bits of w contain no run of z zeros.
bool no_zero_run(std::uint64_t w, int len, int z) noexcept {
    std::uint64_t runs = ~w & low_mask(len);
    for (int i = 1; i < z && runs; ++i) runs &= runs >> 1;
    return runs == 0;
}

}  // namespace

BigInt zero_block_coefficient(int k, int z) {
    if (k < 2 || z < 1 || z > k - 1) throw DomainError("zero block needs k >= 2 and 1 <= z <= k-1");
    return fib_nstep(z, k + 1L) << (k - z);
}

PrefixSuffixSystem zero_block_system(int k, int z) {
    if (k < 2 || z < 1 || z > k - 1) throw DomainError("zero block needs k >= 2 and 1 <= z <= k-1");
    if (k > kMaxZeroBlockEmitK) {
        throw CapacityError("explicit zero-block sets need k <= " + std::to_string(kMaxZeroBlockEmitK));
    }
    std::vector<std::uint64_t> prefixes(std::size_t{1} << (k - z));
    for (std::uint64_t p = 0; p < prefixes.size(); ++p) prefixes[p] = p;
    std::vector<std::uint64_t> suffixes;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); s += 2) {
        if (no_zero_run(s, k, z)) suffixes.push_back(s);
    }
    return PrefixSuffixSystem::from_integers(k, prefixes, suffixes);
}

ZeroBlockResult zero_block(int k, bool emit_sets) {
    if (k < 2) throw DomainError("zero block needs k >= 2");
    if (emit_sets && k > kMaxZeroBlockEmitK) {
        throw CapacityError("explicit zero-block sets need k <= " + std::to_string(kMaxZeroBlockEmitK));
    }
    ZeroBlockResult out;
    out.k = k;
    BigInt best = -1;
    for (int z = 1; z <= k - 1; ++z) {
        FibTable fib(z);
        BigInt c = fib(k + 1L) << (k - z);
        if (c > best) {
            best = std::move(c);
            out.z = z;
        }
    }
    out.size = {best, 2 * k};
    if (emit_sets) out.system = zero_block_system(k, out.z);
    return out;
}

// Gilbert-Levenshtein ------------------------------------------------------

namespace {

void check_gl_n(int n) {
    if (n < 3) throw DomainError("Gilbert-Levenshtein codes need n >= 3");
}

void extend_free(std::uint64_t word, int remaining, int run, int z, std::vector<std::uint64_t>& out) {
    if (remaining == 0) {
        out.push_back(word);
        return;
    }
    if (run + 1 < z) extend_free(word << 1, remaining - 1, run + 1, z, out);
    extend_free((word << 1) | 1U, remaining - 1, 0, z, out);
}

}  // namespace

Code gilbert_levenshtein_code(int n, int z) {
    check_gl_n(n);
    if (n > kMaxGilbertLevenshteinEmitN) {
        throw CapacityError("explicit Gilbert-Levenshtein codes need n <= " +
                            std::to_string(kMaxGilbertLevenshteinEmitN));
    }
    if (z < 1 || z > n - 1) throw DomainError("z must lie in [1, n-1]");
    std::vector<BitWord> words;
    if (z == n - 1) {
        words.push_back(BitWord::from_integer(1, n));
        return Code(n, std::move(words));
    }
    if (fib_nstep(z, n - z) > BigInt(kMaxExpandedWords)) {
        throw CapacityError("Gilbert-Levenshtein code too large to list");
    }
    const int middle = n - z - 2;
    std::vector<std::uint64_t> mids;
    extend_free(0, middle, 0, z, mids);
    words.reserve(mids.size());
    for (auto m : mids) {
        // 0^z 1 m 1
        const std::uint64_t w = (((std::uint64_t{1} << middle) | m) << 1) | 1U;
        words.push_back(BitWord::from_integer(w, n));
    }
    return Code(n, std::move(words));
}

GilbertLevenshteinResult gilbert_levenshtein(int n, bool emit_code) {
    check_gl_n(n);
    if (emit_code && n > kMaxGilbertLevenshteinEmitN) {
        throw CapacityError("explicit Gilbert-Levenshtein codes need n <= " +
                            std::to_string(kMaxGilbertLevenshteinEmitN));
    }
    GilbertLevenshteinResult out;
    out.n = n;
    for (int z = 1; z <= n - 1; ++z) {
        FibTable fib(z);
        out.per_z.push_back(fib(n - z));
        if (out.per_z.back() > out.size) {
            out.size = out.per_z.back();
            out.z = z;
        }
    }
    if (emit_code) out.code = gilbert_levenshtein_code(n, out.z);
    return out;
}

}  // namespace rolap
