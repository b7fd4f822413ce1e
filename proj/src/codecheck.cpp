#include "rolap/codecheck.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <utility>

#include "rolap/detail/bitset.hpp"
#include "rolap/detail/independent_set.hpp"
#include "rolap/detail/max_clique.hpp"
#include "rolap/error.hpp"

namespace rolap {

Code::Code(int n) : n_(n) {
    if (n < 1 || n > kMaxWordLength) throw DomainError("code length must be in [1, 64]");
}

Code::Code(int n, std::vector<BitWord> words) : Code(n) {
    for (const auto& w : words) {
        if (w.length() != n) {
            throw DomainError("word " + w.to_string() + " does not have length " + std::to_string(n));
        }
    }
    if (!std::is_sorted(words.begin(), words.end())) std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
        throw DomainError("duplicate word in code");
    }
    words_ = std::move(words);
}

bool Code::contains(const BitWord& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

namespace {

std::vector<BitWord> normalize(int k, std::vector<BitWord> words) {
    for (const auto& w : words) {
        if (w.length() != k) throw DomainError("system word " + w.to_string() + " is not of length " + std::to_string(k));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

std::vector<BitWord> to_words(int k, std::span<const std::uint64_t> values) {
    std::vector<BitWord> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(BitWord::from_integer(v, k));
    return out;
}

}  // namespace

PrefixSuffixSystem PrefixSuffixSystem::make(int k, std::vector<BitWord> prefixes, std::vector<BitWord> suffixes) {
    if (k < 1 || k > kMaxWordLength) throw DomainError("system parameter k must be in [1, 64]");
    PrefixSuffixSystem sys;
    sys.k = k;
    sys.prefixes = normalize(k, std::move(prefixes));
    sys.suffixes = normalize(k, std::move(suffixes));
    return sys;
}

PrefixSuffixSystem PrefixSuffixSystem::from_integers(int k, std::span<const std::uint64_t> prefixes,
                                                     std::span<const std::uint64_t> suffixes) {
    return make(k, to_words(k, prefixes), to_words(k, suffixes));
}

OverlapCheck is_overlap_free(const Code& code, int t1, int t2) {
    const int n = code.length();
    if (t1 < 1 || t1 > t2 || t2 > n - 1) {
        throw DomainError("overlap range [" + std::to_string(t1) + ", " + std::to_string(t2) +
                          "] invalid for length " + std::to_string(n));
    }
    const auto& words = code.words();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tails(words.size());  // (t-suffix, word)
    for (int t = t1; t <= t2; ++t) {
        const std::uint64_t mask = low_mask(t);
        for (std::size_t i = 0; i < words.size(); ++i) tails[i] = {words[i].value() & mask, words[i].value()};
        std::sort(tails.begin(), tails.end());
        // Words are ascending, so the first u that hits gives the smallest (t, u, v).
        for (const auto& u : words) {
            const std::uint64_t head = u.value() >> (n - t);
            auto it = std::lower_bound(tails.begin(), tails.end(), std::pair{head, std::uint64_t{0}});
            if (it != tails.end() && it->first == head) {
                return {false, OverlapWitness{u, BitWord::from_integer(it->second, n), t}};
            }
        }
    }
    return {};
}

SystemCheck validate_system(const PrefixSuffixSystem& sys) {
    const int k = sys.k;
    std::vector<std::uint64_t> heads;
    std::vector<std::uint64_t> tails;
    for (int t = 1; t <= k; ++t) {
        heads.clear();
        tails.clear();
        for (const auto& p : sys.prefixes) heads.push_back(p.value() >> (k - t));
        for (const auto& s : sys.suffixes) tails.push_back(s.value() & low_mask(t));
        std::sort(heads.begin(), heads.end());
        std::sort(tails.begin(), tails.end());
        std::vector<std::uint64_t> common;
        std::set_intersection(heads.begin(), heads.end(), tails.begin(), tails.end(), std::back_inserter(common));
        if (!common.empty()) return {false, t, BitWord::from_integer(common.front(), t)};
    }
    return {};
}

Code expand_system(const PrefixSuffixSystem& sys, int n) {
    const int k = sys.k;
    if (n < 2 * k) throw DomainError("expand_system needs n >= 2k");
    if (n > kMaxWordLength) {
        throw CapacityError("explicit expansion limited to n <= 64; use symbolic_size for the count");
    }
    const int middle = n - 2 * k;
    const std::uint64_t limit = middle >= 40 ? 0 : kMaxExpandedWords >> middle;
    if (sys.prefixes.size() > limit || (sys.prefixes.size() && sys.suffixes.size() > limit / sys.prefixes.size())) {
        throw CapacityError("expansion would exceed " + std::to_string(kMaxExpandedWords) +
                            " words; use symbolic_size for the count");
    }
    std::vector<BitWord> words;
    words.reserve((sys.prefixes.size() * sys.suffixes.size()) << middle);
    const std::uint64_t middles = std::uint64_t{1} << middle;
    for (const auto& p : sys.prefixes) {
        for (std::uint64_t x = 0; x < middles; ++x) {
            const std::uint64_t head = (p.value() << middle | x) << k;
            for (const auto& s : sys.suffixes) words.push_back(BitWord::from_integer(head | s.value(), n));
        }
    }
    return Code(n, std::move(words));
}

SymbolicSize symbolic_size(const PrefixSuffixSystem& sys) {
    return {BigInt(sys.prefixes.size()) * sys.suffixes.size(), 2 * sys.k};
}

MaxCodeResult brute_force_max_code(int n, int t1, int t2, bool canonical) {
    if (n > 10) throw CapacityError("brute-force maximum code limited to n <= 10");
    if (n < 2 || t1 < 1 || t1 > t2 || t2 > n - 1) throw DomainError("brute_force_max_code needs 1 <= t1 <= t2 <= n-1");

    auto conflicts = [&](std::uint64_t u, std::uint64_t v) {
        for (int t = t1; t <= t2; ++t) {
            if (packed_overlap(u, v, n, t)) return true;
        }
        return false;
    };

    // Self-overlapping words can never be codewords.
    std::vector<std::uint64_t> vertices;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        if (!conflicts(w, w)) vertices.push_back(w);
    }

    std::vector<detail::Bitset> conflict(vertices.size(), detail::Bitset(vertices.size()));
    std::size_t edges = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (conflicts(vertices[i], vertices[j]) || conflicts(vertices[j], vertices[i])) {
                conflict[i].set(j);
                conflict[j].set(i);
                ++edges;
            }
        }
    }
    detail::Bitset all(vertices.size());
    all.set_all();

    // Sparse conflict graphs (large t1) have huge codes, where clique search on the
    // complement stalls; branch and reduce handles them directly.
    std::vector<std::size_t> clique;
    const std::size_t pairs = vertices.size() * (vertices.size() - 1) / 2;
    if (4 * edges < pairs) {
        detail::IndependentSet solver(std::move(conflict));
        clique = canonical ? solver.solve_canonical(all) : solver.solve(all);
    } else {
        std::vector<detail::Bitset> compatible(vertices.size(), detail::Bitset(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            compatible[i] = all;
            compatible[i].subtract(conflict[i]);
            compatible[i].reset(i);
        }
        detail::MaxClique solver(std::move(compatible));
        clique = canonical ? solver.solve_canonical(all) : solver.solve(all);
    }

    std::vector<BitWord> words;
    for (auto idx : clique) words.push_back(BitWord::from_integer(vertices[idx], n));
    MaxCodeResult result;
    result.size = words.size();
    result.code = Code(n, std::move(words));
    result.candidates = vertices.size();
    return result;
}

void write_code(std::ostream& os, const Code& code) {
    os << "# n=" << code.length() << " q=2\n";
    for (const auto& w : code) os << w.to_string() << '\n';
}

void write_code_file(const std::string& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_code(out, code);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

Code read_code(std::istream& is) {
    static const std::regex header(R"(n\s*=\s*(\d+))");
    std::optional<int> n;
    std::vector<BitWord> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view body(line.data() + first, last - first + 1);
        if (body.front() == '#') {
            std::smatch m;
            const std::string text(body);
            if (!n && words.empty() && std::regex_search(text, m, header)) n = std::stoi(m[1].str());
            continue;
        }
        BitWord w;
        try {
            w = BitWord::parse(body);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!n) n = w.length();
        if (w.length() != *n) {
            throw ParseError("line " + std::to_string(line_no) + ": expected a word of length " + std::to_string(*n));
        }
        words.push_back(w);
    }
    if (!n) throw ParseError("code file declares no length and contains no words");
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end()) throw ParseError("duplicate word in code file");
    return Code(*n, std::move(words));
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_code(in);
}

}  // namespace rolap
