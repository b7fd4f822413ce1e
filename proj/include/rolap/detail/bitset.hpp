#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rolap::detail {

/// Runtime-sized bitset over 64-bit blocks; just the operations the searches need.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), blocks_((bits + 63) / 64, 0) {}

    [[nodiscard]] std::size_t bits() const noexcept { return bits_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] std::uint64_t block(std::size_t i) const noexcept { return blocks_[i]; }
    [[nodiscard]] std::uint64_t* data() noexcept { return blocks_.data(); }
    [[nodiscard]] const std::uint64_t* data() const noexcept { return blocks_.data(); }

    void set(std::size_t i) noexcept { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool test(std::size_t i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() noexcept {
        for (auto& b : blocks_) b = ~std::uint64_t{0};
        trim();
    }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
        return c;
    }

    [[nodiscard]] bool none() const noexcept {
        for (auto b : blocks_) {
            if (b) return false;
        }
        return true;
    }

    [[nodiscard]] bool intersects(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i] & o.blocks_[i]) return true;
        }
        return false;
    }

    [[nodiscard]] std::size_t intersect_count(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i) c += static_cast<std::size_t>(std::popcount(blocks_[i] & o.blocks_[i]));
        return c;
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
        return *this;
    }

    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
        return *this;
    }

    /// First set bit at or after `from`, or bits() if none.
    [[nodiscard]] std::size_t find_next(std::size_t from) const noexcept {
        if (from >= bits_) return bits_;
        std::size_t bi = from >> 6;
        std::uint64_t b = blocks_[bi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (b) return (bi << 6) + static_cast<std::size_t>(std::countr_zero(b));
            if (++bi >= blocks_.size()) return bits_;
            b = blocks_[bi];
        }
    }

    [[nodiscard]] std::size_t find_first() const noexcept { return find_next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            for (std::uint64_t b = blocks_[bi]; b; b &= b - 1) {
                f((bi << 6) + static_cast<std::size_t>(std::countr_zero(b)));
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept {
        if (bits_ & 63) blocks_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace rolap::detail
