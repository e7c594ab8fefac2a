#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ggn {

/// Fixed-width dense bit set whose width is chosen at run time.
///
/// Used for subsets of group elements and for sets of maximal-subgroup ids.
/// All binary operations require equal widths.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static Bitset full(std::size_t width) {
        Bitset b(width);
        for (std::size_t i = 0; i < width; ++i)
            b.set(i);
        return b;
    }

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// True iff every bit of *this is also set in `other`.
    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Lexicographic order on the sorted index lists. Only meaningful for sets
    /// of equal size and width, which is how subgroup sorting uses it.
    friend bool lex_less(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size() && i < b.words_.size(); ++i) {
            if (a.words_[i] == b.words_[i])
                continue;
            // lowest differing bit decides: the set containing it sorts first
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            std::uint64_t low = diff & (~diff + 1);
            return (a.words_[i] & low) != 0;
        }
        return a.width_ < b.width_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull ^ width_;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ggn
