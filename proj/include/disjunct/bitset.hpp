#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "disjunct/errors.hpp"

namespace disjunct {

/// Fixed-universe dynamic bitset over {0, ..., universe-1}.
///
/// Words are little-endian in index order; bits past `universe()` in the
/// last word are always zero so that counting and comparison work on whole
/// words.
class BitSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitSet() = default;
    explicit BitSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

    BitSet(std::size_t universe, std::initializer_list<std::size_t> members)
        : BitSet(universe) {
        for (auto i : members) set(i);
    }

    static BitSet from_indices(std::size_t universe, std::span<const std::size_t> members) {
        BitSet s(universe);
        for (auto i : members) s.set(i);
        return s;
    }

    /// All of {0, ..., universe-1}.
    static BitSet full(std::size_t universe) {
        BitSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~word_type{0});
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool test(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void set(std::size_t i) {
        if (i >= universe_) throw ParameterError("bit index out of range");
        words_[i / word_bits] |= word_type{1} << (i % word_bits);
    }

    void reset(std::size_t i) noexcept {
        if (i < universe_) words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }
    bool any() const noexcept { return !none(); }

    bool is_subset_of(const BitSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const BitSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    std::size_t intersection_count(const BitSet& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return c;
    }

    BitSet& operator|=(const BitSet& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    BitSet& operator&=(const BitSet& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    /// Set difference.
    BitSet& operator-=(const BitSet& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    friend bool operator==(const BitSet&, const BitSet&) = default;

    /// Lowest member, or universe() when empty.
    std::size_t first() const noexcept { return next(0); }

    /// Lowest member >= from, or universe() when none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= universe_) return universe_;
        std::size_t k = from / word_bits;
        word_type w = words_[k] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return universe_;
            w = words_[k];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type w = words_[k];
            while (w) {
                f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::span<const word_type> words() const noexcept { return words_; }

private:
    void trim() noexcept {
        if (auto r = universe_ % word_bits; r != 0 && !words_.empty())
            words_.back() &= (word_type{1} << r) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<word_type> words_;
};

}  // namespace disjunct
