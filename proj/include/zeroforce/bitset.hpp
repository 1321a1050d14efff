#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace zf {

// Set of vertices out of a fixed universe 0..n-1, stored as 64-bit words.
// The forcing closure and the subset search spend nearly all their time in
// the intersection helpers below, so these stay allocation-free.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : nbits_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First member, or -1 when empty.
    int find_first() const { return scan_from(0); }
    // First member strictly greater than i, or -1.
    int find_next(int i) const { return i + 1 >= nbits_ ? -1 : scan_from(i + 1); }

    VertexSet& operator&=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference: removes o's members.
    VertexSet& operator-=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const VertexSet&) const = default;

    bool is_subset_of(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_count(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // Index of the unique element of (*this & o); -1 when the intersection
    // is empty or has two or more elements.
    int sole_common_element(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        int idx = -1;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t x = words_[i] & o.words_[i];
            if (!x) continue;
            if (idx >= 0 || (x & (x - 1))) return -1;
            idx = static_cast<int>(i << 6) + std::countr_zero(x);
        }
        return idx;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = find_first(); v >= 0; v = find_next(v)) out.push_back(v);
        return out;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }
    int scan_from(int bit) const {
        std::size_t wi = static_cast<std::size_t>(bit) >> 6;
        if (wi >= words_.size()) return -1;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (bit & 63));
        for (;;) {
            if (w) return static_cast<int>(wi << 6) + std::countr_zero(w);
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace zf
