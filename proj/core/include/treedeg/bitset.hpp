#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace treedeg {

// Set of vertex indices over a fixed universe 0..n-1. One cache line covers
// every graph this project touches (n <= 64 almost always); the word vector
// keeps larger hosts legal without a second code path.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& x : s.w_) x = ~uint64_t(0);
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[size_t(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[size_t(i) >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // Set difference: removes o's members.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Complement within the universe.
    VertexSet complement() const {
        VertexSet s(*this);
        for (auto& x : s.w_) x = ~x;
        s.trim();
        return s;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Lowest member, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    // Lowest member strictly greater than `after`, or -1.
    int next(int after) const {
        int i = after + 1;
        if (i >= n_) return -1;
        size_t word = size_t(i) >> 6;
        uint64_t cur = w_[word] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return int(word * 64) + std::countr_zero(cur);
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                f(int(i * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        // Word-wise works because trailing bits beyond n_ stay cleared.
        for (size_t i = 0; i < w_.size(); ++i)
            if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace treedeg
