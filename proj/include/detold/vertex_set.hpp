#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace detold {

// Subset of a fixed vertex universe {0, ..., n-1}, stored as 64-bit words so
// that union/intersection/difference run word-parallel.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void insert(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void erase(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }

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
    VertexSet& operator^=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // Set difference: this minus o.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

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

    // Popcounts of combinations without materializing a temporary.
    int count_and(const VertexSet& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    int count_minus(const VertexSet& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
        return c;
    }
    int count_xor(const VertexSet& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] ^ o.w_[i]);
        return c;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                fn(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Orders equal-size sets by their sorted member sequences; used to pick
// canonical witnesses deterministically.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto va = a.to_vector(), vb = b.to_vector();
    return va < vb;
}

} // namespace detold
