#ifndef DICHROMA_BITSET_HPP
#define DICHROMA_BITSET_HPP

#include <cstdint>
#include <vector>

namespace dichroma {

// Fixed-capacity bitset sized at construction. Adjacency rows and vertex
// sets use this; neighborhood intersections are the hot path of the clique
// search and the pattern matcher.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }

    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset and_not(const Bitset& o) const {
        Bitset r = *this;
        r.subtract(o);
        return r;
    }

    // Complement within capacity.
    Bitset complement() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    int first() const { return next_at(0); }

    // Smallest set bit >= i, or -1.
    int next_at(int i) const {
        if (i >= n_) return -1;
        size_t word = size_t(i) >> 6;
        uint64_t cur = w_[word] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return int(word * 64 + __builtin_ctzll(cur));
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (size_t word = 0; word < w_.size(); ++word) {
            uint64_t cur = w_[word];
            while (cur) {
                f(int(word * 64 + __builtin_ctzll(cur)));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bitset of(int n, const std::vector<int>& ids) {
        Bitset b(n);
        for (int i : ids) b.set(i);
        return b;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace dichroma

#endif
