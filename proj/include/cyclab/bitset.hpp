#ifndef CYCLAB_BITSET_HPP
#define CYCLAB_BITSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cyclab {

// Fixed-size bitset sized at runtime. Vertex sets and adjacency rows use
// this so degree-in-set queries reduce to word AND + popcount.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("Bitset: negative size");
    }

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    static Bitset of(int n, std::initializer_list<int> xs) {
        Bitset b(n);
        for (int x : xs) b.set(x);
        return b;
    }

    int size() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check(i);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(int i) {
        check(i);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int and_count(const Bitset& o) const {
        require_same(o);
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        require_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset operator&(const Bitset& o) const {
        require_same(o);
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        require_same(o);
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    // Complement within [0, n).
    Bitset complement() const {
        Bitset r = full(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~w_[i];
        return r;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(int(i) * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    // First set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Bitset: index out of range");
    }
    void require_same(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Bitset: size mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

using VertexSet = Bitset;

}  // namespace cyclab

#endif
