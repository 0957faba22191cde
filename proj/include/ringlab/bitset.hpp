#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ringlab {

// Fixed-universe bitset used for element subsets of rings and modules.
// Universe size is set at construction; all binary operations require
// matching sizes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
        return r;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    // Calls f(i) for every member i in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> v;
        v.reserve(count());
        for_each([&](std::size_t i) { v.push_back(static_cast<std::uint32_t>(i)); });
        return v;
    }

    // First member, or universe() if empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<unsigned>(__builtin_ctzll(w_[k]));
        return n_;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<std::size_t>{}(n_);
        for (auto w : w_) h = h * 1099511628211ULL + std::hash<std::uint64_t>{}(w);
        return h;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](std::size_t i) {
            if (sep) s += ",";
            s += std::to_string(i);
            sep = true;
        });
        return s + "}";
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ringlab
