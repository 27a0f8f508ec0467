#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qgem {

// Fixed-width bit vector over GF(2). Unused high bits of the last word are
// kept at zero so popcount/compare work wordwise.
struct BitVec {
    std::size_t nbits = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t bits) : nbits(bits), w((bits + 63) / 64, 0) {}

    std::size_t size() const { return nbits; }
    std::size_t words() const { return w.size(); }

    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w[i >> 6] |= m;
        else
            w[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void clear() { std::fill(w.begin(), w.end(), 0); }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits == b.nbits && a.w == b.w;
    }

    static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w.size(); ++i) c += std::popcount(a.w[i] & b.w[i]);
        return c;
    }

    // parity of |a AND b|, the GF(2) inner product
    static bool dot(const BitVec& a, const BitVec& b) { return and_popcount(a, b) & 1u; }

    // true iff a has a bit set outside of b
    static bool andnot_any(const BitVec& a, const BitVec& b) {
        for (std::size_t i = 0; i < a.w.size(); ++i)
            if (a.w[i] & ~b.w[i]) return true;
        return false;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < nbits; ++i)
            if (get(i)) out.push_back(i);
        return out;
    }
};

}  // namespace qgem
