#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace boxclique {

// Hard vertex capacity of the toolkit; one bit row per vertex per color.
inline constexpr int kMaxVertices = 128;

// 128-bit vertex set.
struct Bits128 {
    std::array<std::uint64_t, 2> w{0, 0};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
    bool any() const { return (w[0] | w[1]) != 0; }
    bool none() const { return !any(); }

    // Lowest set bit, -1 if empty.
    int first() const {
        if (w[0]) return std::countr_zero(w[0]);
        if (w[1]) return 64 + std::countr_zero(w[1]);
        return -1;
    }

    // Lowest set bit strictly above i, -1 if none.
    int next_above(int i) const {
        Bits128 m = *this;
        int word = (i + 1) >> 6;
        int off = (i + 1) & 63;
        if (word > 1) return -1;
        m.w[word] &= ~std::uint64_t(0) << off;
        if (word == 0) {
            if (m.w[0]) return std::countr_zero(m.w[0]);
            if (m.w[1]) return 64 + std::countr_zero(m.w[1]);
            return -1;
        }
        return m.w[1] ? 64 + std::countr_zero(m.w[1]) : -1;
    }

    // All bits strictly above i.
    static Bits128 above(int i) {
        Bits128 m;
        int j = i + 1;
        if (j < 64) {
            m.w[0] = ~std::uint64_t(0) << j;
            m.w[1] = ~std::uint64_t(0);
        } else if (j < 128) {
            m.w[1] = ~std::uint64_t(0) << (j - 64);
        }
        return m;
    }

    // Lowest n bits set.
    static Bits128 low(int n) {
        Bits128 m;
        if (n >= 128) { m.w = {~std::uint64_t(0), ~std::uint64_t(0)}; return m; }
        if (n > 64) {
            m.w[0] = ~std::uint64_t(0);
            m.w[1] = (std::uint64_t(1) << (n - 64)) - 1;
        } else if (n == 64) {
            m.w[0] = ~std::uint64_t(0);
        } else if (n > 0) {
            m.w[0] = (std::uint64_t(1) << n) - 1;
        }
        return m;
    }

    Bits128 without(const Bits128& o) const {
        Bits128 m = *this;
        m.w[0] &= ~o.w[0];
        m.w[1] &= ~o.w[1];
        return m;
    }

    Bits128& operator&=(const Bits128& o) { w[0] &= o.w[0]; w[1] &= o.w[1]; return *this; }
    Bits128& operator|=(const Bits128& o) { w[0] |= o.w[0]; w[1] |= o.w[1]; return *this; }
    Bits128& operator^=(const Bits128& o) { w[0] ^= o.w[0]; w[1] ^= o.w[1]; return *this; }

    friend Bits128 operator&(Bits128 a, const Bits128& b) { return a &= b; }
    friend Bits128 operator|(Bits128 a, const Bits128& b) { return a |= b; }
    friend Bits128 operator^(Bits128 a, const Bits128& b) { return a ^= b; }
    friend bool operator==(const Bits128& a, const Bits128& b) { return a.w == b.w; }

    template <class F>
    void for_each(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            std::uint64_t x = w[word];
            while (x) {
                int b = std::countr_zero(x);
                f(word * 64 + b);
                x &= x - 1;
            }
        }
    }
};

} // namespace boxclique
