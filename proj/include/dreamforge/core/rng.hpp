#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace df {

// Counter-based RNG (Philox 4x32-10). A stream is keyed by
// (global seed, stream label); every draw is addressed by a 64-bit index,
// so results do not depend on evaluation order or thread scheduling.
namespace detail {

inline constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> ctr, uint32_t k0, uint32_t k1) {
    for (int round = 0; round < 10; ++round) {
        const uint64_t p0 = uint64_t(kPhiloxM0) * ctr[0];
        const uint64_t p1 = uint64_t(kPhiloxM1) * ctr[2];
        const uint32_t lo0 = uint32_t(p0), hi0 = uint32_t(p0 >> 32);
        const uint32_t lo1 = uint32_t(p1), hi1 = uint32_t(p1 >> 32);
        ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return ctr;
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace detail

class RngStream {
public:
    RngStream() : RngStream(0, "") {}
    RngStream(uint64_t seed, std::string_view label) {
        const uint64_t lh = detail::fnv1a64(label);
        key0_ = uint32_t(seed) ^ uint32_t(lh);
        key1_ = uint32_t(seed >> 32) ^ uint32_t(lh >> 32);
    }

    /// Derive an independent child stream, e.g. per record or iteration.
    RngStream child(std::string_view label, uint64_t index = 0) const {
        RngStream s;
        const uint64_t lh = detail::fnv1a64(label) ^ (0x9E3779B97F4A7C15ull * (index + 1));
        s.key0_ = key0_ ^ uint32_t(lh);
        s.key1_ = key1_ ^ uint32_t(lh >> 32);
        return s;
    }

    /// 32 random bits for draw `index`, slot in [0,4).
    uint32_t bits(uint64_t index, uint32_t slot = 0) const {
        const auto out = detail::philox4x32({uint32_t(index), uint32_t(index >> 32), slot, 0}, key0_, key1_);
        return out[0];
    }

    /// Uniform in [0,1) with 53 bits of entropy at draw `index`.
    double uniform(uint64_t index) const {
        const auto out = detail::philox4x32({uint32_t(index), uint32_t(index >> 32), 0, 0}, key0_, key1_);
        const uint64_t v = (uint64_t(out[0]) << 21) ^ (uint64_t(out[1]) << 0);
        return double(v & ((1ull << 53) - 1)) * 0x1.0p-53;
    }

    double uniform(uint64_t index, double lo, double hi) const {
        return lo + (hi - lo) * uniform(index);
    }

    /// Standard normal via Box-Muller at draw `index`.
    double normal(uint64_t index) const {
        const auto out = detail::philox4x32({uint32_t(index), uint32_t(index >> 32), 1, 0}, key0_, key1_);
        const double u1 = (double(out[0]) + 1.0) * 0x1.0p-32; // (0,1]
        const double u2 = double(out[1]) * 0x1.0p-32;         // [0,1)
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    uint64_t integer(uint64_t index, uint64_t n) const {
        // Modulo bias is negligible for n << 2^64.
        const auto out = detail::philox4x32({uint32_t(index), uint32_t(index >> 32), 2, 0}, key0_, key1_);
        const uint64_t v = (uint64_t(out[0]) << 32) | out[1];
        return v % n;
    }

    // Stateful convenience: sequential draws from an internal cursor.
    double next_uniform() { return uniform(cursor_++); }
    double next_uniform(double lo, double hi) { return uniform(cursor_++, lo, hi); }
    double next_normal() { return normal(cursor_++); }
    uint64_t next_integer(uint64_t n) { return integer(cursor_++, n); }

private:
    uint32_t key0_ = 0, key1_ = 0;
    uint64_t cursor_ = 0;
};

} // namespace df
