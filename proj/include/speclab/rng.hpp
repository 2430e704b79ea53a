#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "speclab/types.hpp"

namespace speclab {

// Counter-based generator (philox4x32-10).  Streams are independent by
// construction: the 128-bit counter is (block index, stream id) and the key
// is the master seed, so any (seed, stream) pair can be sampled in any order
// or from any thread without shared state.
class Philox {
public:
    Philox(uint64_t seed, uint64_t stream)
        : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
          stream_(stream) {}

    // Labeled splitting: stream id derived from a textual label and an index.
    static Philox split(uint64_t seed, std::string_view label, uint64_t index) {
        return Philox(seed, fnv1a64(label) + index * 0x9E3779B97F4A7C15ULL);
    }

    uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    uint64_t next_u64() {
        uint64_t lo = next_u32();
        uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform on the open interval (0,1); never returns an endpoint.
    double uniform01() {
        return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32;
    }

    // Standard real Gaussian, Box-Muller with explicit arithmetic so the
    // stream is reproducible across platforms.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double r = std::sqrt(-2.0 * std::log(uniform01()));
        double t = kTwoPi * uniform01();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Standard complex Gaussian with E|z|^2 = 1, so |z|^2 ~ Exp(1).
    cplx gaussian_complex() {
        double r = std::sqrt(-std::log(uniform01()));
        double t = kTwoPi * uniform01();
        return {r * std::cos(t), r * std::sin(t)};
    }

    static uint64_t fnv1a64(std::string_view s) {
        uint64_t hash = 0xCBF29CE484222325ULL;
        for (char c : s) {
            hash ^= static_cast<unsigned char>(c);
            hash *= 0x100000001B3ULL;
        }
        return hash;
    }

private:
    static void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
        uint64_t p = static_cast<uint64_t>(a) * b;
        hi = static_cast<uint32_t>(p >> 32);
        lo = static_cast<uint32_t>(p);
    }

    void refill() {
        std::array<uint32_t, 4> ctr = {
            static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
            static_cast<uint32_t>(stream_), static_cast<uint32_t>(stream_ >> 32)};
        std::array<uint32_t, 2> key = key_;
        for (int round = 0; round < 10; ++round) {
            uint32_t hi0, lo0, hi1, lo1;
            mulhilo(0xD2511F53u, ctr[0], hi0, lo0);
            mulhilo(0xCD9E8D57u, ctr[2], hi1, lo1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        buf_ = ctr;
        pos_ = 0;
        ++block_;
    }

    std::array<uint32_t, 2> key_;
    uint64_t stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buf_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace speclab
