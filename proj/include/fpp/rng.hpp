#pragma once

#include <cstdint>
#include <cmath>
#include <array>

namespace fpp {

// Counter-based generator (Philox4x32-10). A stream is identified by
// (seed, stream_id); the seed is the cipher key and the 128-bit input block is
// (block_counter, stream_id), so distinct stream ids give statistically
// independent sequences and a fixed (seed, stream_id) pair reproduces the
// same outputs no matter how work is scheduled across threads.
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_(stream_id), counter_(0), have_(0) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    std::uint64_t next_u64() {
        if (have_ == 0) refill();
        return buf_[--have_];
    }

    // in [0,1)
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // in (0,1); rejects the zero mantissa (probability 2^-53)
    double u01_open() {
        std::uint64_t m;
        do { m = next_u64() >> 11; } while (m == 0);
        return static_cast<double>(m) * 0x1.0p-53;
    }

    // strictly positive standard exponential
    double exponential() { return -std::log(u01_open()); }

    // standard Gumbel, realized through the coupling G = log(1/E)
    double gumbel() { return -std::log(exponential()); }

    // uniform index in [0, n), n >= 1 (Lemire multiply-shift)
    std::uint64_t index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // One-shot value keyed by (seed, stream_id, tag): a pure function, used
    // for per-edge tie-break keys without materializing key arrays.
    static std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t stream_id,
                                   std::uint64_t tag) {
        std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
            static_cast<std::uint32_t>(stream_id),
            static_cast<std::uint32_t>(stream_id >> 32)};
        std::array<std::uint32_t, 4> out = philox(
            ctr, {static_cast<std::uint32_t>(seed),
                  static_cast<std::uint32_t>(seed >> 32)});
        return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    }

    static double keyed_u01(std::uint64_t seed, std::uint64_t stream_id,
                            std::uint64_t tag) {
        return static_cast<double>(keyed_u64(seed, stream_id, tag) >> 11) * 0x1.0p-53;
    }

    // Exposed for the known-answer tests.
    static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
            const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

private:
    void refill() {
        std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(counter_),
            static_cast<std::uint32_t>(counter_ >> 32),
            static_cast<std::uint32_t>(stream_),
            static_cast<std::uint32_t>(stream_ >> 32)};
        std::array<std::uint32_t, 4> out = philox(
            ctr, {static_cast<std::uint32_t>(seed_),
                  static_cast<std::uint32_t>(seed_ >> 32)});
        ++counter_;
        buf_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
        buf_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
        have_ = 2;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
    int have_;
    std::uint64_t buf_[2];
};

}  // namespace fpp
