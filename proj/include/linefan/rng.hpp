#pragma once

// Seeded 64-bit linear congruential generator; all randomized choices in the
// library are drawn from it so every run is replayable from its seed.

#include <cstdint>

namespace linefan {

class Lcg {
public:
    static constexpr std::uint64_t kA = 6364136223846793005ULL;
    static constexpr std::uint64_t kC = 1442695040888963407ULL;

    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * kA + kC;
        return state_;
    }

    // Uniform-ish integer in [lo, hi] from the high bits.
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>((next() >> 33U) % span);
    }

    // Nonzero integer in [-bound, bound].
    long nonzero(long bound) {
        long v = uniform(-bound, bound - 1);
        return v >= 0 ? v + 1 : v;
    }

    // Independent child generator for a sub-task.
    Lcg fork(std::uint64_t tag) { return Lcg(next() ^ (tag * 0x9E3779B97F4A7C15ULL)); }

private:
    std::uint64_t state_;
};

}  // namespace linefan
