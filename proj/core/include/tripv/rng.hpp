#pragma once

#include <cstdint>

namespace tripv {

/// SplitMix64. Small, fast, and trivially splittable into independent
/// streams, which is all the sampling code needs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], unbiased (rejection sampling).
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;
        if (span == UINT64_MAX) return next();
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + v % range;
    }

    /// Independent stream for a task, derived from (master seed, task id) only.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t task_id) {
        SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (task_id + 1)));
        return SplitMix64(mix.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace tripv
