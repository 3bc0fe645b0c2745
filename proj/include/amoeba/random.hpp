#pragma once

#include <cstdint>
#include <numbers>

namespace amoeba {

/// Counter-based random stream: the i-th draw is a pure function of
/// (seed, stream, i), so any draw can be reproduced without replaying
/// the ones before it.
class CounterRng {
public:
    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

    constexpr std::uint64_t at(std::uint64_t counter) const noexcept {
        return mix(key_ + counter * 0x9e3779b97f4a7c15ULL);
    }

    std::uint64_t next() noexcept { return at(counter_++); }

    /// Uniform in [0, 1).
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    double phase() noexcept { return uniform(0.0, 2.0 * std::numbers::pi); }

    /// Derived independent stream, used to give each work item its own generator.
    CounterRng substream(std::uint64_t index) const noexcept {
        CounterRng r(0);
        r.key_ = mix(key_ ^ mix(index + 0xd1b54a32d192ed03ULL));
        return r;
    }

private:
    static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
        // SplitMix64 finalizer.
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace amoeba
