#pragma once

#include <cstdint>
#include <limits>

namespace localhk {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: the i-th output is mix64(key + i * golden).
/// Satisfies UniformRandomBitGenerator, so it plugs into <random>
/// distributions.
class CounterStream {
public:
    using result_type = std::uint64_t;

    constexpr explicit CounterStream(std::uint64_t key) noexcept : state_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// What a substream is used for. Distinct phases never share a stream.
enum class StreamPhase : std::uint64_t {
    draw_t = 1,
    walk_positive = 2,
    walk_negative = 3,
    sample_seed = 4,
};

/// Independent stream for (seed, phase, index). Depends only on its key, so
/// results do not change with how samples are scheduled across threads.
constexpr CounterStream substream(std::uint64_t seed, StreamPhase phase, std::uint64_t index) noexcept {
    const auto p = static_cast<std::uint64_t>(phase);
    return CounterStream(mix64(mix64(seed ^ mix64(p * 0xd1b54a32d192ed03ULL)) + mix64(index + 0x632be59bd9b4e019ULL)));
}

/// Derived master seed, e.g. for the walk sampler inside outer sample i.
constexpr std::uint64_t derive_seed(std::uint64_t seed, StreamPhase phase, std::uint64_t index) noexcept {
    auto s = substream(seed, phase, index);
    return s();
}

}  // namespace localhk
