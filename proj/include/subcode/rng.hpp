#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace subcode {

/// Counter-based generator, pinned so that other implementations can
/// reproduce every seeded experiment bit for bit:
///
///   mix(z)     = SplitMix64 finalizer (shifts 30/27/31, multipliers
///                0xBF58476D1CE4E5B9, 0x94D049BB133111EB)
///   next()     : counter += 1; return mix(key + counter * 0x9E3779B97F4A7C15)
///   split(s)   : child key = mix(key ^ (s * 0x9E3779B97F4A7C15 + 0xD1B54A32D192ED03)), counter 0
///   uniform(b) : draw x = next() until x >= (2^64 mod b); return x mod b
///
/// A generator seeded with `seed` starts with key = seed, so its stream equals
/// the classic SplitMix64 sequence for that seed.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next();
    /// Unbiased integer in [0, bound); bound must be positive.
    std::uint64_t uniform(std::uint64_t bound);
    CounterRng split(std::uint64_t stream) const;

    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Fisher-Yates, i from size-1 down to 1, swap with uniform(i + 1).
template <typename T>
void seeded_shuffle(std::vector<T>& items, CounterRng& rng) {
    for (std::size_t i = items.size(); i-- > 1;) {
        const auto j = static_cast<std::size_t>(rng.uniform(i + 1));
        if (j != i) std::swap(items[i], items[j]);
    }
}

}  // namespace subcode
