#include "subcode/rng.hpp"

#include <stdexcept>

namespace subcode {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::next() {
    ++counter_;
    return mix(key_ + counter_ * kGamma);
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

CounterRng CounterRng::split(std::uint64_t stream) const {
    return CounterRng(mix(key_ ^ (stream * kGamma + 0xD1B54A32D192ED03ULL)));
}

}  // namespace subcode
