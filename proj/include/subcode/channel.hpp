#pragma once

#include <cstdint>

#include "subcode/grassmann.hpp"
#include "subcode/rng.hpp"

namespace subcode {

struct ChannelConfig {
    std::size_t erasures = 0;    // dimension lost from the sent word
    std::size_t insertions = 0;  // dimension of the injected error space
    std::uint64_t seed = 0;
};

/// R = retained ⊕ error, with retained ⊂ sent.
struct Transmission {
    Subspace retained;
    Subspace error;
    Subspace received;
};

/// Uniform d-dimensional subspace of v: full-rank d x dim(v) coefficient
/// matrices are drawn entrywise with rng.uniform(q), rank-deficient draws
/// rejected, and the product with v's generator canonicalized.
Subspace random_subspace_of(const Subspace& v, std::size_t d, CounterRng& rng);

/// Operator channel. The retained part is a uniform (k - erasures)-subspace
/// of the sent word; the error space is a uniform t x n draw from the whole
/// ambient space, redrawn until it is independent of the retained part.
/// Throws Infeasible when erasures > k or k - erasures + insertions > n.
Transmission transmit_detailed(const Subspace& sent, const ChannelConfig& cfg);
Subspace transmit(const Subspace& sent, const ChannelConfig& cfg);

}  // namespace subcode
