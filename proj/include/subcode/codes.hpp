#pragma once

#include <cstdint>
#include <vector>

#include "subcode/grassmann.hpp"

namespace subcode {

/// A nonempty set of distinct subspaces of one ambient space.
class SubspaceCode {
public:
    explicit SubspaceCode(std::vector<Subspace> words);

    const std::vector<Subspace>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    std::size_t ambient() const { return words_.front().ambient(); }
    const FieldPtr& field_ptr() const { return words_.front().field_ptr(); }
    bool constant_dimension() const;

private:
    std::vector<Subspace> words_;
};

struct DecodeEntry {
    Subspace codeword;
    std::size_t distance;
};

/// Entries sorted by (distance, enumeration order). `unique` is set when
/// exactly one entry attains the smallest distance.
struct DecodeResult {
    std::vector<DecodeEntry> entries;
    bool unique = false;
};

enum class ListMethod { Oracle, Pluecker };

/// Throws InvalidArgument for a single-codeword code.
std::size_t code_min_distance(const SubspaceCode& code, Metric metric);

/// Every codeword at minimal distance from the received word.
DecodeResult min_distance_decode(const SubspaceCode& code, const Subspace& received, Metric metric);

/// Codewords within distance e of the received word. The Pluecker method
/// embeds each codeword once and tests it against the ball equations around
/// the received word; it needs a constant-dimension code of the received
/// word's dimension and the injection metric.
DecodeResult list_decode(const SubspaceCode& code, const Subspace& received, std::size_t e, ListMethod method,
                         Metric metric = Metric::Injection);

/// Seeded greedy code: shuffle Grass_q(k, n) with CounterRng(seed), accept a
/// subspace when its injection distance to every accepted word is at least
/// `min_injection_distance`, stop at `size`. Throws Infeasible when the
/// candidates run out first.
SubspaceCode random_constant_dim_code(const FieldPtr& field, std::size_t k, std::size_t n, std::size_t size,
                                      std::size_t min_injection_distance, std::uint64_t seed,
                                      const EnumerationBudget& budget = {});

}  // namespace subcode
