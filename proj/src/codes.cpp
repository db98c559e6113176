#include "subcode/codes.hpp"

#include <algorithm>
#include <limits>

#include "subcode/errors.hpp"
#include "subcode/rng.hpp"
#include "subcode/schubert.hpp"

namespace subcode {

SubspaceCode::SubspaceCode(std::vector<Subspace> words) : words_(std::move(words)) {
    if (words_.empty()) throw InvalidArgument("a subspace code needs at least one codeword");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        require_same_field(words_[0].field(), words_[i].field(), "subspace code");
        if (words_[i].ambient() != words_[0].ambient())
            throw InvalidArgument("subspace code: codewords live in different ambient spaces");
        for (std::size_t j = 0; j < i; ++j)
            if (words_[i] == words_[j]) throw InvalidArgument("subspace code: duplicate codeword");
    }
}

bool SubspaceCode::constant_dimension() const {
    return std::all_of(words_.begin(), words_.end(),
                       [this](const Subspace& s) { return s.dim() == words_.front().dim(); });
}

std::size_t code_min_distance(const SubspaceCode& code, Metric metric) {
    if (code.size() < 2) throw InvalidArgument("minimum distance needs at least two codewords");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto& w = code.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, distance(w[i], w[j], metric));
    return best;
}

namespace {

DecodeResult finish(std::vector<DecodeEntry> entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const DecodeEntry& a, const DecodeEntry& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return enumeration_less(a.codeword, b.codeword);
    });
    DecodeResult r;
    r.unique = !entries.empty() && (entries.size() == 1 || entries[0].distance < entries[1].distance);
    r.entries = std::move(entries);
    return r;
}

void check_received(const SubspaceCode& code, const Subspace& received) {
    require_same_field(code.words().front().field(), received.field(), "decode");
    if (received.ambient() != code.ambient()) throw InvalidArgument("decode: received word has the wrong ambient");
}

}  // namespace

DecodeResult min_distance_decode(const SubspaceCode& code, const Subspace& received, Metric metric) {
    check_received(code, received);
    std::vector<DecodeEntry> entries;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& w : code.words()) {
        const std::size_t d = distance(w, received, metric);
        if (d < best) {
            best = d;
            entries.clear();
        }
        if (d == best) entries.push_back({w, d});
    }
    return finish(std::move(entries));
}

DecodeResult list_decode(const SubspaceCode& code, const Subspace& received, std::size_t e, ListMethod method,
                         Metric metric) {
    check_received(code, received);
    std::vector<DecodeEntry> entries;
    if (method == ListMethod::Oracle) {
        for (const auto& w : code.words()) {
            const std::size_t d = distance(w, received, metric);
            if (d <= e) entries.push_back({w, d});
        }
        return finish(std::move(entries));
    }

    if (metric != Metric::Injection) throw InvalidArgument("Pluecker list decoding uses the injection metric");
    if (!code.constant_dimension()) throw InvalidArgument("Pluecker list decoding needs a constant-dimension code");
    if (code.words().front().dim() != received.dim())
        throw InvalidArgument("Pluecker list decoding: received word and code differ in dimension");
    const auto system = ball_linear_system(received, e);
    for (const auto& w : code.words()) {
        if (w.dim() == 0 || system_satisfied(system, pluecker_embed(w)))
            entries.push_back({w, injection_distance(w, received)});
    }
    return finish(std::move(entries));
}

SubspaceCode random_constant_dim_code(const FieldPtr& field, std::size_t k, std::size_t n, std::size_t size,
                                      std::size_t min_injection_distance, std::uint64_t seed,
                                      const EnumerationBudget& budget) {
    if (size == 0) throw InvalidArgument("code size must be positive");
    auto candidates = enumerate_grassmannian(field, k, n, budget);
    CounterRng rng(seed);
    seeded_shuffle(candidates, rng);
    std::vector<Subspace> chosen;
    for (auto& c : candidates) {
        const bool far_enough = std::all_of(chosen.begin(), chosen.end(), [&](const Subspace& s) {
            return injection_distance(s, c) >= min_injection_distance;
        });
        if (!far_enough) continue;
        chosen.push_back(std::move(c));
        if (chosen.size() == size) return SubspaceCode(std::move(chosen));
    }
    throw Infeasible("could not find " + std::to_string(size) + " codewords at injection distance >= " +
                     std::to_string(min_injection_distance) + " (found " + std::to_string(chosen.size()) + ")");
}

}  // namespace subcode
