#include "subcode/channel.hpp"

#include <string>

#include "subcode/errors.hpp"

namespace subcode {
namespace {

Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, CounterRng& rng) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Elem>(rng.uniform(field->order()));
    return m;
}

}  // namespace

Subspace random_subspace_of(const Subspace& v, std::size_t d, CounterRng& rng) {
    if (d > v.dim()) throw InvalidArgument("random_subspace_of: d exceeds dim V");
    if (d == 0) return Subspace::zero(v.field_ptr(), v.ambient());
    while (true) {
        Matrix coeffs = random_matrix(v.field_ptr(), d, v.dim(), rng);
        if (rank(coeffs) == d) return Subspace::canonicalize(coeffs * v.generator());
    }
}

Transmission transmit_detailed(const Subspace& sent, const ChannelConfig& cfg) {
    const std::size_t k = sent.dim(), n = sent.ambient();
    if (cfg.erasures > k)
        throw Infeasible("channel: " + std::to_string(cfg.erasures) + " erasures from a " + std::to_string(k) +
                         "-dimensional word");
    const std::size_t kept = k - cfg.erasures;
    if (kept + cfg.insertions > n)
        throw Infeasible("channel: received dimension " + std::to_string(kept + cfg.insertions) +
                         " exceeds ambient " + std::to_string(n));
    CounterRng rng(cfg.seed);
    Subspace retained = random_subspace_of(sent, kept, rng);
    if (cfg.insertions == 0) return {retained, Subspace::zero(sent.field_ptr(), n), retained};
    while (true) {
        Matrix e = random_matrix(sent.field_ptr(), cfg.insertions, n, rng);
        Matrix both = retained.generator().stacked(e);
        if (rank(both) == kept + cfg.insertions)
            return {retained, Subspace::canonicalize(e), Subspace::canonicalize(both)};
    }
}

Subspace transmit(const Subspace& sent, const ChannelConfig& cfg) { return transmit_detailed(sent, cfg).received; }

}  // namespace subcode
