#include "subcode/grassmann.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "subcode/errors.hpp"

namespace subcode {

EnumerationBudget EnumerationBudget::from_env() {
    EnumerationBudget b;
    if (const char* env = std::getenv("SCHUBERT_ENUM_BUDGET")) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
        if (ec != std::errc{} || *ptr != '\0')
            throw InvalidArgument(std::string("SCHUBERT_ENUM_BUDGET is not a non-negative integer: ") + env);
        b.max_subspaces = v;
    }
    return b;
}

Subspace Subspace::canonicalize(const Matrix& m) {
    auto res = rref(m);
    if (res.pivots.size() != m.rows())
        throw InvalidArgument("generator matrix is rank deficient (rank " + std::to_string(res.pivots.size()) +
                              " < " + std::to_string(m.rows()) + " rows)");
    return Subspace(std::move(res.reduced), std::move(res.pivots));
}

Subspace Subspace::row_space(const Matrix& m) {
    auto res = rref(m);
    const std::size_t r = res.pivots.size();
    return Subspace(res.reduced.top_rows(r), std::move(res.pivots));
}

Subspace Subspace::zero(FieldPtr field, std::size_t n) { return Subspace(Matrix(std::move(field), 0, n), {}); }

Subspace Subspace::transformed(const Matrix& a) const {
    if (a.rows() != ambient() || a.cols() != ambient())
        throw InvalidArgument("transform must be an n x n matrix");
    return canonicalize(gen_ * a);
}

bool enumeration_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
    return a.generator().entries() < b.generator().entries();
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<IndexTuple> all_index_tuples(std::size_t n, std::size_t k) {
    std::vector<IndexTuple> out;
    if (k > n) return out;
    IndexTuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i + 1;
    while (true) {
        out.push_back(t);
        // advance the rightmost position that still has room
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

std::size_t tuple_position(const IndexTuple& t, std::size_t n) {
    const std::size_t k = t.size();
    std::size_t pos = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (t[i] <= prev || t[i] > n) throw InvalidArgument("invalid index tuple");
        // tuples sharing the prefix but with a smaller entry at position i
        for (std::size_t v = prev + 1; v < t[i]; ++v) pos += binomial(n - v, k - i - 1);
        prev = t[i];
    }
    return pos;
}

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) throw InvalidArgument("gaussian_binomial requires k <= n");
    BigInt num = 1, den = 1;
    const BigInt bq = q;
    for (std::size_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(bq, static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(bq, static_cast<unsigned>(k - i)) - 1;
    }
    return num / den;
}

void for_each_subspace(const FieldPtr& field, std::size_t k, std::size_t n,
                       const std::function<void(const Subspace&)>& visit, const EnumerationBudget& budget) {
    if (k > n) throw InvalidArgument("enumeration requires k <= n");
    const BigInt bound = boost::multiprecision::pow(BigInt(field->order()), static_cast<unsigned>(k * (n - k))) *
                         BigInt(binomial(n, k));
    if (bound > budget.max_subspaces)
        throw BudgetExceeded("enumerating Grass(" + std::to_string(k) + "," + std::to_string(n) + ") over GF(" +
                             std::to_string(field->order()) + ") needs up to " + bound.str() +
                             " subspaces; budget is " + std::to_string(budget.max_subspaces));
    const Elem q = field->order();
    for (const IndexTuple& piv : all_index_tuples(n, k)) {
        std::vector<bool> is_pivot(n + 1, false);
        for (auto c : piv) is_pivot[c] = true;
        // free positions row-major: (row i, column j > pivot_i, j not a pivot)
        std::vector<std::size_t> free_pos;
        Matrix base(field, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            base(i, piv[i] - 1) = 1;
            for (std::size_t j = piv[i] + 1; j <= n; ++j)
                if (!is_pivot[j]) free_pos.push_back(i * n + (j - 1));
        }
        std::vector<Elem> digits(free_pos.size(), 0);
        while (true) {
            std::vector<Elem> data = base.entries();
            for (std::size_t d = 0; d < free_pos.size(); ++d) data[free_pos[d]] = digits[d];
            visit(Subspace(Matrix(field, k, n, std::move(data)), piv));
            // odometer, last free position fastest
            std::size_t d = digits.size();
            while (d > 0 && digits[d - 1] == q - 1) digits[--d] = 0;
            if (d == 0) break;
            ++digits[d - 1];
        }
    }
}

std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t k, std::size_t n,
                                             const EnumerationBudget& budget) {
    std::vector<Subspace> out;
    for_each_subspace(field, k, n, [&out](const Subspace& s) { out.push_back(s); }, budget);
    return out;
}

namespace {

void require_comparable(const Subspace& u, const Subspace& v) {
    require_same_field(u.field(), v.field(), "distance");
    if (u.ambient() != v.ambient()) throw InvalidArgument("distance: ambient dimensions differ");
}

}  // namespace

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    require_comparable(u, v);
    const auto dims = stack_dims(u.generator(), v.generator());
    return u.dim() + v.dim() - 2 * dims.intersection;
}

std::size_t injection_distance(const Subspace& u, const Subspace& v) {
    require_comparable(u, v);
    const auto dims = stack_dims(u.generator(), v.generator());
    return std::max(u.dim(), v.dim()) - dims.intersection;
}

std::size_t distance(const Subspace& u, const Subspace& v, Metric metric) {
    return metric == Metric::Subspace ? subspace_distance(u, v) : injection_distance(u, v);
}

bool PlueckerVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Elem e) { return e == 0; });
}

void PlueckerVector::normalize() {
    auto it = std::find_if(coords.begin(), coords.end(), [](Elem e) { return e != 0; });
    if (it == coords.end()) throw InvalidArgument("zero vector has no projective normalization");
    const Elem s = field->inv(*it);
    for (auto& c : coords) c = field->mul(c, s);
    normalized = true;
}

PlueckerVector pluecker_coordinates(const Matrix& gen) {
    PlueckerVector v{gen.field_ptr(), gen.cols(), gen.rows(), {}, false};
    IndexTuple all_rows(gen.rows());
    for (std::size_t i = 0; i < gen.rows(); ++i) all_rows[i] = i + 1;
    const auto tuples = all_index_tuples(gen.cols(), gen.rows());
    v.coords.reserve(tuples.size());
    for (const auto& cols : tuples) v.coords.push_back(minor(gen, all_rows, cols));
    return v;
}

PlueckerVector pluecker_embed(const Subspace& u) {
    PlueckerVector v = pluecker_coordinates(u.generator());
    v.normalize();
    return v;
}

bool pluecker_relations_check(const PlueckerVector& v) {
    if (v.coords.size() != binomial(v.n, v.k)) throw InvalidArgument("Pluecker vector has the wrong length");
    if (v.is_zero()) return false;
    const std::size_t k = v.k, n = v.n;
    if (k == 0 || k >= n) return true;
    const Field& f = *v.field;
    const auto heads = all_index_tuples(n, k - 1);
    const auto tails = all_index_tuples(n, k + 1);
    IndexTuple merged(k), rest(k);
    for (const auto& head : heads) {
        for (const auto& tail : tails) {
            Elem sum = 0;
            for (std::size_t l = 0; l <= k; ++l) {
                const std::size_t j = tail[l];
                if (std::find(head.begin(), head.end(), j) != head.end()) continue;
                // sort head + j; sign from the entries of head greater than j
                std::size_t greater = 0;
                std::size_t w = 0;
                bool placed = false;
                for (std::size_t h : head) {
                    if (!placed && h > j) {
                        merged[w++] = j;
                        placed = true;
                    }
                    if (h > j) ++greater;
                    merged[w++] = h;
                }
                if (!placed) merged[w++] = j;
                w = 0;
                for (std::size_t m = 0; m <= k; ++m)
                    if (m != l) rest[w++] = tail[m];
                Elem term = f.mul(v.at(merged), v.at(rest));
                // (-1)^(l+1) with 1-based l, times the sorting sign
                if (((l + 1) + greater) % 2 == 1) term = f.neg(term);
                sum = f.add(sum, term);
            }
            if (sum != 0) return false;
        }
    }
    return true;
}

std::vector<Subspace> ball_members_by_distance(const Subspace& center, std::size_t e, Metric metric,
                                               BallScope scope, const EnumerationBudget& budget) {
    std::vector<Subspace> out;
    auto visit = [&](const Subspace& s) {
        if (distance(center, s, metric) <= e) out.push_back(s);
    };
    if (scope == BallScope::Grassmannian) {
        for_each_subspace(center.field_ptr(), center.dim(), center.ambient(), visit, budget);
    } else {
        for (std::size_t k = 0; k <= center.ambient(); ++k)
            for_each_subspace(center.field_ptr(), k, center.ambient(), visit, budget);
    }
    return out;
}

}  // namespace subcode
