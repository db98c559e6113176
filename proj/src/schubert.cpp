#include "subcode/schubert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "subcode/errors.hpp"

namespace subcode {

bool tuple_lex_leq(const IndexTuple& a, const IndexTuple& b) {
    if (a.size() != b.size()) throw InvalidArgument("tuple comparison: lengths differ");
    return !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool tuple_bruhat_leq(const IndexTuple& a, const IndexTuple& b) {
    if (a.size() != b.size()) throw InvalidArgument("tuple comparison: lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

IndexTuple ball_bound_tuple(std::size_t k, std::size_t n, std::size_t t) {
    if (k < 1 || k > n) throw InvalidArgument("ball_bound_tuple requires 1 <= k <= n");
    t = std::min(t, k);
    IndexTuple out;
    out.reserve(k);
    for (std::size_t i = t + 1; i <= k; ++i) out.push_back(i);
    for (std::size_t i = n - t + 1; i <= n; ++i) out.push_back(i);
    return out;
}

std::vector<IndexTuple> ball_forbidden_tuples(std::size_t k, std::size_t n, std::size_t t) {
    const IndexTuple bound = ball_bound_tuple(k, n, t);
    std::vector<IndexTuple> out;
    for (auto& j : all_index_tuples(n, k))
        if (!tuple_bruhat_leq(j, bound)) out.push_back(std::move(j));
    return out;
}

Matrix transition_matrix(const Subspace& u) {
    const std::size_t k = u.dim(), n = u.ambient();
    Matrix a(u.field_ptr(), n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = u.generator()(i, j);
    std::size_t row = k;
    std::size_t next_pivot = 0;
    for (std::size_t c = 1; c <= n; ++c) {
        if (next_pivot < k && u.pivots()[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        a(row++, c - 1) = 1;
    }
    if (rank(a) != n) throw std::logic_error("transition matrix is singular; input was not in RREF");
    return a;
}

Matrix pivot_permutation_inverse(const Matrix& a, const std::vector<std::size_t>& pivots) {
    const std::size_t n = a.rows(), k = pivots.size();
    if (a.cols() != n) throw InvalidArgument("pivot_permutation_inverse: matrix is not square");
    const Field& f = a.field();

    // order[i] = source column (0-based) of permuted column i: pivots first
    std::vector<std::size_t> order;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) {
        if (p < 1 || p > n || is_pivot[p - 1]) throw InvalidArgument("pivot_permutation_inverse: bad pivots");
        is_pivot[p - 1] = true;
        order.push_back(p - 1);
    }
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) order.push_back(c);

    Matrix permuted(a.field_ptr(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) permuted(i, j) = a(i, order[j]);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool in_upper_right = i < k && j >= k;
            if (!in_upper_right && permuted(i, j) != (i == j ? 1u : 0u))
                throw InvalidArgument("pivot_permutation_inverse: input is not a transition matrix for these pivots");
        }

    Matrix permuted_inv = permuted;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = k; j < n; ++j) permuted_inv(i, j) = f.neg(permuted(i, j));

    Matrix inv(a.field_ptr(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(order[i], j) = permuted_inv(i, j);

    if (!(a * inv == Matrix::identity(a.field_ptr(), n)))
        throw InvalidArgument("pivot_permutation_inverse: A * A^-1 != I");
    return inv;
}

CompoundMatrix compound_matrix(const Matrix& a, std::size_t k) {
    if (k > std::min(a.rows(), a.cols())) throw InvalidArgument("compound_matrix: k exceeds matrix size");
    const auto row_tuples = all_index_tuples(a.rows(), k);
    const auto col_tuples = all_index_tuples(a.cols(), k);
    Matrix out(a.field_ptr(), row_tuples.size(), col_tuples.size());
    for (std::size_t i = 0; i < row_tuples.size(); ++i)
        for (std::size_t j = 0; j < col_tuples.size(); ++j) out(i, j) = minor(a, row_tuples[i], col_tuples[j]);
    return {k, std::move(out)};
}

std::vector<Elem> compound_column(const Matrix& a, std::size_t k, const IndexTuple& column) {
    if (column.size() != k) throw InvalidArgument("compound_column: column tuple has the wrong length");
    std::vector<Elem> out;
    for (const auto& r : all_index_tuples(a.rows(), k)) out.push_back(minor(a, r, column));
    return out;
}

bool LinearForm::satisfied_by(const PlueckerVector& v) const {
    if (v.coords.size() != coeffs.size()) throw InvalidArgument("linear form and vector lengths differ");
    const Field& f = *v.field;
    Elem acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0 && v.coords[i] != 0) acc = f.add(acc, f.mul(coeffs[i], v.coords[i]));
    return acc == 0;
}

std::vector<LinearForm> ball_linear_system(const Subspace& center, std::size_t t) {
    const std::size_t k = center.dim(), n = center.ambient();
    if (k == 0) return {};
    const Matrix a = transition_matrix(center);
    const Matrix a_inv = pivot_permutation_inverse(a, center.pivots());
    std::vector<LinearForm> system;
    // only the forbidden columns of compound(A^{-1}) are needed
    for (auto& j : ball_forbidden_tuples(k, n, t)) {
        auto coeffs = compound_column(a_inv, k, j);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](Elem e) { return e == 0; })) continue;
        system.push_back({std::move(j), std::move(coeffs)});
    }
    return system;
}

bool system_satisfied(const std::vector<LinearForm>& system, const PlueckerVector& v) {
    return std::all_of(system.begin(), system.end(), [&v](const LinearForm& f) { return f.satisfied_by(v); });
}

bool ball_contains_pluecker(const Subspace& center, std::size_t t, const Subspace& v) {
    require_same_field(center.field(), v.field(), "ball_contains_pluecker");
    if (center.ambient() != v.ambient() || center.dim() != v.dim())
        throw InvalidArgument("ball_contains_pluecker: center and candidate must lie in the same Grassmannian");
    if (v.dim() == 0) return true;
    return system_satisfied(ball_linear_system(center, t), pluecker_embed(v));
}

Flag::Flag(Matrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || rank(basis_) != basis_.rows())
        throw InvalidArgument("flag basis must be an invertible n x n matrix");
}

Flag Flag::standard(FieldPtr field, std::size_t n) { return Flag(Matrix::identity(std::move(field), n)); }

namespace {

void check_condition(const SchubertCondition& cond, const Subspace& w) {
    require_same_field(cond.flag.basis().field(), w.field(), "Schubert condition");
    if (cond.flag.ambient() != w.ambient()) throw InvalidArgument("Schubert condition: ambient dimensions differ");
    if (cond.nu.size() != w.dim()) throw InvalidArgument("Schubert condition: |nu| must equal dim W");
    for (std::size_t i = 0; i < cond.nu.size(); ++i)
        if (cond.nu[i] < 1 || cond.nu[i] > w.ambient() || (i > 0 && cond.nu[i] <= cond.nu[i - 1]))
            throw InvalidArgument("Schubert condition: nu must be strictly increasing in 1..n");
}

std::size_t meet_dim(const Subspace& w, const Flag& flag, std::size_t j) {
    return stack_dims(w.generator(), flag.prefix(j)).intersection;
}

}  // namespace

bool schubert_variety_contains(const SchubertCondition& cond, const Subspace& w) {
    check_condition(cond, w);
    for (std::size_t i = 0; i < cond.nu.size(); ++i)
        if (meet_dim(w, cond.flag, cond.nu[i]) < i + 1) return false;
    return true;
}

bool schubert_cell_contains(const SchubertCondition& cond, const Subspace& w) {
    if (!schubert_variety_contains(cond, w)) return false;
    for (std::size_t i = 0; i < cond.nu.size(); ++i)
        if (meet_dim(w, cond.flag, cond.nu[i] - 1) != i) return false;
    return true;
}

BigInt intersection_number(std::size_t k, std::size_t m) {
    if (k < 1 || m < 1) throw InvalidArgument("intersection_number requires k, m >= 1");
    auto factorial = [](std::size_t x) {
        BigInt r = 1;
        for (std::size_t i = 2; i <= x; ++i) r *= i;
        return r;
    };
    BigInt num = factorial(k * m), den = 1;
    for (std::size_t i = 1; i < k; ++i) num *= factorial(i);
    for (std::size_t j = 0; j < k; ++j) den *= factorial(m + j);
    return num / den;
}

std::vector<Subspace> transversal_solve(const std::vector<Subspace>& inputs, std::size_t m,
                                        const EnumerationBudget& budget) {
    if (inputs.empty()) throw InvalidArgument("transversal_solve needs at least one input subspace");
    const Subspace& first = inputs.front();
    for (const auto& u : inputs) {
        require_same_field(first.field(), u.field(), "transversal_solve");
        if (u.ambient() != first.ambient()) throw InvalidArgument("transversal_solve: ambient dimensions differ");
    }
    if (m > first.ambient()) throw InvalidArgument("transversal_solve: m exceeds the ambient dimension");
    std::vector<Subspace> out;
    for_each_subspace(
        first.field_ptr(), m, first.ambient(),
        [&](const Subspace& v) {
            for (const auto& u : inputs)
                if (stack_dims(v.generator(), u.generator()).intersection == 0) return;
            out.push_back(v);
        },
        budget);
    return out;
}

}  // namespace subcode
