#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls rref/rank/minor: the oracles enumerate vectors or expand cofactors.

#include <cstdint>
#include <set>
#include <vector>

#include "subcode/grassmann.hpp"
#include "subcode/rng.hpp"

namespace subcode::testing {

inline FieldPtr gf(std::uint32_t p, std::uint32_t m = 1) { return Field::create(p, m); }

inline Matrix mat(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) { return Matrix::from_rows(f, rows); }

inline Subspace sub(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) {
    return Subspace::canonicalize(mat(f, rows));
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, CounterRng& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng.uniform(f->order()));
    return m;
}

/// Cofactor expansion along the first row.
inline Elem laplace_det(const Field& f, const std::vector<std::vector<Elem>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Elem acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Elem>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Elem> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            sub.push_back(row);
        }
        Elem term = f.mul(a[0][j], laplace_det(f, sub));
        if (j % 2 == 1) term = f.neg(term);
        acc = f.add(acc, term);
    }
    return acc;
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t n, CounterRng& rng) {
    while (true) {
        Matrix m = random_matrix(f, n, n, rng);
        std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
        if (laplace_det(*f, rows) != 0) return m;
    }
}

/// Every vector of the row space of m (with repetitions when m is rank
/// deficient), as a set.
inline std::set<std::vector<Elem>> span_vectors(const Matrix& m) {
    const Field& f = m.field();
    std::set<std::vector<Elem>> out;
    std::vector<Elem> coeff(m.rows(), 0);
    while (true) {
        std::vector<Elem> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = f.add(v[j], f.mul(coeff[i], m(i, j)));
        out.insert(v);
        std::size_t d = coeff.size();
        while (d > 0 && coeff[d - 1] == f.order() - 1) coeff[--d] = 0;
        if (d == 0) break;
        ++coeff[d - 1];
    }
    return out;
}

/// log_q of a power of q.
inline std::size_t log_q(std::size_t count, std::size_t q) {
    std::size_t d = 0;
    while (count > 1) {
        count /= q;
        ++d;
    }
    return d;
}

/// dim of a row space by counting its vectors.
inline std::size_t brute_dim(const Matrix& m) { return log_q(span_vectors(m).size(), m.field().order()); }

/// dim(rs U ∩ rs V) by counting shared vectors.
inline std::size_t brute_intersection_dim(const Matrix& u, const Matrix& v) {
    const auto su = span_vectors(u);
    const auto sv = span_vectors(v);
    std::size_t common = 0;
    for (const auto& x : su) common += sv.count(x);
    return log_q(common, u.field().order());
}

inline std::size_t brute_injection_distance(const Subspace& u, const Subspace& v) {
    return std::max(u.dim(), v.dim()) - brute_intersection_dim(u.generator(), v.generator());
}

}  // namespace subcode::testing
