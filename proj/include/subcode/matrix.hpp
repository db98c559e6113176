#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subcode/gf.hpp"

namespace subcode {

/// Strictly increasing tuple of 1-based indices (i1 < ... < ik).
using IndexTuple = std::vector<std::size_t>;

/// Dense row-major matrix over a finite field.
///
/// Element access through operator() is 0-based; everything that takes index
/// tuples (pivots, minors, compound matrices) is 1-based.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    /// Row-list literal, mostly for tests: Matrix::from_rows(f, {{1,0},{0,1}}).
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Elem>& entries() const { return data_; }

    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;

    /// Rows selected by a 1-based ascending tuple.
    Matrix select_rows(const IndexTuple& rows) const;
    /// First `count` rows.
    Matrix top_rows(std::size_t count) const;
    /// Vertical concatenation; fields and column counts must match.
    Matrix stacked(const Matrix& below) const;
    /// Copy of this matrix with entries reinterpreted in a field containing
    /// this one's prime field (codes < p map to the same constants).
    Matrix lifted_to(FieldPtr target) const;

    bool is_zero() const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;                   // R = T * M
    std::vector<std::size_t> pivots;  // 1-based, ascending
    Matrix transform;                 // T, invertible rows x rows
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Determinant of the submatrix on 1-based ascending row and column tuples,
/// by elimination with the permutation sign tracked. Empty tuples give 1.
Elem minor(const Matrix& m, const IndexTuple& rowset, const IndexTuple& colset);
Elem determinant(const Matrix& m);

/// Throws InvalidArgument when m is not square or is singular.
Matrix inverse(const Matrix& m);

struct StackDims {
    std::size_t sum;           // dim(rs U + rs V)
    std::size_t intersection;  // dim(rs U ∩ rs V)
};

StackDims stack_dims(const Matrix& u, const Matrix& v);

void require_same_field(const Field& a, const Field& b, const char* what);

}  // namespace subcode
