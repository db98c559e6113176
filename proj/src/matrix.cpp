#include "subcode/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "subcode/errors.hpp"

namespace subcode {

void require_same_field(const Field& a, const Field& b, const char* what) {
    if (!(a == b)) throw InvalidArgument(std::string(what) + ": operands live in different fields");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw InvalidArgument("matrix entry count does not match its shape");
    for (Elem e : data_)
        if (!field_->contains(e)) throw InvalidArgument("matrix entry " + std::to_string(e) + " not in field");
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    std::vector<Elem> data;
    data.reserve(rows.size() * c);
    for (const auto& r : rows) {
        if (r.size() != c) throw InvalidArgument("ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), c, std::move(data));
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(*field_, *rhs.field_, "matrix product");
    if (cols_ != rhs.rows_) throw InvalidArgument("matrix product: inner dimensions differ");
    const Field& f = *field_;
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Elem a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, rhs(l, j)));
        }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && *field_ == *rhs.field_ && data_ == rhs.data_;
}

Matrix Matrix::select_rows(const IndexTuple& rows) const {
    Matrix out(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1 || rows[i] > rows_) throw InvalidArgument("row index out of range");
        std::copy_n(data_.begin() + (rows[i] - 1) * cols_, cols_, out.data_.begin() + i * cols_);
    }
    return out;
}

Matrix Matrix::top_rows(std::size_t count) const {
    if (count > rows_) throw InvalidArgument("top_rows: not enough rows");
    return Matrix(field_, count, cols_, std::vector<Elem>(data_.begin(), data_.begin() + count * cols_));
}

Matrix Matrix::stacked(const Matrix& below) const {
    require_same_field(*field_, *below.field_, "stack");
    if (cols_ != below.cols_) throw InvalidArgument("stack: column counts differ");
    std::vector<Elem> data = data_;
    data.insert(data.end(), below.data_.begin(), below.data_.end());
    return Matrix(field_, rows_ + below.rows_, cols_, std::move(data));
}

Matrix Matrix::lifted_to(FieldPtr target) const {
    if (target->characteristic() != field_->characteristic())
        throw InvalidArgument("lift: characteristics differ");
    for (Elem e : data_)
        if (e >= field_->characteristic()) throw InvalidArgument("lift: only prime-field entries can be lifted");
    return Matrix(std::move(target), rows_, cols_, data_);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    Matrix t = Matrix::identity(m.field_ptr(), m.rows());
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();

    auto swap_rows = [](Matrix& x, std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(a, j), x(b, j));
    };
    auto scale_row = [&f](Matrix& x, std::size_t a, Elem s) {
        for (std::size_t j = 0; j < x.cols(); ++j) x(a, j) = f.mul(x(a, j), s);
    };
    // x[a] -= s * x[b]
    auto axpy_row = [&f](Matrix& x, std::size_t a, std::size_t b, Elem s) {
        for (std::size_t j = 0; j < x.cols(); ++j) x(a, j) = f.sub(x(a, j), f.mul(s, x(b, j)));
    };

    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && r(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != lead) {
            swap_rows(r, piv, lead);
            swap_rows(t, piv, lead);
        }
        const Elem s = f.inv(r(lead, c));
        scale_row(r, lead, s);
        scale_row(t, lead, s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || r(i, c) == 0) continue;
            const Elem factor = r(i, c);
            axpy_row(r, i, lead, factor);
            axpy_row(t, i, lead, factor);
        }
        pivots.push_back(c + 1);
        ++lead;
    }
    return {std::move(r), std::move(pivots), std::move(t)};
}

std::size_t rank(const Matrix& m) {
    // elimination without the transform bookkeeping
    const Field& f = m.field();
    Matrix r = m;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, c) == 0) ++piv;
        if (piv == r.rows()) continue;
        for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(lead, j));
        const Elem s = f.inv(r(lead, c));
        for (std::size_t i = lead + 1; i < r.rows(); ++i) {
            if (r(i, c) == 0) continue;
            const Elem factor = f.mul(r(i, c), s);
            for (std::size_t j = c; j < r.cols(); ++j) r(i, j) = f.sub(r(i, j), f.mul(factor, r(lead, j)));
        }
        ++lead;
    }
    return lead;
}

namespace {

void check_tuple(const IndexTuple& t, std::size_t bound, const char* what) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1 || t[i] > bound) throw InvalidArgument(std::string(what) + " index out of range");
        if (i > 0 && t[i] <= t[i - 1]) throw InvalidArgument(std::string(what) + " tuple not strictly ascending");
    }
}

// Gaussian elimination on a dense square block; row swaps flip the sign.
Elem det_in_place(const Field& f, std::vector<Elem>& a, std::size_t n) {
    Elem det = 1;
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            negate = !negate;
        }
        const Elem p = a[c * n + c];
        det = f.mul(det, p);
        const Elem pinv = f.inv(p);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Elem x = a[i * n + c];
            if (x == 0) continue;
            const Elem factor = f.mul(x, pinv);
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
        }
    }
    return negate ? f.neg(det) : det;
}

}  // namespace

Elem minor(const Matrix& m, const IndexTuple& rowset, const IndexTuple& colset) {
    if (rowset.size() != colset.size()) throw InvalidArgument("minor: row and column tuples differ in length");
    check_tuple(rowset, m.rows(), "minor row");
    check_tuple(colset, m.cols(), "minor column");
    const std::size_t k = rowset.size();
    std::vector<Elem> block(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) block[i * k + j] = m(rowset[i] - 1, colset[j] - 1);
    return det_in_place(m.field(), block, k);
}

Elem determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    std::vector<Elem> block = m.entries();
    return det_in_place(m.field(), block, m.rows());
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    auto res = rref(m);
    if (res.pivots.size() != m.rows()) throw InvalidArgument("inverse of a singular matrix");
    return std::move(res.transform);
}

StackDims stack_dims(const Matrix& u, const Matrix& v) {
    require_same_field(u.field(), v.field(), "stack_dims");
    if (u.cols() != v.cols()) throw InvalidArgument("stack_dims: column counts differ");
    const std::size_t sum = rank(u.stacked(v));
    return {sum, rank(u) + rank(v) - sum};
}

}  // namespace subcode
