#include "qclif/matrix.hpp"

#include "qclif/errors.hpp"

#include <sstream>

namespace qclif {

Matrix::Matrix(int rows, int cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<size_t>(rows) * cols, Scalar::of(field, 0)) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

Matrix Matrix::identity(int n, const Field& field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::of(field, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("empty matrix");
    Field f = rows[0][0].field();
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), f);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DomainError("ragged matrix rows");
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (!(rows[i][j].field() == f)) throw DomainError("field mismatch");
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::row_vector(const std::vector<Scalar>& entries) {
    return from_rows({entries});
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch");
    if (!(field_ == o.field_)) throw DomainError("field mismatch");
    Matrix out(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
    Matrix out(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
    Matrix out(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::vector<Scalar> Matrix::row(int i) const {
    std::vector<Scalar> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

Matrix Matrix::rows_slice(const std::vector<int>& indices) const {
    Matrix out(static_cast<int>(indices.size()), cols_, field_);
    for (size_t i = 0; i < indices.size(); ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(static_cast<int>(i), j) = at(indices[i], j);
    return out;
}

Matrix Matrix::stacked_with(const Matrix& below) const {
    if (cols_ != below.cols_) throw DomainError("matrix dimension mismatch");
    Matrix out(rows_ + below.rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

MatrixEchelon Matrix::rref() const {
    Matrix m = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (int j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

int Matrix::rank() const {
    return static_cast<int>(rref().pivots.size());
}

Matrix Matrix::kernel() const {
    MatrixEchelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::of(field_, 0));
        v[free] = Scalar::of(field_, 1);
        for (size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, cols_, field_);
    // The basis above is already in echelon form up to row order.
    return Matrix::from_rows(basis).rref().reduced;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DomainError("matrix not square");
    Matrix aug(rows_, 2 * cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::of(field_, 1);
    }
    MatrixEchelon e = aug.rref();
    if (static_cast<int>(e.pivots.size()) != rows_ || e.pivots.back() >= cols_)
        throw DomainError("matrix not invertible");
    Matrix out(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = e.reduced.at(i, cols_ + j);
    return out;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw DomainError("matrix not square");
    Matrix m = *this;
    Scalar result = Scalar::of(field_, 1);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Scalar::of(field_, 0);
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            result = -result;
        }
        result *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(c, j);
        }
    }
    return result;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << (i + 1 == rows_ ? "]" : ";\n");
    }
    return out.str();
}

std::vector<Scalar> row_times_matrix(const std::vector<Scalar>& v, const Matrix& m) {
    if (static_cast<int>(v.size()) != m.rows()) throw DomainError("matrix dimension mismatch");
    std::vector<Scalar> out(m.cols(), Scalar::of(m.field(), 0));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

Scalar bilinear(const std::vector<Scalar>& v, const Matrix& m, const std::vector<Scalar>& w) {
    std::vector<Scalar> vm = row_times_matrix(v, m);
    if (vm.size() != w.size()) throw DomainError("matrix dimension mismatch");
    Scalar acc = Scalar::of(m.field(), 0);
    for (size_t j = 0; j < w.size(); ++j) acc += vm[j] * w[j];
    return acc;
}

} // namespace qclif
