#pragma once

#include "qclif/scalar.hpp"

#include <vector>

namespace qclif {

class Matrix;

// Reduced row echelon form plus the pivot column of every pivot row.
struct MatrixEchelon;

// Dense matrix over a single exact field. All elimination is exact; there is
// no pivoting heuristic beyond "first nonzero".
class Matrix {
public:
    Matrix(int rows, int cols, const Field& field);
    static Matrix identity(int n, const Field& field);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix row_vector(const std::vector<Scalar>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;
    bool operator==(const Matrix& o) const;

    bool is_zero() const;
    bool is_symmetric() const;

    std::vector<Scalar> row(int i) const;
    Matrix rows_slice(const std::vector<int>& indices) const;
    Matrix stacked_with(const Matrix& below) const;

    // Reduced row echelon form. Returns pivot column per pivot row.
    MatrixEchelon rref() const;

    int rank() const;
    // Basis of the right kernel {v : M v^T = 0}, as RREF rows.
    Matrix kernel() const;
    Matrix inverse() const; // throws DomainError if singular
    Scalar det() const;     // Gaussian elimination with division

    std::string to_string() const;

private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

struct MatrixEchelon {
    Matrix reduced;
    std::vector<int> pivots;
};

// v * M for a row vector v.
std::vector<Scalar> row_times_matrix(const std::vector<Scalar>& v, const Matrix& m);
// v * M * w^T.
Scalar bilinear(const std::vector<Scalar>& v, const Matrix& m, const std::vector<Scalar>& w);

} // namespace qclif
