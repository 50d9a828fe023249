#pragma once

#include "qclif/matrix.hpp"

namespace qclif {

// Quadratic form as a symmetric Gram matrix S. The quadratic value of a row
// vector v is v*S*v^T and the polar pairing of v, w is v*S*w^T, so the
// Clifford relation downstream reads vw + wv = 2*pairing(v, w).
class QuadForm {
public:
    explicit QuadForm(Matrix gram);
    static QuadForm diagonal(const std::vector<Scalar>& d);
    static QuadForm hyperbolic(const Field& field); // [[0,1],[1,0]]

    int dim() const { return gram_.rows(); }
    const Field& field() const { return gram_.field(); }
    const Matrix& gram() const { return gram_; }

    Scalar value(const std::vector<Scalar>& v) const;
    Scalar pairing(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const;

    bool operator==(const QuadForm& o) const { return gram_ == o.gram_; }

private:
    Matrix gram_;
};

// Linear subspace with a canonical reduced-row-echelon basis, so equal
// subspaces compare equal componentwise.
class Subspace {
public:
    // Canonicalizes the spanning rows (dependent rows are dropped).
    static Subspace span(const Matrix& rows);
    static Subspace zero(int ambient, const Field& field);

    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool contains(const std::vector<Scalar>& v) const;
    Subspace intersect(const Subspace& o) const;
    int intersection_dim(const Subspace& o) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

int rank(const QuadForm& q);
Subspace radical(const QuadForm& q);

struct Diagonalization {
    std::vector<Scalar> diag; // d_1..d_n, zeros allowed
    Matrix basis;             // P with P^T * S * P = diag
};
// Symmetric congruence reduction; requires characteristic != 2 (guaranteed
// by Field construction).
Diagonalization diagonalize(const QuadForm& q);

QuadForm direct_sum(const QuadForm& a, const QuadForm& b);

} // namespace qclif
