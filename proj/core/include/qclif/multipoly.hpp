#pragma once

#include "qclif/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace qclif {

// Sparse polynomial in the plane coordinates a0, a1, a2 over one field.
// Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::array<int, 3>;

    explicit MultiPoly(const Field& field) : field_(field) {}
    static MultiPoly zero(const Field& field) { return MultiPoly(field); }
    static MultiPoly constant(const Scalar& c);
    static MultiPoly monomial(const Scalar& c, const Exponents& e);
    // c0*a0 + c1*a1 + c2*a2
    static MultiPoly linear_form(const std::array<Scalar, 3>& c);

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    // Total degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int degree) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Scalar& c) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly derivative(int var) const;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Scalar& c);
    Field field_;
    std::map<Exponents, Scalar> terms_;
};

// Exact evaluation at a point of the same field.
Scalar evaluate_poly(const MultiPoly& p, const std::array<Scalar, 3>& point);

// Determinant of a symmetric matrix of linear forms (the discriminant of a
// net when the matrix is 6x6). Entries must be zero or homogeneous linear.
MultiPoly det_linear_matrix(const std::vector<std::vector<MultiPoly>>& m);

} // namespace qclif
