#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qclif {

class UniPoly;

// Result of Euclidean division in Q[s].
struct UniPolyDivRem;

// Dense univariate polynomial over Q, used for the slice variable s and for
// series numerators/denominators. Coefficient i belongs to s^i; no trailing
// zero coefficients are stored (the zero polynomial has no coefficients).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<mpq_class> coeffs);
    static UniPoly constant(const mpq_class& c);
    static UniPoly variable(); // s

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class coeff(int i) const;
    mpq_class leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const mpq_class& c) const;

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division; divisor must be nonzero.
    UniPolyDivRem divrem(const UniPoly& divisor) const;

    UniPoly monic() const;
    mpq_class eval(const mpq_class& x) const;

    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

struct UniPolyDivRem {
    UniPoly quot, rem;
};

// Monic gcd, gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// Exact square root in Q[s], or nullopt.
std::optional<UniPoly> poly_sqrt(const UniPoly& p);

} // namespace qclif
