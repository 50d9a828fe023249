#pragma once

#include "qclif/unipoly.hpp"

#include <optional>
#include <string>

namespace qclif {

// Element of Q(s), stored with monic denominator and gcd(num, den) = 1.
// The slice variable is s, with t = s^2 by convention.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::constant(1)) {}
    RatFunc(UniPoly num, UniPoly den);
    static RatFunc constant(const mpq_class& c);
    static RatFunc variable(); // s

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Evaluation at s = x; throws DomainError on a pole.
    mpq_class eval(const mpq_class& x) const;

    std::string to_string() const;

private:
    void normalize();
    UniPoly num_, den_;
};

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f);

} // namespace qclif
