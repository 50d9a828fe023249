#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qclif {

// Formal power series over Q truncated at an exclusive order N: exactly the
// coefficients of t^0 .. t^(N-1) are stored.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()); }
    const mpq_class& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    // t -> -t, coefficientwise sign alternation.
    PowerSeries substitute_negated() const;

    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

    std::string to_string() const;

private:
    std::vector<mpq_class> c_;
};

// First `order` coefficients of num/den as formal series; the denominator
// must have a nonzero constant term.
PowerSeries expand_rational_series(const std::vector<mpz_class>& num,
                                   const std::vector<mpz_class>& den, int order);

// Cauchy product; both operands must share the same truncation order.
PowerSeries series_product(const PowerSeries& a, const PowerSeries& b);

// Picks the even-index coefficients: output coefficient n is input 2n.
PowerSeries even_veronese(const PowerSeries& s);

} // namespace qclif
