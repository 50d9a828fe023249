#include "qclif/power_series.hpp"

#include "qclif/errors.hpp"
#include "qclif/rational.hpp"

#include <sstream>

namespace qclif {

PowerSeries PowerSeries::substitute_negated() const {
    std::vector<mpq_class> out(c_);
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return PowerSeries(std::move(out));
}

std::string PowerSeries::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out << " ";
        out << rational_to_string(c_[i]);
    }
    return out.str();
}

PowerSeries expand_rational_series(const std::vector<mpz_class>& num,
                                   const std::vector<mpz_class>& den, int order) {
    if (order < 1) throw DomainError("order must be positive");
    if (den.empty() || den[0] == 0) throw DomainError("series not invertible");
    std::vector<mpq_class> c(static_cast<size_t>(order), mpq_class(0));
    mpq_class d0_inv = 1 / mpq_class(den[0]);
    for (int k = 0; k < order; ++k) {
        mpq_class acc = k < static_cast<int>(num.size()) ? mpq_class(num[k]) : mpq_class(0);
        for (int i = 1; i <= k && i < static_cast<int>(den.size()); ++i)
            acc -= mpq_class(den[i]) * c[k - i];
        c[k] = acc * d0_inv;
    }
    return PowerSeries(std::move(c));
}

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw DomainError("order mismatch");
    int n = a.order();
    std::vector<mpq_class> c(static_cast<size_t>(n), mpq_class(0));
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j < n; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return PowerSeries(std::move(c));
}

PowerSeries even_veronese(const PowerSeries& s) {
    std::vector<mpq_class> c;
    for (int i = 0; i < s.order(); i += 2) c.push_back(s.coeff(i));
    return PowerSeries(std::move(c));
}

} // namespace qclif
