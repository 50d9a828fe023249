#include "qclif/unipoly.hpp"

#include "qclif/errors.hpp"
#include "qclif/rational.hpp"

#include <sstream>

namespace qclif {

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const mpq_class& c) {
    return UniPoly(std::vector<mpq_class>{c});
}

UniPoly UniPoly::variable() {
    return UniPoly({mpq_class(0), mpq_class(1)});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return mpq_class(0);
    return coeffs_[i];
}

mpq_class UniPoly::leading() const {
    if (is_zero()) return mpq_class(0);
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<mpq_class> out(std::max(coeffs_.size(), o.coeffs_.size()), mpq_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + (-o);
}

UniPoly UniPoly::operator-() const {
    std::vector<mpq_class> out(coeffs_);
    for (auto& c : out) c = -c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const mpq_class& c) const {
    std::vector<mpq_class> out(coeffs_);
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPolyDivRem UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero");
    std::vector<mpq_class> rem(coeffs_);
    int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<mpq_class> quot(degree() - dd + 1, mpq_class(0));
    mpq_class lead_inv = 1 / divisor.leading();
    for (int k = degree() - dd; k >= 0; --k) {
        mpq_class c = rem[k + dd] * lead_inv;
        quot[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= c * divisor.coeffs()[i];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading());
}

mpq_class UniPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        mpq_class abs_c = abs(c);
        if (i == 0 || abs_c != 1) out << rational_to_string(abs_c);
        if (i > 0) {
            if (abs_c != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::optional<UniPoly> poly_sqrt(const UniPoly& p) {
    if (p.is_zero()) return UniPoly();
    int d = p.degree();
    if (d % 2 != 0) return std::nullopt;
    auto lead_root = rational_sqrt(p.leading());
    if (!lead_root) return std::nullopt;
    // Solve for the coefficients of r with r^2 = p, from the top down.
    int h = d / 2;
    std::vector<mpq_class> r(h + 1, mpq_class(0));
    r[h] = *lead_root;
    for (int k = h - 1; k >= 0; --k) {
        // Coefficient of s^(k+h) in r^2 is 2*r[k]*r[h] plus the already-known
        // cross terms with k < i <= j < h.
        mpq_class cross(0);
        for (int i = k + 1; i < h; ++i) {
            int j = k + h - i;
            if (j < i || j >= h) continue;
            cross += (i == j ? mpq_class(r[i] * r[j]) : mpq_class(2 * r[i] * r[j]));
        }
        r[k] = (p.coeff(k + h) - cross) / (2 * r[h]);
    }
    UniPoly root{std::vector<mpq_class>(r)};
    if (root * root == p) return root;
    return std::nullopt;
}

} // namespace qclif
