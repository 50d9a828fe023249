#include "qclif/ratfunc.hpp"

#include "qclif/errors.hpp"

namespace qclif {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("division by zero");
    normalize();
}

RatFunc RatFunc::constant(const mpq_class& c) {
    return RatFunc(UniPoly::constant(c), UniPoly::constant(1));
}

RatFunc RatFunc::variable() {
    return RatFunc(UniPoly::variable(), UniPoly::constant(1));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).quot;
        den_ = den_.divrem(g).quot;
    }
    mpq_class lead = den_.leading();
    if (lead != 1) {
        mpq_class inv = 1 / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    return RatFunc(den_, num_);
}

mpq_class RatFunc::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw DomainError("pole of rational function");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
    if (den_ == UniPoly::constant(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
    auto n = poly_sqrt(f.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(f.den());
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

} // namespace qclif
