#include "qclif/scalar.hpp"

#include "qclif/errors.hpp"
#include "qclif/rational.hpp"

namespace qclif {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

[[noreturn]] void mismatch() {
    throw DomainError("field mismatch");
}

uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b) % p; }
uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

} // namespace

Field Field::prime(uint32_t p) {
    if (p == 2) throw InputError("characteristic 2 is not supported");
    if (!is_prime(p)) throw InputError("field characteristic must be an odd prime");
    return Field(FieldKind::Prime, p);
}

std::string Field::to_string() const {
    switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::FunctionField: return "Q(s)";
    }
    return "?";
}

uint32_t fp_inverse(uint32_t value, uint32_t p) {
    if (value == 0) throw DomainError("division by zero");
    // Extended Euclid on (value, p).
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = value;
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

Scalar Scalar::fp(uint32_t value, uint32_t p) {
    Field f = Field::prime(p); // validates p
    (void)f;
    return Scalar(FpElem{value % p, p});
}

Scalar Scalar::of(const Field& field, long n) {
    switch (field.kind()) {
    case FieldKind::Rationals: return Scalar(mpq_class(n));
    case FieldKind::Prime: {
        uint32_t p = field.characteristic();
        long m = n % static_cast<long>(p);
        if (m < 0) m += p;
        return Scalar(FpElem{static_cast<uint32_t>(m), p});
    }
    case FieldKind::FunctionField: return Scalar(RatFunc::constant(mpq_class(n)));
    }
    throw DomainError("unknown field");
}

Scalar Scalar::of(const Field& field, const mpq_class& q) {
    switch (field.kind()) {
    case FieldKind::Rationals: return Scalar(q);
    case FieldKind::Prime: {
        uint32_t p = field.characteristic();
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class num_m = num % pz, den_m = den % pz;
        if (num_m < 0) num_m += pz;
        if (den_m < 0) den_m += pz;
        if (den_m == 0) throw DomainError("denominator not coprime to p");
        uint32_t n32 = static_cast<uint32_t>(num_m.get_ui());
        uint32_t d32 = static_cast<uint32_t>(den_m.get_ui());
        return Scalar(FpElem{fp_mul(n32, fp_inverse(d32, p), p), p});
    }
    case FieldKind::FunctionField: return Scalar(RatFunc::constant(q));
    }
    throw DomainError("unknown field");
}

Field Scalar::field() const {
    if (std::holds_alternative<mpq_class>(rep_)) return Field::rationals();
    if (std::holds_alternative<FpElem>(rep_)) return Field::prime(std::get<FpElem>(rep_).p);
    return Field::function_field();
}

bool Scalar::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&rep_)) return *q == 0;
    if (auto* e = std::get_if<FpElem>(&rep_)) return e->value == 0;
    return std::get<RatFunc>(rep_).is_zero();
}

bool Scalar::is_one() const {
    if (auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
    if (auto* e = std::get_if<FpElem>(&rep_)) return e->value == 1;
    const RatFunc& f = std::get<RatFunc>(rep_);
    return f.den() == UniPoly::constant(1) && f.num() == UniPoly::constant(1);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) mismatch();
    if (auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(*q + std::get<mpq_class>(o.rep_));
    if (auto* e = std::get_if<FpElem>(&rep_)) {
        const FpElem& f = std::get<FpElem>(o.rep_);
        if (e->p != f.p) mismatch();
        return Scalar(FpElem{fp_add(e->value, f.value, e->p), e->p});
    }
    return Scalar(std::get<RatFunc>(rep_) + std::get<RatFunc>(o.rep_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) mismatch();
    if (auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(*q - std::get<mpq_class>(o.rep_));
    if (auto* e = std::get_if<FpElem>(&rep_)) {
        const FpElem& f = std::get<FpElem>(o.rep_);
        if (e->p != f.p) mismatch();
        return Scalar(FpElem{fp_sub(e->value, f.value, e->p), e->p});
    }
    return Scalar(std::get<RatFunc>(rep_) - std::get<RatFunc>(o.rep_));
}

Scalar Scalar::operator-() const {
    if (auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
    if (auto* e = std::get_if<FpElem>(&rep_))
        return Scalar(FpElem{e->value == 0 ? 0 : e->p - e->value, e->p});
    return Scalar(-std::get<RatFunc>(rep_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) mismatch();
    if (auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(*q * std::get<mpq_class>(o.rep_));
    if (auto* e = std::get_if<FpElem>(&rep_)) {
        const FpElem& f = std::get<FpElem>(o.rep_);
        if (e->p != f.p) mismatch();
        return Scalar(FpElem{fp_mul(e->value, f.value, e->p), e->p});
    }
    return Scalar(std::get<RatFunc>(rep_) * std::get<RatFunc>(o.rep_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(1 / *q));
    if (auto* e = std::get_if<FpElem>(&rep_))
        return Scalar(FpElem{fp_inverse(e->value, e->p), e->p});
    return Scalar(std::get<RatFunc>(rep_).inverse());
}

bool Scalar::operator==(const Scalar& o) const {
    if (rep_.index() != o.rep_.index()) mismatch();
    if (auto* q = std::get_if<mpq_class>(&rep_)) return *q == std::get<mpq_class>(o.rep_);
    if (auto* e = std::get_if<FpElem>(&rep_)) {
        const FpElem& f = std::get<FpElem>(o.rep_);
        if (e->p != f.p) mismatch();
        return e->value == f.value;
    }
    return std::get<RatFunc>(rep_) == std::get<RatFunc>(o.rep_);
}

std::optional<Scalar> Scalar::sqrt() const {
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        auto r = rational_sqrt(*q);
        if (!r) return std::nullopt;
        return Scalar(std::move(*r));
    }
    if (auto* e = std::get_if<FpElem>(&rep_)) {
        for (uint32_t r = 0; r <= e->p / 2; ++r)
            if (fp_mul(r, r, e->p) == e->value) return Scalar(FpElem{r, e->p});
        return std::nullopt;
    }
    auto r = ratfunc_sqrt(std::get<RatFunc>(rep_));
    if (!r) return std::nullopt;
    return Scalar(std::move(*r));
}

const mpq_class& Scalar::as_rational() const {
    if (!std::holds_alternative<mpq_class>(rep_)) mismatch();
    return std::get<mpq_class>(rep_);
}

const FpElem& Scalar::as_fp() const {
    if (!std::holds_alternative<FpElem>(rep_)) mismatch();
    return std::get<FpElem>(rep_);
}

const RatFunc& Scalar::as_function() const {
    if (!std::holds_alternative<RatFunc>(rep_)) mismatch();
    return std::get<RatFunc>(rep_);
}

int Scalar::compare_for_sort(const Scalar& a, const Scalar& b) {
    std::string sa = a.to_string(), sb = b.to_string();
    if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
    return sa.compare(sb);
}

std::string Scalar::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&rep_)) return rational_to_string(*q);
    if (auto* e = std::get_if<FpElem>(&rep_)) return std::to_string(e->value);
    return std::get<RatFunc>(rep_).to_string();
}

} // namespace qclif
