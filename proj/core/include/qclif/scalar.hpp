#pragma once

#include "qclif/ratfunc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace qclif {

enum class FieldKind {
    Rationals,     // Q
    Prime,         // GF(p), p an odd prime
    FunctionField, // Q(s), the transverse-slice field with t = s^2
};

class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime(uint32_t p); // rejects p = 2 and composite p
    static Field function_field() { return Field(FieldKind::FunctionField, 0); }

    FieldKind kind() const { return kind_; }
    uint32_t characteristic() const { return p_; } // 0 for Q and Q(s)
    bool is_finite() const { return kind_ == FieldKind::Prime; }

    bool operator==(const Field& o) const = default;

    std::string to_string() const; // "Q", "GF(7)", "Q(s)"

private:
    Field(FieldKind kind, uint32_t p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    uint32_t p_;
};

// Element of GF(p): value in [0, p).
struct FpElem {
    uint32_t value;
    uint32_t p;
    bool operator==(const FpElem& o) const = default;
};

// Exact scalar in one of the three supported fields. Immutable value type;
// arithmetic between different fields throws DomainError("field mismatch").
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}

    static Scalar rational(mpq_class q) { return Scalar(std::move(q)); }
    static Scalar fp(uint32_t value, uint32_t p);
    static Scalar function(RatFunc f) { return Scalar(std::move(f)); }

    // The integer n mapped into the given field.
    static Scalar of(const Field& field, long n);
    // A rational mapped into the field (mod-p image for GF(p); denominator
    // must be coprime to p).
    static Scalar of(const Field& field, const mpq_class& q);

    Field field() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Square root within the field, if one exists.
    std::optional<Scalar> sqrt() const;

    const mpq_class& as_rational() const;
    const FpElem& as_fp() const;
    const RatFunc& as_function() const;

    // Total order used only for canonical sorting/printing.
    static int compare_for_sort(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
    explicit Scalar(FpElem e) : rep_(e) {}
    explicit Scalar(RatFunc f) : rep_(std::move(f)) {}

    std::variant<mpq_class, FpElem, RatFunc> rep_;
};

uint32_t fp_inverse(uint32_t value, uint32_t p);

} // namespace qclif
