#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qclif {

// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as constructors are canonicalized; these helpers centralize that.

mpq_class make_rational(long num, long den = 1);

// Accepts "7", "-3/4", "12/8" (normalized on the way in).
mpq_class parse_rational(const std::string& text);

std::string rational_to_string(const mpq_class& q);

bool is_integer(const mpq_class& q);

// Exact square root, or nullopt if q is not the square of a rational.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

} // namespace qclif
