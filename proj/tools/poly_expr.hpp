#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qclif::cli {

// Parses integer-coefficient polynomial expressions in t: digits, t, + - *,
// ^ with nonnegative integer exponents, and parentheses. Returns ascending
// dense coefficients. Throws InputError on malformed input.
std::vector<mpz_class> parse_poly_expr(const std::string& text);

} // namespace qclif::cli
