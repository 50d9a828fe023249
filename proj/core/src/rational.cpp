#include "qclif/rational.hpp"

#include "qclif/errors.hpp"

namespace qclif {

mpq_class make_rational(long num, long den) {
    if (den == 0) throw DomainError("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw InputError("bad rational literal: " + text);
    if (q.get_den() == 0) throw InputError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

bool is_integer(const mpq_class& q) {
    return q.get_den() == 1;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num_root, den_root, rem;
    mpz_sqrtrem(num_root.get_mpz_t(), rem.get_mpz_t(), q.get_num().get_mpz_t());
    if (rem != 0) return std::nullopt;
    mpz_sqrtrem(den_root.get_mpz_t(), rem.get_mpz_t(), q.get_den().get_mpz_t());
    if (rem != 0) return std::nullopt;
    return mpq_class(num_root, den_root);
}

} // namespace qclif
