#include "poly_expr.hpp"

#include "qclif/errors.hpp"

#include <cctype>

namespace qclif::cli {

namespace {

using Poly = std::vector<mpz_class>;

void trim_poly(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim_poly(out);
    return out;
}

Poly negate(Poly p) {
    for (auto& c : p) c = -c;
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim_poly(out);
    return out;
}

struct Parser {
    const std::string& text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw InputError("bad polynomial expression at position " + std::to_string(pos) + ": " + why);
    }

    Poly parse_expr() {
        bool negative = false;
        skip_space();
        if (eat('-')) negative = true;
        else eat('+');
        Poly acc = parse_term();
        if (negative) acc = negate(std::move(acc));
        for (;;) {
            skip_space();
            if (eat('+')) acc = add(acc, parse_term());
            else if (eat('-')) acc = add(acc, negate(parse_term()));
            else break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (eat('*')) acc = mul(acc, parse_factor());
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (eat('^')) {
            skip_space();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("exponent expected");
            unsigned long e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                e = e * 10 + static_cast<unsigned long>(text[pos] - '0');
                if (e > 512) fail("exponent too large");
                ++pos;
            }
            Poly out = {mpz_class(1)};
            for (unsigned long i = 0; i < e; ++i) out = mul(out, base);
            return out;
        }
        return base;
    }

    Poly parse_atom() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (c == 't') {
            ++pos;
            return {mpz_class(0), mpz_class(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                digits += text[pos++];
            return {mpz_class(digits)};
        }
        fail("expected number, t, or '('");
    }
};

} // namespace

std::vector<mpz_class> parse_poly_expr(const std::string& text) {
    Parser parser{text};
    Poly result = parser.parse_expr();
    parser.skip_space();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return result;
}

} // namespace qclif::cli
